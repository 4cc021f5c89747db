# src/services/koszul_service.py
"""
Closed-form Hilbert-function combinatorics of complete intersections.

Every formula here is an alternating sum over subsets of the generator degrees, read off
the graded strands of the Koszul resolution. Index tuples follow the usual mathematical
convention and are 1-based.
"""
import logging
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from src.exceptions import InputError
from src.schemas.chi import ChiOracle

SENTINEL: Tuple[int, ...] = (0,)


def normalize_degrees(degrees: Sequence[int], e: int) -> Tuple[List[int], List[int]]:
    """
    Replace every d_i > e/2 by the residual degree e - d_i.

    Parameters:
        - degrees (Sequence[int]): Generator degrees, each in [1, e - 1].
        - e (int): Degree of the hypersurface.

    Returns:
        Tuple[List[int], List[int]]: The sorted normalized degrees and the 1-based input
        positions that were flipped.

    Raises:
        InputError: If some degree is not in [1, e - 1].
    """
    if any(d <= 0 or d >= e for d in degrees):
        raise InputError("degree out of range (primitive class would vanish or be undefined)")
    flipped = [i + 1 for i, d in enumerate(degrees) if 2 * d > e]
    normalized = sorted(e - d if 2 * d > e else d for d in degrees)
    return normalized, flipped


def _check_degrees(degrees: Sequence[int]) -> List[int]:
    if any(d < 1 for d in degrees):
        raise InputError(f"degrees must be positive, got {list(degrees)}")
    return sorted(degrees)


def _check_normalized(degrees: Sequence[int], e: int) -> List[int]:
    ordered = _check_degrees(degrees)
    if any(2 * d > e for d in ordered):
        raise InputError(f"degrees {ordered} are not normalized for e={e} (need every d_i <= e/2)")
    return ordered


def ci_hilbert(chi: ChiOracle, degrees: Sequence[int], m: int) -> int:
    """
    Hilbert function h_I(m) of a complete intersection with the given generator degrees.

    h_I(m) = sum over subsets T of (-1)^|T| chi(m - sum_{i in T} d_i); subsets whose degree
    sum exceeds m are pruned since chi vanishes in negative degree.
    """
    ordered = _check_degrees(degrees)
    total = 0

    def walk(start: int, partial: int, size: int) -> None:
        nonlocal total
        total += (-1) ** size * chi(m - partial)
        for i in range(start, len(ordered)):
            if partial + ordered[i] > m:
                break
            walk(i + 1, partial + ordered[i], size + 1)

    if m >= 0:
        walk(0, 0, 0)
    return total


def enumerate_A(degrees: Sequence[int], i: int, j: int) -> List[Tuple[int, ...]]:
    """
    The index set A(i;j) of increasing 1-based tuples (k_1 < ... < k_i) with
    d_{k_1} + ... + d_{k_i} <= d_j; A(0;j) is the sentinel {(0,)} standing for P_0 = 1.

    Raises:
        InputError: If i is not in [0, t] or j is not in [1, t].
    """
    t = len(degrees)
    if not 0 <= i <= t or not 1 <= j <= t:
        raise InputError(f"A({i};{j}) is undefined for t={t}")
    if i == 0:
        return [SENTINEL]
    bound = degrees[j - 1]
    return [
        tuple(k + 1 for k in combo)
        for combo in combinations(range(t), i)
        if sum(degrees[k] for k in combo) <= bound
    ]


def _tuple_degree(degrees: Sequence[int], indices: Tuple[int, ...]) -> int:
    return sum(degrees[k - 1] for k in indices if k != 0)


def _koszul_sum(chi: ChiOracle, degrees: Sequence[int]) -> int:
    """sum_j sum_i (-1)^i sum_{A(i;j)} chi(d_j - d_{k_1} - ... - d_{k_i})."""
    total = 0
    for j in range(1, len(degrees) + 1):
        for i in range(len(degrees) + 1):
            for indices in enumerate_A(degrees, i, j):
                total += (-1) ** i * chi(degrees[j - 1] - _tuple_degree(degrees, indices))
    return total


def a_value(degrees: Sequence[int], e: int) -> int:
    return 0 if e % 2 else sum(1 for d in degrees if 2 * d == e)


def c_value(degrees: Sequence[int], e: int) -> int:
    a = a_value(degrees, e)
    return a * (a - 1) // 2


def hilbert_diff(chi: ChiOracle, degrees: Sequence[int], e: int) -> int:
    """
    h_I(e) - h_I'(e) for I' = (P_1..P_t) and I = (P_1..P_t, Q_t..Q_1) with deg Q_i = e - d_i:
    c + sum_{i=0}^{t} sum_j sum_{A(i;j)} (-1)^(i+1) chi(d_j - d_{k_1} - ... - d_{k_i}).

    Raises:
        InputError: If the degrees are not normalized (some d_i > e/2).
    """
    ordered = _check_normalized(degrees, e)
    return c_value(ordered, e) - _koszul_sum(chi, ordered)


def ci_scheme_dim(chi: ChiOracle, degrees: Sequence[int]) -> int:
    """Dimension of the Hilbert scheme of complete intersections of the given multidegree."""
    return _koszul_sum(chi, _check_degrees(degrees))


def ci_scheme_dim_inductive(chi: ChiOracle, degrees: Sequence[int]) -> int:
    """
    The same dimension computed by fibering over the complete intersection cut out by the
    generators of strictly smaller degree: each fiber is an open subset of a Grassmannian.
    """
    ordered = _check_degrees(degrees)
    t = len(ordered)
    if t == 0:
        return 0
    top = ordered[-1]
    r = sum(1 for d in ordered if d < top)
    if r == 0:
        return t * (chi(top) - t)
    base = ci_scheme_dim_inductive(chi, ordered[:r])
    return base + (t - r) * (ci_hilbert(chi, ordered[:r], top) - (t - r))


def flag_scheme_dim(chi: ChiOracle, degrees: Sequence[int], e: int) -> int:
    """
    Dimension of the flag Hilbert scheme of pairs (hypersurface of degree e, contained
    complete intersection): dim H(d) + chi(e) - h_I(Z)(e) - 1.

    Raises:
        InputError: If the degrees are not normalized or no hypersurface contains the cycle.
    """
    ordered = _check_normalized(degrees, e)
    h = ci_hilbert(chi, ordered, e)
    if h >= chi(e):
        raise InputError("no hypersurface of degree e contains the cycle")
    return ci_scheme_dim(chi, ordered) + chi(e) - h - 1


def locus_dim(chi: ChiOracle, degrees: Sequence[int], e: int) -> int:
    """Projective dimension of the locus of hypersurfaces containing such a cycle."""
    return flag_scheme_dim(chi, degrees, e) - c_value(degrees, e)


def locus_codim(chi: ChiOracle, degrees: Sequence[int], e: int, n_vars: Optional[int] = None) -> int:
    """
    Codimension of the locus of degree-e hypersurfaces containing a complete intersection of
    multidegree (d_1..d_{k+1}): h_I(e) for I of multidegree (d_1..d_{k+1}, e-d_{k+1}..e-d_1).

    Parameters:
        - chi (ChiOracle): Hilbert function of the ambient variety of dimension 2k+1.
        - degrees (Sequence[int]): The k+1 normalized degrees.
        - e (int): Hypersurface degree.
        - n_vars (Optional[int]): Variables of S; defaults to chi.n_vars for projective chi.

    Raises:
        InputError: If n_vars is odd, t != n_vars / 2, or the degrees are not normalized.
    """
    ordered = _check_normalized(degrees, e)
    n_vars = n_vars if n_vars is not None else chi.n_vars
    if n_vars is not None and (n_vars % 2 or len(ordered) != n_vars // 2):
        raise InputError(f"a cycle of codimension k+1 in {n_vars} variables needs n_vars/2 degrees, got {ordered}")
    full = ordered + [e - d for d in ordered]
    codim = ci_hilbert(chi, full, e)
    logging.debug(f"locus_codim({ordered}, e={e}) = {codim}")
    return codim


def socle_degree(n_vars: int, degrees_full: Sequence[int]) -> int:
    """
    Socle degree of S / (zero-dimensional complete intersection): sum of degrees minus n_vars.

    Raises:
        InputError: If the number of generators differs from n_vars.
    """
    if len(degrees_full) != n_vars:
        raise InputError(f"a zero-dimensional complete intersection in {n_vars} variables needs {n_vars} generators")
    return sum(_check_degrees(degrees_full)) - n_vars
