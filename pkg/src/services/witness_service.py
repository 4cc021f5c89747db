# src/services/witness_service.py
import logging
from typing import List, Literal, Optional, Sequence

import numpy as np

from src.config import MAX_ATTEMPTS
from src.exceptions import CertificationExhausted, InputError
from src.models.field import PrimeField
from src.models.monomial import monomial_basis
from src.models.polynomial import SparsePolynomial
from src.models.witness import CIWitness
from src.schemas.certificate import Certificate
from src.schemas.chi import ChiOracle
from src.services.cycle_service import decompose
from src.services.graded_service import graded_span
from src.services.koszul_service import ci_hilbert


def _draw_forms(
    rng: np.random.Generator, field: PrimeField, n_vars: int, degrees: Sequence[int]
) -> List[SparsePolynomial]:
    forms = []
    for d in degrees:
        if d < 0:
            raise InputError(f"cannot draw a form of negative degree {d}")
        width = len(monomial_basis(n_vars, d))
        coefficients = rng.integers(0, field.p, size=width, dtype=np.int64)
        forms.append(SparsePolynomial.from_vector(field, n_vars, d, coefficients))
    return forms


def random_forms(seed: int, n_vars: int, degrees: Sequence[int], field: PrimeField) -> List[SparsePolynomial]:
    """
    Dense random homogeneous forms with coefficients uniform in F_p.

    The output is a deterministic function of (seed, p, n_vars, degrees).
    """
    if any(d < 1 for d in degrees):
        raise InputError(f"degrees must be positive, got {list(degrees)}")
    return _draw_forms(np.random.default_rng(seed), field, n_vars, degrees)


def brute_hilbert(generators: Sequence[SparsePolynomial], m: int, field: PrimeField, n_vars: int) -> int:
    """dim S_m - dim I_m for the ideal generated by the forms, by exact rank."""
    if m < 0:
        return 0
    return graded_span(generators, m, field, n_vars).codimension


def certify_regular_sequence(
    forms: Sequence[SparsePolynomial],
    field: PrimeField,
    n_vars: int,
    mode: Optional[Literal["full", "partial"]] = None,
    bound: Optional[int] = None,
) -> Certificate:
    """
    Certify that homogeneous forms are a regular sequence.

    With as many forms as variables the test is exact: h(socle + 1) = 0 means the affine zero
    locus is the origin alone. With fewer forms, the brute-force Hilbert function must agree
    with the complete-intersection formula in every degree up to `bound` (default: the sum of
    the degrees); that certificate is heuristic.

    Raises:
        InputError: If there are more forms than variables, a form is inhomogeneous, or the
            requested mode does not fit the number of forms.
    """
    if len(forms) > n_vars:
        raise InputError(f"{len(forms)} forms cannot be a regular sequence in {n_vars} variables")
    degrees: List[int] = []
    for form in forms:
        if form.homogeneous_degree is None:
            raise InputError(f"{form!r} is not homogeneous")
        degrees.append(form.homogeneous_degree)
    if mode is None:
        mode = "full" if len(forms) == n_vars else "partial"
    if mode == "full":
        if len(forms) != n_vars:
            raise InputError("full-length certification needs exactly n_vars forms")
        top = sum(degrees) - n_vars + 1
        passed = brute_hilbert(forms, top, field, n_vars) == 0
        return Certificate(
            mode="full", degrees=degrees, verified_through=top, passed=passed, failed_at=None if passed else top
        )
    chi = ChiOracle.projective(n_vars)
    top = sum(degrees) if bound is None else bound
    for m in range(top + 1):
        if brute_hilbert(forms, m, field, n_vars) != ci_hilbert(chi, degrees, m):
            return Certificate(mode="partial", degrees=degrees, verified_through=m, passed=False, failed_at=m)
    return Certificate(mode="partial", degrees=degrees, verified_through=top, passed=True)


def random_witness(
    field: PrimeField,
    n_vars: int,
    degrees: Sequence[int],
    seed: int,
    e: Optional[int] = None,
    max_attempts: int = MAX_ATTEMPTS,
) -> CIWitness:
    """
    Draw a certified random complete intersection, with cofactors Q and F = sum P_i Q_i when e
    is given.

    Every attempt draws fresh forms from the same seeded stream; the certificate covers the
    whole sequence (P, Q).

    Raises:
        InputError: If the requested sequence is longer than the number of variables.
        CertificationExhausted: If no draw passes certification within max_attempts.
    """
    ordered = sorted(degrees)
    q_degrees = [e - d for d in ordered] if e is not None else []
    if any(d < 1 for d in ordered + q_degrees):
        raise InputError(f"degrees {ordered} need 1 <= d_i <= e - 1 (e={e})")
    if len(ordered) + len(q_degrees) > n_vars:
        raise InputError(f"{len(ordered) + len(q_degrees)} generators exceed {n_vars} variables")
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        P = _draw_forms(rng, field, n_vars, ordered)
        Q = _draw_forms(rng, field, n_vars, q_degrees) if e is not None else []
        certificate = certify_regular_sequence(P + Q, field, n_vars)
        if certificate.passed:
            certificate = certificate.model_copy(update={"attempts": attempt})
            if e is None:
                return CIWitness(field=field, n_vars=n_vars, P=tuple(P), certificate=certificate, seed=seed)
            witness = CIWitness(field=field, n_vars=n_vars, P=tuple(P), Q=tuple(Q), e=e, seed=seed)
            return CIWitness(
                field=field,
                n_vars=n_vars,
                P=witness.P,
                Q=witness.Q,
                F=witness.expand(),
                e=e,
                certificate=certificate,
                seed=seed,
            )
        logging.warning(f"seed {seed}: draw {attempt} failed certification at degree {certificate.failed_at}")
    raise CertificationExhausted(f"no certified witness for degrees {ordered}, e={e} after {max_attempts} attempts")


def witness_from_cycle(F: SparsePolynomial, P: Sequence[SparsePolynomial]) -> CIWitness:
    """
    Witness for a hypersurface F containing the complete intersection V(P): the cofactors
    come from decompose, and the full sequence (P, Q) is certified when it has n_vars forms.

    Raises:
        InputError: If F does not contain V(P) or (P, Q) fails certification.
    """
    Q = decompose(F, P)
    e = F.homogeneous_degree
    witness = CIWitness(field=F.field, n_vars=F.n_vars, P=tuple(P), Q=tuple(Q), F=F, e=e)
    certificate = certify_regular_sequence(witness.generators, F.field, F.n_vars)
    if not certificate.passed:
        raise InputError(f"(P, Q) is not a complete intersection (failed at degree {certificate.failed_at})")
    return CIWitness(field=F.field, n_vars=F.n_vars, P=witness.P, Q=witness.Q, F=F, e=e, certificate=certificate)


def smoothness_check(witness: CIWitness) -> bool:
    """
    Jacobian test: the partials of F form a regular sequence, i.e. the Jacobian ring vanishes
    in degree n_vars * (e - 2) + 1. Slow for large degrees.
    """
    if witness.F is None or witness.e is None:
        raise InputError("smoothness check needs the hypersurface F")
    partials = [witness.F.derivative(j) for j in range(witness.n_vars)]
    top = witness.n_vars * (witness.e - 2) + 1
    return brute_hilbert(partials, top, witness.field, witness.n_vars) == 0
