# src/services/gorenstein_service.py
import logging
from typing import List, Sequence

import numpy as np

from src.exceptions import GorensteinError, InputError
from src.models.field import PrimeField
from src.models.graded_basis import GradedBasis
from src.models.monomial import monomial_basis, monomial_index
from src.models.polynomial import SparsePolynomial
from src.models.recovered_ideal import RecoveredIdeal
from src.schemas.pairing import PairingReport
from src.services.graded_service import graded_span, ideal_pieces
from src.services.koszul_service import socle_degree
from src.services.linalg_service import IntArray, echelon_rank, kernel_basis


def _degrees(forms: Sequence[SparsePolynomial]) -> List[int]:
    degrees = []
    for form in forms:
        if form.homogeneous_degree is None:
            raise InputError(f"{form!r} is not homogeneous")
        degrees.append(form.homogeneous_degree)
    return degrees


def pairing_matrix(low: GradedBasis, high: GradedBasis, top: GradedBasis) -> IntArray:
    """
    Matrix of the multiplication pairing (S/I)_i x (S/I)_j -> (S/I)_{i+j} when the target
    piece is one-dimensional, in standard-monomial coordinates.

    Raises:
        InputError: If the target quotient is not one-dimensional or the degrees do not add up.
    """
    if top.codimension != 1:
        raise InputError(f"pairing target (S/I)_{top.ambient_degree} has dimension {top.codimension}, expected 1")
    if low.ambient_degree + high.ambient_degree != top.ambient_degree:
        raise InputError("pairing degrees do not add up to the target degree")
    index = monomial_index(top.n_vars, top.ambient_degree)
    rows = low.standard_monomials()
    columns = high.standard_monomials()
    matrix = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for r, mu in enumerate(rows):
        for c, nu in enumerate(columns):
            matrix[r, c] = top.column_normal_form(index[mu * nu])[0]
    return matrix


def pairing_ranks(pieces: Sequence[GradedBasis], socle: int) -> List[int]:
    """Ranks of the pairings into the socle degree for i = 0..socle // 2."""
    p = pieces[socle].field.p
    return [
        echelon_rank(pairing_matrix(pieces[i], pieces[socle - i], pieces[socle]), p) for i in range(socle // 2 + 1)
    ]


def gorenstein_check(gens: Sequence[SparsePolynomial], field: PrimeField, n_vars: int) -> PairingReport:
    """
    Hilbert function and multiplication pairings of S / (gens) for a full-length regular sequence.

    Parameters:
        - gens (Sequence[SparsePolynomial]): n_vars homogeneous forms, certified regular.
        - field (PrimeField): Coefficient field.
        - n_vars (int): Number of variables of S.

    Returns:
        PairingReport: socle degree, dims h(0..socle) and pairing ranks.

    Raises:
        InputError: If the number of generators differs from n_vars.
        GorensteinError: If dims[socle] != 1 or the Hilbert function is not symmetric.
    """
    socle = socle_degree(n_vars, _degrees(gens))
    pieces = ideal_pieces(gens, socle, field, n_vars)
    dims = [piece.codimension for piece in pieces]
    if dims[socle] != 1:
        logging.error(f"socle piece of dimension {dims[socle]} in degree {socle}")
        raise GorensteinError("not Gorenstein of expected socle degree")
    if any(dims[i] != dims[socle - i] for i in range(socle + 1)):
        raise GorensteinError(f"not Gorenstein of expected socle degree: asymmetric Hilbert function {dims}")
    report = PairingReport(socle=socle, dims=dims, pairing_ranks=pairing_ranks(pieces, socle))
    logging.debug(f"gorenstein_check: {report}")
    return report


def _catalecticant(functional: IntArray, n_vars: int, k: int, m: int) -> IntArray:
    """Matrix (phi(nu * mu)) with rows mu in S_{m-k} and columns nu in S_k."""
    index = monomial_index(n_vars, m)
    rows = monomial_basis(n_vars, m - k)
    columns = monomial_basis(n_vars, k)
    matrix = np.zeros((len(rows), len(columns)), dtype=np.int64)
    for r, mu in enumerate(rows):
        for c, nu in enumerate(columns):
            matrix[r, c] = functional[index[mu * nu]]
    return matrix


def recover_ideal(V: GradedBasis) -> RecoveredIdeal:
    """
    The unique ideal I with S/I Artinian Gorenstein of socle degree m and I_m = V.

    I_k consists of the forms f of degree k with f * S_{m-k} contained in V, that is the kernel
    of the catalecticant of the linear form vanishing on V.

    Raises:
        InputError: If V is not a hyperplane of S_m or has a base point.
    """
    m = V.ambient_degree
    functional = V.complement_functional()
    if functional is None:
        raise InputError(f"V not codimension 1 in S_{m} (codimension {V.codimension})")
    if graded_span(V.polynomials(), m + 1, V.field, V.n_vars).codimension != 0:
        raise InputError("base point free hypothesis violated")
    pieces = []
    for k in range(m + 1):
        matrix = _catalecticant(functional, V.n_vars, k, m)
        kernel = kernel_basis(matrix, V.field.p, len(monomial_basis(V.n_vars, k)))
        pieces.append(GradedBasis.from_vectors(V.field, V.n_vars, k, kernel))
    recovered = RecoveredIdeal(socle=m, pieces=pieces)
    logging.debug(f"recover_ideal: {recovered!r}")
    return recovered


def matches_ideal(
    recovered: RecoveredIdeal, gens: Sequence[SparsePolynomial], field: PrimeField, n_vars: int
) -> bool:
    """Whether the recovered pieces equal the pieces of (gens) in every degree up to the socle."""
    return all(
        recovered.piece(k) == graded_span(gens, k, field, n_vars) for k in range(recovered.socle + 1)
    )


def contains_forms(recovered: RecoveredIdeal, forms: Sequence[SparsePolynomial]) -> List[bool]:
    """Membership of each homogeneous form in the recovered ideal."""
    return [recovered.piece(degree).contains(form) for form, degree in zip(forms, _degrees(forms))]


def colon_degree(
    gens: Sequence[SparsePolynomial], g: SparsePolynomial, m: int, field: PrimeField, n_vars: int
) -> GradedBasis:
    """
    Degree-m piece of the colon ideal ((gens) : g) = { f in S_m : f * g in (gens) }.

    Raises:
        InputError: If g is not homogeneous or m is negative.
    """
    if g.homogeneous_degree is None:
        raise InputError(f"{g!r} is not homogeneous")
    if m < 0:
        raise InputError(f"colon ideal queried in negative degree {m}")
    target = graded_span(gens, m + g.homogeneous_degree, field, n_vars)
    columns = [target.normal_form(g.shift(nu)) for nu in monomial_basis(n_vars, m)]
    matrix = np.stack(columns, axis=1)
    return GradedBasis.from_vectors(field, n_vars, m, kernel_basis(matrix, field.p, len(columns)))


def enlargement_socle_dim(
    gens: Sequence[SparsePolynomial], f: SparsePolynomial, field: PrimeField, n_vars: int
) -> int:
    """dim (S / (gens + f))_socle, the socle degree being that of S / (gens)."""
    socle = socle_degree(n_vars, _degrees(gens))
    return graded_span(list(gens) + [f], socle, field, n_vars).codimension
