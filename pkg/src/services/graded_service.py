# src/services/graded_service.py
import logging
from typing import List, Sequence

import numpy as np

from src.exceptions import InputError
from src.models.field import PrimeField
from src.models.graded_basis import GradedBasis
from src.models.monomial import Monomial, monomial_basis
from src.models.polynomial import SparsePolynomial
from src.services.linalg_service import IntArray


def monomials_of_degree(n_vars: int, m: int) -> List[Monomial]:
    """
    All monomials of total degree m in n_vars variables, in descending grevlex order.

    Parameters:
        - n_vars (int): Number of variables, at least 1.
        - m (int): Total degree; negative degrees yield an empty list.

    Returns:
        List[Monomial]: C(m + n_vars - 1, n_vars - 1) monomials for m >= 0.
    """
    return list(monomial_basis(n_vars, m))


def _check_generators(generators: Sequence[SparsePolynomial]) -> None:
    for g in generators:
        if g.homogeneous_degree is None:
            raise InputError(f"generator {g} is not homogeneous")


def graded_span(
    generators: Sequence[SparsePolynomial], m: int, field: PrimeField, n_vars: int
) -> GradedBasis:
    """
    Degree-m piece of the ideal generated by homogeneous forms.

    The rows spanned are all products mu * g with mu a monomial of degree m - deg g;
    generators of degree above m and zero forms contribute nothing.

    Parameters:
        - generators (Sequence[SparsePolynomial]): Homogeneous generators.
        - m (int): Target degree.
        - field (PrimeField): Coefficient field (also used when there are no generators).
        - n_vars (int): Number of variables of S.

    Returns:
        GradedBasis: The echelonized subspace I_m of S_m.

    Raises:
        InputError: If a generator is inhomogeneous or lives in another ring.
    """
    _check_generators(generators)
    width = len(monomial_basis(n_vars, m))
    vectors: List[IntArray] = []
    for g in generators:
        if g.field != field or g.n_vars != n_vars:
            raise InputError("generator lives in a different ring")
        degree = g.homogeneous_degree
        assert degree is not None
        if g.is_zero() or degree > m:
            continue
        for mu in monomial_basis(n_vars, m - degree):
            vectors.append(g.shift(mu).to_vector(m))
    logging.debug(f"graded_span: degree {m}, {len(vectors)} rows x {width} columns")
    matrix = np.array(vectors, dtype=np.int64) if vectors else np.zeros((0, width), dtype=np.int64)
    return GradedBasis.from_vectors(field, n_vars, m, matrix)


def ideal_pieces(
    generators: Sequence[SparsePolynomial], top: int, field: PrimeField, n_vars: int
) -> List[GradedBasis]:
    """Graded pieces I_0, ..., I_top of the ideal generated by the forms."""
    return [graded_span(generators, m, field, n_vars) for m in range(top + 1)]
