# tests/helpers.py
from typing import Dict, Tuple

from src.models.field import PrimeField
from src.models.monomial import Monomial
from src.models.polynomial import SparsePolynomial
from src.models.witness import CIWitness
from src.services.witness_service import witness_from_cycle


# 1. Build a form from an exponent -> coefficient map
def form(field: PrimeField, terms: Dict[Tuple[int, ...], int]) -> SparsePolynomial:
    """Polynomial with the given terms; the number of variables is read off the exponents."""
    n_vars = len(next(iter(terms)))
    return SparsePolynomial(field, n_vars, {Monomial(exponents): c for exponents, c in terms.items()})


# 2. Variable x_index
def x(field: PrimeField, n_vars: int, index: int) -> SparsePolynomial:
    return SparsePolynomial.variable(field, n_vars, index)


# 3. The Fermat quartic over F_17 with the line x0 = 2 x1, x2 = 2 x3
def fermat_line_witness(field: PrimeField) -> CIWitness:
    """
    Since 2^4 = 16 = -1 mod 17, the line V(x0 - 2 x1, x2 - 2 x3) lies on x0^4 + x1^4 + x2^4 + x3^4.

    Args:
        field (PrimeField): F_17.

    Returns:
        CIWitness: The certified witness with cofactors from decompose.
    """
    F = form(field, {(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1})
    P = [form(field, {(1, 0, 0, 0): 1, (0, 1, 0, 0): -2}), form(field, {(0, 0, 1, 0): 1, (0, 0, 0, 1): -2})]
    return witness_from_cycle(F, P)
