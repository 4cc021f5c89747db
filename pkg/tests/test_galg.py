# tests/test_galg.py
from math import comb

import numpy as np
import pytest

from src.exceptions import InputError
from src.models.field import PrimeField
from src.models.graded_basis import GradedBasis
from src.models.monomial import Monomial
from src.models.polynomial import SparsePolynomial
from src.services.graded_service import graded_span, monomials_of_degree
from src.services.linalg_service import echelon_rank, kernel_basis, kernel_dim, row_reduce, solve_linear
from tests.helpers import form, x


# Prime field
def test_field_arithmetic(f17: PrimeField) -> None:
    """Test residues reduce mod p and satisfy the field axioms on a sample."""
    # Arrange
    a, b = f17(5), f17(7)

    # Act
    product = a * b
    quotient = product / b

    # Assert
    assert int(product) == 1
    assert quotient == a
    assert int(a + 12) == 0
    assert int(-a) == 12
    assert a * a.inv() == f17(1)
    assert int(f17(3) ** -1) == 6


def test_field_inverse_of_zero_raises(f17: PrimeField) -> None:
    """Test that 0 has no inverse."""
    # Act / Assert
    with pytest.raises(ZeroDivisionError):
        f17(0).inv()


@pytest.mark.parametrize("p", [1, 15, 2**31 + 11])
def test_field_rejects_bad_modulus(p: int) -> None:
    """Test that non-primes and moduli outside the int64-safe range are rejected."""
    # Act / Assert
    with pytest.raises(InputError):
        PrimeField(p)


def test_field_elements_of_different_fields_do_not_mix(f17: PrimeField) -> None:
    """Test that residues of different fields cannot be combined."""
    # Act / Assert
    with pytest.raises(InputError):
        f17(1) + PrimeField(19)(1)


# Monomials
@pytest.mark.parametrize("n_vars, m, expected", [(4, 2, 10), (2, 0, 1), (4, -1, 0), (6, 3, 56)])
def test_monomials_of_degree_count(n_vars: int, m: int, expected: int) -> None:
    """Test the size of the monomial basis of S_m."""
    # Act
    monomials = monomials_of_degree(n_vars, m)

    # Assert
    assert len(monomials) == expected
    assert all(mon.degree == m for mon in monomials)
    if m >= 0:
        assert len(monomials) == comb(m + n_vars - 1, n_vars - 1)


def test_monomials_follow_grevlex() -> None:
    """Test the canonical order in 3 variables, degree 2."""
    # Act
    monomials = monomials_of_degree(3, 2)

    # Assert
    assert [mon.exponents for mon in monomials] == [
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    ]


def test_monomial_rejects_negative_exponents() -> None:
    """Test the exponent invariant."""
    # Act / Assert
    with pytest.raises(InputError):
        Monomial((1, -1))


# Polynomials
def test_polynomial_drops_zero_coefficients(f17: PrimeField) -> None:
    """Test that coefficients are reduced and zeros are not stored."""
    # Act
    poly = form(f17, {(1, 0): 17, (0, 1): 18})

    # Assert
    assert len(poly) == 1
    assert int(poly.coefficient(Monomial((0, 1)))) == 1
    assert poly.homogeneous_degree == 1


def test_polynomial_declared_degree_is_checked(f17: PrimeField) -> None:
    """Test that a term of the wrong degree is rejected."""
    # Act / Assert
    with pytest.raises(InputError):
        SparsePolynomial(f17, 2, {Monomial((2, 0)): 1}, homogeneous_degree=3)


def test_polynomial_product_and_derivative(f17: PrimeField) -> None:
    """Test (x0 + x1)^2 and its partial derivative."""
    # Arrange
    linear = x(f17, 2, 0) + x(f17, 2, 1)

    # Act
    square = linear * linear
    partial = square.derivative(0)

    # Assert
    assert square == form(f17, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert partial == form(f17, {(1, 0): 2, (0, 1): 2})
    assert square.to_vector().tolist() == [1, 2, 1]


def test_inhomogeneous_polynomial_has_no_degree(f17: PrimeField) -> None:
    """Test that mixing degrees leaves the form without a homogeneous degree."""
    # Act
    poly = form(f17, {(2, 0): 1, (1, 0): 1})

    # Assert
    assert poly.homogeneous_degree is None
    with pytest.raises(InputError):
        poly.to_vector()


# Linear algebra
def test_echelon_rank_of_identity() -> None:
    """Test the rank of the 3x3 identity."""
    # Act / Assert
    assert echelon_rank(np.eye(3, dtype=np.int64), 17) == 3


def test_kernel_dim_of_zero_matrix() -> None:
    """Test that the zero 2x5 matrix has a 5-dimensional kernel."""
    # Act / Assert
    assert kernel_dim(np.zeros((2, 5), dtype=np.int64), 17) == 5


def test_rank_of_permutation_matrix() -> None:
    """Test the rank of [[0, 1], [1, 0]]."""
    # Act / Assert
    assert echelon_rank([[0, 1], [1, 0]], 2147483647) == 2


def test_row_reduce_is_reduced_echelon() -> None:
    """Test pivots and unit pivot entries over F_17."""
    # Act
    rows, pivots = row_reduce([[2, 4, 6], [1, 2, 4]], 17)

    # Assert
    assert pivots == (0, 2)
    assert rows.tolist() == [[1, 2, 0], [0, 0, 1]]


def test_kernel_basis_is_annihilated() -> None:
    """Test that every kernel vector solves A x = 0."""
    # Arrange
    p = 2147483647
    matrix = np.array([[1, 2, 3, 4], [2, 4, 6, 9]], dtype=np.int64)

    # Act
    kernel = kernel_basis(matrix, p)

    # Assert
    assert kernel.shape == (2, 4)
    assert not ((matrix @ kernel.T) % p).any()


def test_solve_linear_consistent_and_inconsistent() -> None:
    """Test one solution for a consistent system and None otherwise."""
    # Arrange
    matrix = [[1, 1], [1, 1]]

    # Act
    solution = solve_linear(matrix, [3, 3], 17)
    missing = solve_linear(matrix, [3, 4], 17)

    # Assert
    assert solution is not None and solution.tolist() == [3, 0]
    assert missing is None


def test_solve_linear_rejects_dimension_mismatch() -> None:
    """Test a right-hand side with the wrong length."""
    # Act / Assert
    with pytest.raises(InputError):
        solve_linear([[1, 0], [0, 1]], [1, 2, 3], 17)


def test_ragged_matrix_is_rejected() -> None:
    """Test that rows of different lengths are an input error."""
    # Act / Assert
    with pytest.raises(InputError):
        echelon_rank([[1, 2], [3]], 17)


# Graded spans
def test_graded_span_of_two_variables(field: PrimeField) -> None:
    """Test that (x0, x1) has dimension 7 in degree 2 in 4 variables."""
    # Act
    span = graded_span([x(field, 4, 0), x(field, 4, 1)], 2, field, 4)

    # Assert
    assert span.dimension == 7
    assert span.codimension == 3


def test_graded_span_of_single_monomial(field: PrimeField) -> None:
    """Test that (x0^2) has dimension 1 in degree 2 in 2 variables."""
    # Act
    span = graded_span([form(field, {(2, 0): 1})], 2, field, 2)

    # Assert
    assert span.dimension == 1


def test_graded_span_of_no_generators(field: PrimeField) -> None:
    """Test that the empty ideal has the zero subspace as every piece."""
    # Act
    span = graded_span([], 3, field, 4)

    # Assert
    assert span.dimension == 0
    assert span.codimension == 20


def test_graded_span_rejects_inhomogeneous_generators(field: PrimeField) -> None:
    """Test that an inhomogeneous generator is an input error."""
    # Act / Assert
    with pytest.raises(InputError):
        graded_span([form(field, {(2, 0): 1, (1, 0): 1})], 2, field, 2)


def test_graded_span_skips_generators_of_higher_degree(field: PrimeField) -> None:
    """Test that a cubic contributes nothing to degree 2."""
    # Act
    span = graded_span([form(field, {(3, 0): 1})], 2, field, 2)

    # Assert
    assert span.dimension == 0


def test_echelon_form_is_canonical(field: PrimeField) -> None:
    """Test that two generating sets of the same subspace give equal bases."""
    # Arrange
    a, b = x(field, 3, 0), x(field, 3, 1)

    # Act
    first = graded_span([a, b], 2, field, 3)
    second = graded_span([a + b, (a - b).scale(5), b.scale(3)], 2, field, 3)

    # Assert
    assert first == second


def test_graded_span_is_closed_under_multiplication(field: PrimeField) -> None:
    """Test that x_i * I_m lies in I_{m+1}."""
    # Arrange
    gens = [form(field, {(1, 1, 0): 1, (0, 0, 2): 3}), form(field, {(1, 0, 0): 1, (0, 0, 1): 2})]
    low = graded_span(gens, 2, field, 3)
    high = graded_span(gens, 3, field, 3)

    # Act / Assert
    for element in low.polynomials():
        for i in range(3):
            assert high.contains(element.shift(Monomial.variable(3, i)))


def test_graded_span_is_monotone(field: PrimeField) -> None:
    """Test that adding a generator never decreases the dimension."""
    # Arrange
    gens = [x(field, 3, 0)]

    # Act
    before = graded_span(gens, 2, field, 3).dimension
    after = graded_span(gens + [form(field, {(0, 1, 1): 1})], 2, field, 3).dimension

    # Assert
    assert after >= before


def test_normal_form_and_complement_functional(field: PrimeField) -> None:
    """Test coordinates in S_2 / span{x^2, y^2} and the functional vanishing on it."""
    # Arrange
    V = graded_span([form(field, {(2, 0): 1}), form(field, {(0, 2): 1})], 2, field, 2)

    # Act
    functional = V.complement_functional()
    normal = V.normal_form(form(field, {(2, 0): 3, (1, 1): 5}))

    # Assert
    assert V.standard_monomials() == [Monomial((1, 1))]
    assert functional is not None and functional.tolist() == [0, 1, 0]
    assert normal.tolist() == [5]


def test_complement_functional_needs_codimension_one(field: PrimeField) -> None:
    """Test that a subspace of codimension 2 has no complement functional."""
    # Act
    V = GradedBasis.from_vectors(field, 2, 2, [[1, 0, 0]])

    # Assert
    assert V.complement_functional() is None
