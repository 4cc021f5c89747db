# src/models/graded_basis.py
from __future__ import annotations

from math import comb
from typing import List, Optional, Tuple, Union

import numpy as np

from src.exceptions import InputError
from src.models.field import PrimeField
from src.models.monomial import Monomial, monomial_basis
from src.models.polynomial import SparsePolynomial
from src.services.linalg_service import IntArray, MatrixLike, as_matrix, row_reduce

VectorLike = Union[IntArray, SparsePolynomial]


class GradedBasis:
    """
    A subspace of the graded piece S_m, stored as its reduced row echelon basis.

    Two generating sets of the same subspace produce identical rows, so equality of
    GradedBasis objects is equality of subspaces.

    Attributes:
        field (PrimeField): Coefficient field.
        n_vars (int): Number of variables of S.
        ambient_degree (int): The degree m of the graded piece.
        rows (IntArray): RREF rows over the canonical monomial basis of S_m.
        pivots (Tuple[int, ...]): Strictly increasing pivot columns.
    """

    def __init__(
        self, field: PrimeField, n_vars: int, ambient_degree: int, rows: IntArray, pivots: Tuple[int, ...]
    ) -> None:
        self.field = field
        self.n_vars = n_vars
        self.ambient_degree = ambient_degree
        self.rows = rows
        self.pivots = pivots
        self._pivot_row = {c: r for r, c in enumerate(pivots)}
        pivot_set = set(pivots)
        self.standard_columns: Tuple[int, ...] = tuple(c for c in range(self.ambient_dim) if c not in pivot_set)

    @classmethod
    def from_vectors(cls, field: PrimeField, n_vars: int, ambient_degree: int, vectors: MatrixLike) -> GradedBasis:
        """Echelonize the span of the given coordinate vectors."""
        width = comb(ambient_degree + n_vars - 1, n_vars - 1) if ambient_degree >= 0 else 0
        matrix = as_matrix(vectors, field.p, width)
        if matrix.shape[0] == 0:
            matrix = np.zeros((0, width), dtype=np.int64)
        if matrix.shape[1] != width:
            raise InputError(f"vectors of length {matrix.shape[1]} do not match dim S_{ambient_degree} = {width}")
        rows, pivots = row_reduce(matrix, field.p)
        return cls(field, n_vars, ambient_degree, rows, pivots)

    @classmethod
    def zero(cls, field: PrimeField, n_vars: int, ambient_degree: int) -> GradedBasis:
        return cls.from_vectors(field, n_vars, ambient_degree, np.zeros((0, 0), dtype=np.int64))

    @classmethod
    def whole(cls, field: PrimeField, n_vars: int, ambient_degree: int) -> GradedBasis:
        width = len(monomial_basis(n_vars, ambient_degree))
        return cls.from_vectors(field, n_vars, ambient_degree, np.eye(width, dtype=np.int64))

    @property
    def ambient_dim(self) -> int:
        return len(monomial_basis(self.n_vars, self.ambient_degree))

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    @property
    def codimension(self) -> int:
        return self.ambient_dim - self.dimension

    def standard_monomials(self) -> List[Monomial]:
        """Monomials of the non-pivot columns; their classes form a basis of S_m / V."""
        basis = monomial_basis(self.n_vars, self.ambient_degree)
        return [basis[c] for c in self.standard_columns]

    def _vector(self, element: VectorLike) -> IntArray:
        if isinstance(element, SparsePolynomial):
            return element.to_vector(self.ambient_degree)
        vector = np.mod(np.asarray(element, dtype=np.int64), self.field.p)
        if vector.shape != (self.ambient_dim,):
            raise InputError(f"vector of shape {vector.shape} does not live in S_{self.ambient_degree}")
        return vector

    def reduce(self, element: VectorLike) -> IntArray:
        """Remainder of an element after clearing every pivot column."""
        vector = self._vector(element).copy()
        p = self.field.p
        for r, c in enumerate(self.pivots):
            coefficient = int(vector[c])
            if coefficient:
                vector = (vector - coefficient * self.rows[r]) % p
        return vector

    def normal_form(self, element: VectorLike) -> IntArray:
        """Coordinates of the class of an element in S_m / V over the standard monomials."""
        return self.reduce(element)[list(self.standard_columns)]

    def column_normal_form(self, column: int) -> IntArray:
        """Normal form of a single basis monomial, read directly off the RREF rows."""
        if column in self._pivot_row:
            return (-self.rows[self._pivot_row[column]][list(self.standard_columns)]) % self.field.p
        unit = np.zeros(len(self.standard_columns), dtype=np.int64)
        unit[self.standard_columns.index(column)] = 1
        return unit

    def contains(self, element: VectorLike) -> bool:
        return not self.reduce(element).any()

    def contains_space(self, other: GradedBasis) -> bool:
        self._check_same_piece(other)
        return all(self.contains(row) for row in other.rows)

    def polynomials(self) -> List[SparsePolynomial]:
        return [SparsePolynomial.from_vector(self.field, self.n_vars, self.ambient_degree, row) for row in self.rows]

    def complement_functional(self) -> Optional[IntArray]:
        """
        For a hyperplane V, the linear form on S_m with kernel V, normalized to 1 at the
        unique standard column; None when V is not of codimension 1.
        """
        if self.codimension != 1:
            return None
        (free,) = self.standard_columns
        functional = np.zeros(self.ambient_dim, dtype=np.int64)
        functional[free] = 1
        for r, c in enumerate(self.pivots):
            functional[c] = (-self.rows[r, free]) % self.field.p
        return functional

    def _check_same_piece(self, other: GradedBasis) -> None:
        if (other.field, other.n_vars, other.ambient_degree) != (self.field, self.n_vars, self.ambient_degree):
            raise InputError("graded bases live in different graded pieces")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedBasis):
            return NotImplemented
        return (
            (self.field, self.n_vars, self.ambient_degree) == (other.field, other.n_vars, other.ambient_degree)
            and self.pivots == other.pivots
            and bool(np.array_equal(self.rows, other.rows))
        )

    def __repr__(self) -> str:
        return (
            f"<GradedBasis(n_vars={self.n_vars}, ambient_degree={self.ambient_degree}, "
            f"dimension={self.dimension}, ambient_dim={self.ambient_dim})>"
        )
