# src/models/polynomial.py
from __future__ import annotations

from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.exceptions import InputError
from src.models.field import PrimeField, PrimeFieldElement
from src.models.monomial import Monomial, monomial_basis, monomial_index
from src.services.linalg_service import IntArray


class SparsePolynomial:
    """
    A polynomial over F_p stored as a map from monomials to nonzero residues.

    Attributes:
        field (PrimeField): Coefficient field.
        n_vars (int): Number of variables of the ambient ring S.
        terms (Dict[Monomial, int]): Nonzero coefficients keyed by monomial.
        homogeneous_degree (Optional[int]): Common degree of all terms, or the declared degree
            of the zero form; None for inhomogeneous polynomials.
    """

    __slots__ = ("field", "n_vars", "_terms", "_degree")

    def __init__(
        self,
        field: PrimeField,
        n_vars: int,
        terms: Optional[Mapping[Monomial, int]] = None,
        homogeneous_degree: Optional[int] = None,
    ) -> None:
        self.field = field
        self.n_vars = n_vars
        cleaned: Dict[Monomial, int] = {}
        for monomial, coefficient in (terms or {}).items():
            if monomial.n_vars != n_vars:
                raise InputError(f"monomial {monomial} does not have {n_vars} variables")
            value = field.reduce(int(coefficient))
            if value:
                cleaned[monomial] = value
        self._terms = cleaned
        degrees = {monomial.degree for monomial in cleaned}
        if homogeneous_degree is not None and degrees - {homogeneous_degree}:
            raise InputError(f"terms of degree {sorted(degrees)} in a form declared of degree {homogeneous_degree}")
        if homogeneous_degree is None and len(degrees) == 1:
            homogeneous_degree = degrees.pop()
        self._degree = homogeneous_degree

    @classmethod
    def zero(cls, field: PrimeField, n_vars: int, degree: Optional[int] = None) -> SparsePolynomial:
        return cls(field, n_vars, {}, degree)

    @classmethod
    def monomial(cls, field: PrimeField, monomial: Monomial, coefficient: int = 1) -> SparsePolynomial:
        return cls(field, monomial.n_vars, {monomial: coefficient})

    @classmethod
    def variable(cls, field: PrimeField, n_vars: int, index: int) -> SparsePolynomial:
        return cls.monomial(field, Monomial.variable(n_vars, index))

    @classmethod
    def from_vector(cls, field: PrimeField, n_vars: int, m: int, vector: Sequence[int]) -> SparsePolynomial:
        """Form of degree m with the given coordinates in the canonical basis of S_m."""
        basis = monomial_basis(n_vars, m)
        if len(vector) != len(basis):
            raise InputError(f"expected {len(basis)} coordinates for degree {m}, got {len(vector)}")
        return cls(field, n_vars, {mon: int(c) for mon, c in zip(basis, vector) if int(c)}, m)

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    @property
    def homogeneous_degree(self) -> Optional[int]:
        return self._degree

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> PrimeFieldElement:
        return self.field(self._terms.get(monomial, 0))

    def items(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(sorted(self._terms.items(), key=lambda item: item[0].grevlex_key()))

    def __len__(self) -> int:
        return len(self._terms)

    def _check_compatible(self, other: SparsePolynomial) -> None:
        if other.field != self.field or other.n_vars != self.n_vars:
            raise InputError("polynomials live in different rings")

    def _combined_degree(self, other: SparsePolynomial) -> Optional[int]:
        if self.is_zero():
            return other._degree
        if other.is_zero():
            return self._degree
        return self._degree if self._degree == other._degree else None

    def __add__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._check_compatible(other)
        terms = dict(self._terms)
        for monomial, coefficient in other._terms.items():
            terms[monomial] = terms.get(monomial, 0) + coefficient
        return SparsePolynomial(self.field, self.n_vars, terms, self._combined_degree(other))

    def __neg__(self) -> SparsePolynomial:
        return self.scale(-1)

    def __sub__(self, other: SparsePolynomial) -> SparsePolynomial:
        return self + (-other)

    def scale(self, scalar: int) -> SparsePolynomial:
        return SparsePolynomial(
            self.field, self.n_vars, {mon: c * int(scalar) for mon, c in self._terms.items()}, self._degree
        )

    def __mul__(self, other: SparsePolynomial) -> SparsePolynomial:
        self._check_compatible(other)
        p = self.field.p
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                product = m1 * m2
                terms[product] = (terms.get(product, 0) + c1 * c2) % p
        degree = None
        if self._degree is not None and other._degree is not None:
            degree = self._degree + other._degree
        return SparsePolynomial(self.field, self.n_vars, terms, degree)

    def shift(self, monomial: Monomial) -> SparsePolynomial:
        """Product with a monomial."""
        degree = None if self._degree is None else self._degree + monomial.degree
        return SparsePolynomial(self.field, self.n_vars, {mon * monomial: c for mon, c in self._terms.items()}, degree)

    def derivative(self, index: int) -> SparsePolynomial:
        """Partial derivative with respect to x_index."""
        if not 0 <= index < self.n_vars:
            raise InputError(f"variable index {index} out of range")
        terms: Dict[Monomial, int] = {}
        for monomial, coefficient in self._terms.items():
            power = monomial.exponents[index]
            if power:
                lowered = list(monomial.exponents)
                lowered[index] -= 1
                terms[Monomial(tuple(lowered))] = coefficient * power
        degree = None if self._degree is None else max(self._degree - 1, 0)
        return SparsePolynomial(self.field, self.n_vars, terms, degree)

    def to_vector(self, m: Optional[int] = None) -> IntArray:
        """Coordinates in the canonical basis of S_m (m defaults to the form's degree)."""
        degree = self._degree if m is None else m
        if degree is None:
            raise InputError("inhomogeneous polynomial has no graded coordinates")
        if self._degree is not None and self._degree != degree and not self.is_zero():
            raise InputError(f"form of degree {self._degree} has no coordinates in degree {degree}")
        index = monomial_index(self.n_vars, degree)
        vector = np.zeros(len(index), dtype=np.int64)
        for monomial, coefficient in self._terms.items():
            vector[index[monomial]] = coefficient
        return vector

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.field == other.field and self.n_vars == other.n_vars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.field.p, self.n_vars, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return (
            f"<SparsePolynomial(n_vars={self.n_vars}, p={self.field.p}, "
            f"degree={self._degree}, terms={len(self._terms)})>"
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}*{mon}" for mon, c in self.items())
