# src/models/monomial.py
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, Tuple

from src.exceptions import InputError


@dataclass(frozen=True)
class Monomial:
    """
    A monomial x_0^a_0 ... x_{n-1}^a_{n-1} given by its exponent vector.

    Attributes:
        exponents (Tuple[int, ...]): Non-negative exponents, one per variable.
    """

    exponents: Tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.exponents):
            raise InputError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n_vars: int) -> Monomial:
        return cls((0,) * n_vars)

    @classmethod
    def variable(cls, n_vars: int, index: int) -> Monomial:
        return cls(tuple(1 if i == index else 0 for i in range(n_vars)))

    @property
    def n_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def grevlex_key(self) -> Tuple[int, ...]:
        """Sort key: ascending keys list each degree in descending grevlex order."""
        return (-self.degree, *reversed(self.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        if other.n_vars != self.n_vars:
            raise InputError("monomials live in different rings")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __repr__(self) -> str:
        return f"<Monomial(exponents={self.exponents})>"

    def __str__(self) -> str:
        factors = [f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(self.exponents) if a]
        return "*".join(factors) or "1"


@lru_cache(maxsize=None)
def monomial_basis(n_vars: int, m: int) -> Tuple[Monomial, ...]:
    """Canonical ordered monomial basis of S_m; empty for negative m."""
    if n_vars < 1:
        raise InputError("n_vars must be at least 1")
    if m < 0:
        return ()
    monomials = []
    for combo in combinations_with_replacement(range(n_vars), m):
        exponents = [0] * n_vars
        for index in combo:
            exponents[index] += 1
        monomials.append(Monomial(tuple(exponents)))
    return tuple(sorted(monomials, key=Monomial.grevlex_key))


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, m: int) -> Dict[Monomial, int]:
    """Column index of each monomial of S_m in the canonical basis."""
    return {monomial: column for column, monomial in enumerate(monomial_basis(n_vars, m))}
