# src/models/field.py
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from sympy import isprime

from src.config import DEFAULT_PRIME
from src.exceptions import InputError


@dataclass(frozen=True)
class PrimeField:
    """
    The prime field F_p shared by every element, polynomial and matrix of a computation.

    Attributes:
        p (int): Prime modulus, below 2^31 so that residue products fit in int64.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if not 2 <= self.p < 2**31:
            raise InputError(f"modulus {self.p} must lie in [2, 2^31)")
        if not isprime(self.p):
            raise InputError(f"modulus {self.p} is not prime")

    def __call__(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(value % self.p, self)

    def reduce(self, value: int) -> int:
        return value % self.p

    def inv(self, value: int) -> int:
        value %= self.p
        if value == 0:
            raise ZeroDivisionError("0 has no inverse in a field")
        return pow(value, self.p - 2, self.p)

    def __repr__(self) -> str:
        return f"<PrimeField(p={self.p})>"


Scalar = Union[int, "PrimeFieldElement"]


@dataclass(frozen=True)
class PrimeFieldElement:
    """
    A residue modulo the field's prime.

    Attributes:
        value (int): Canonical representative in [0, p).
        field (PrimeField): The field the residue lives in.
    """

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not 0 <= self.value < self.field.p:
            raise InputError(f"residue {self.value} outside [0, {self.field.p})")

    def _coerce(self, other: Scalar) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.field != self.field:
                raise InputError("cannot combine residues of different fields")
            return other.value
        return other % self.field.p

    def __add__(self, other: Scalar) -> PrimeFieldElement:
        return self.field(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> PrimeFieldElement:
        return self.field(self.value - self._coerce(other))

    def __rsub__(self, other: Scalar) -> PrimeFieldElement:
        return self.field(self._coerce(other) - self.value)

    def __mul__(self, other: Scalar) -> PrimeFieldElement:
        return self.field(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> PrimeFieldElement:
        return self.field(-self.value)

    def inv(self) -> PrimeFieldElement:
        return PrimeFieldElement(self.field.inv(self.value), self.field)

    def __truediv__(self, other: Scalar) -> PrimeFieldElement:
        return self * self.field(self._coerce(other)).inv()

    def __pow__(self, exponent: int) -> PrimeFieldElement:
        if exponent < 0:
            return self.inv() ** (-exponent)
        return self.field(pow(self.value, exponent, self.field.p))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"<PrimeFieldElement(value={self.value}, p={self.field.p})>"
