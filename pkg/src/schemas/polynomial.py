# src/schemas/polynomial.py
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator


class TermDocument(BaseModel):
    """
    One term of a polynomial in the interchange format.

    Attributes:
        c (str): Coefficient as a decimal integer string; reduced mod p on load.
        e (List[int]): Exponent vector of length n_vars.
    """

    c: str = Field(..., description="Coefficient as a decimal integer string.")
    e: List[int] = Field(..., description="Exponent vector.")

    @field_validator("c")
    @classmethod
    def check_integer(cls, value: str) -> str:
        try:
            int(value)
        except ValueError:
            raise ValueError(f"coefficient {value!r} is not an integer") from None
        return value

    @field_validator("e")
    @classmethod
    def check_exponents(cls, value: List[int]) -> List[int]:
        if any(x < 0 for x in value):
            raise ValueError("exponents must be non-negative")
        return value


class PolynomialDocument(BaseModel):
    """
    A polynomial in the interchange format {"n_vars": n, "terms": [{"c": "3", "e": [..]}, ...]}.

    Attributes:
        n_vars (int): Number of variables.
        terms (List[TermDocument]): Terms in grevlex order on emission.
    """

    n_vars: int = Field(..., ge=1)
    terms: List[TermDocument] = Field(default_factory=list)

    model_config = ConfigDict(
        json_schema_extra={"example": {"n_vars": 2, "terms": [{"c": "1", "e": [2, 0]}, {"c": "1", "e": [0, 2]}]}}
    )


class PolynomialSetDocument(BaseModel):
    """
    A list of forms sharing one ring, as read by the recover subcommand.

    Attributes:
        n_vars (int): Number of variables.
        prime (Optional[int]): Modulus; defaults to the configured prime.
        degree (Optional[int]): When present, the forms span V = (forms)_degree; otherwise
            they are the generators of a zero-dimensional complete intersection.
        forms (List[PolynomialDocument]): The forms.
    """

    n_vars: int = Field(..., ge=1)
    prime: Optional[int] = Field(default=None, description="Modulus of the coefficient field.")
    degree: Optional[int] = Field(default=None, ge=0, description="Degree of the spanned subspace V.")
    forms: List[PolynomialDocument] = Field(..., min_length=1)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "n_vars": 2,
                "prime": 2147483647,
                "degree": 2,
                "forms": [
                    {"n_vars": 2, "terms": [{"c": "1", "e": [2, 0]}]},
                    {"n_vars": 2, "terms": [{"c": "1", "e": [0, 2]}]},
                ],
            }
        }
    )
