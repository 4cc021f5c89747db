# src/schemas/profile.py
from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.exceptions import InputError
from src.services.koszul_service import a_value, c_value, normalize_degrees


class MultidegreeProfile(BaseModel):
    """
    Multidegree of a complete intersection together with the ambient hypersurface degree.

    Attributes:
        n_vars (int): Number of variables of S (2k + 2 for the Hodge locus setting).
        degrees (List[int]): Generator degrees d_1 <= ... <= d_t, all positive.
        e (Optional[int]): Degree of the ambient hypersurface.
    """

    n_vars: int = Field(..., ge=1, description="Number of variables of the polynomial ring.")
    degrees: List[int] = Field(..., description="Generator degrees, sorted ascending on construction.")
    e: Optional[int] = Field(default=None, ge=1, description="Degree of the hypersurface containing the cycle.")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"n_vars": 4, "degrees": [1, 1], "e": 4}},
    )

    @field_validator("degrees")
    @classmethod
    def sort_degrees(cls, value: List[int]) -> List[int]:
        if any(d < 1 for d in value):
            raise ValueError("degrees must be positive integers")
        return sorted(value)

    @property
    def t(self) -> int:
        return len(self.degrees)

    @property
    def k(self) -> Optional[int]:
        """(n_vars - 2) / 2 when n_vars is even."""
        return (self.n_vars - 2) // 2 if self.n_vars % 2 == 0 else None

    @property
    def label(self) -> str:
        return ",".join(map(str, self.degrees))

    @property
    def a(self) -> int:
        """Number of degrees equal to e/2; zero for odd e or without e."""
        return 0 if self.e is None else a_value(self.degrees, self.e)

    @property
    def c(self) -> int:
        return 0 if self.e is None else c_value(self.degrees, self.e)

    @property
    def is_normalized(self) -> bool:
        return self.e is not None and all(2 * d <= self.e for d in self.degrees)

    def normalized(self) -> MultidegreeProfile:
        """
        The profile with every d_i > e/2 replaced by e - d_i.

        Raises:
            InputError: If the profile has no e or some d_i is not in [1, e - 1].
        """
        if self.e is None:
            raise InputError("profile has no ambient degree e")
        degrees, _ = normalize_degrees(self.degrees, self.e)
        return self.model_copy(update={"degrees": degrees})

    @property
    def full_degrees(self) -> List[int]:
        """Degrees of the ideal (P_1, ..., P_t, Q_t, ..., Q_1) with deg Q_i = e - d_i."""
        if self.e is None:
            raise InputError("profile has no ambient degree e")
        return sorted(self.degrees + [self.e - d for d in self.degrees])
