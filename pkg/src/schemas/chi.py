# src/schemas/chi.py
from __future__ import annotations

import json
from math import comb
from pathlib import Path
from typing import Dict, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.exceptions import InputError


class ChiOracle(BaseModel):
    """
    Hilbert function chi of the ambient variety X.

    Attributes:
        kind (str): "projective" for the builtin binomial chi of projective space, or "table".
        n_vars (Optional[int]): Number of homogeneous coordinates (projective kind).
        values (Dict[int, int]): Tabulated chi(m) for 0 <= m <= valid_through (table kind).
        valid_through (Optional[int]): Largest degree covered by the table.
    """

    kind: Literal["projective", "table"] = "projective"
    n_vars: Optional[int] = Field(default=None, ge=1, description="Variables of the coordinate ring.")
    values: Dict[int, int] = Field(default_factory=dict, description="chi(m) for tabulated degrees m.")
    valid_through: Optional[int] = Field(default=None, ge=0, description="Largest tabulated degree.")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={"example": {"kind": "table", "values": {"0": 1, "1": 4, "2": 10}, "valid_through": 2}},
    )

    @model_validator(mode="after")
    def check_variant(self) -> ChiOracle:
        if self.kind == "projective":
            if self.n_vars is None:
                raise ValueError("projective chi needs n_vars")
            return self
        if self.valid_through is None:
            raise ValueError("table chi needs valid_through")
        missing = [m for m in range(self.valid_through + 1) if m not in self.values]
        if missing:
            raise ValueError(f"table chi is missing degrees {missing}")
        if any(v < 0 for v in self.values.values()):
            raise ValueError("table chi values must be non-negative")
        return self

    @classmethod
    def projective(cls, n_vars: int) -> ChiOracle:
        return cls(kind="projective", n_vars=n_vars)

    @classmethod
    def table(cls, values: Dict[int, int], valid_through: int) -> ChiOracle:
        return cls(kind="table", values=values, valid_through=valid_through)

    @classmethod
    def from_file(cls, path: Path) -> ChiOracle:
        """Load a table document {"values": {...}, "valid_through": N}."""
        document = json.loads(Path(path).read_text(encoding="utf-8"))
        return cls(kind="table", values=document.get("values", {}), valid_through=document.get("valid_through"))

    def __call__(self, m: int) -> int:
        if m < 0:
            return 0
        if self.kind == "projective":
            assert self.n_vars is not None
            return comb(m + self.n_vars - 1, self.n_vars - 1)
        assert self.valid_through is not None
        if m > self.valid_through:
            raise InputError(f"chi table is valid through degree {self.valid_through}, queried at {m}")
        return self.values[m]

    def describe(self) -> str:
        if self.kind == "projective":
            return f"projective({self.n_vars})"
        return f"table(valid_through={self.valid_through})"
