# src/schemas/run_config.py
from __future__ import annotations

from pathlib import Path
from typing import Any, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from sympy import isprime

from src.config import DEFAULT_PRIME, DEFAULT_SEED, MAX_ATTEMPTS
from src.exceptions import InputError
from src.schemas.profile import MultidegreeProfile

# Residues of primes below 2^16 collide too often for generic witnesses
MIN_PRIME = 2**16
MAX_PRIME = 2**31


def parse_range(value: str) -> Tuple[int, int]:
    """Parse "a..b" (or a single integer) into an inclusive pair."""
    lower, sep, upper = value.partition("..")
    try:
        return (int(lower), int(upper)) if sep else (int(lower), int(lower))
    except ValueError:
        raise ValueError(f"expected a range a..b, got {value!r}") from None


class RunConfig(BaseModel):
    """
    Validated configuration shared by every subcommand.

    Attributes:
        prime (int): Modulus p of the coefficient field, prime with 2^16 < p < 2^31.
        seed (int): Campaign seed; trial seeds are derived from it.
        n_vars (int): Number of variables of S (2k + 2).
        degrees (List[int]): Degree list as given, before normalization.
        e_range (Tuple[int, int]): Inclusive range of hypersurface degrees.
        trials (int): Witnesses drawn per profile in verification campaigns.
        format (str): Output format: table, csv or json.
        chi_table (Optional[Path]): JSON table of the ambient Hilbert function.
        check_smooth (bool): Run the slow Jacobian smoothness check on each witness.
        sabotage (bool): Perturb F after drawing each witness (negative control).
        workers (int): Threads used to run verification trials.
        max_attempts (int): Certification resampling budget per witness.
    """

    prime: int = Field(default=DEFAULT_PRIME, description="Prime modulus, 2^16 < p < 2^31.")
    seed: int = Field(default=DEFAULT_SEED, ge=0, description="Campaign seed.")
    n_vars: int = Field(..., ge=2, description="Number of variables of the polynomial ring.")
    degrees: List[int] = Field(..., min_length=1, description="Generator degrees before normalization.")
    e_range: Tuple[int, int] = Field(..., description="Inclusive range of hypersurface degrees.")
    trials: int = Field(default=3, ge=1, description="Trials per profile.")
    format: Literal["table", "csv", "json"] = "table"
    chi_table: Optional[Path] = Field(default=None, description="Optional JSON table for chi.")
    check_smooth: bool = False
    sabotage: bool = False
    workers: int = Field(default=1, ge=1, description="Threads for verification trials.")
    max_attempts: int = Field(default=MAX_ATTEMPTS, ge=1, description="Resampling budget.")

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "prime": 2147483647,
                "seed": 42,
                "n_vars": 4,
                "degrees": [1, 1],
                "e_range": [4, 4],
                "trials": 3,
                "format": "json",
            }
        },
    )

    @field_validator("prime")
    @classmethod
    def check_prime(cls, value: int) -> int:
        if not MIN_PRIME < value < MAX_PRIME:
            raise ValueError(f"prime must satisfy 2^16 < p < 2^31, got {value}")
        if not isprime(value):
            raise ValueError(f"{value} is not prime")
        return value

    @field_validator("degrees")
    @classmethod
    def check_degrees(cls, value: List[int]) -> List[int]:
        if any(d < 1 for d in value):
            raise ValueError("degrees must be positive integers")
        return value

    @field_validator("e_range", mode="before")
    @classmethod
    def coerce_range(cls, value: Any) -> Any:
        return parse_range(value) if isinstance(value, str) else value

    @model_validator(mode="after")
    def check_range(self) -> RunConfig:
        lower, upper = self.e_range
        if lower < 1 or lower > upper:
            raise ValueError(f"empty or invalid e-range {lower}..{upper}")
        return self

    @classmethod
    def from_options(
        cls,
        degrees: List[int],
        k: Optional[int] = None,
        n_vars: Optional[int] = None,
        e: Optional[int] = None,
        e_range: Optional[str] = None,
        **options: Any,
    ) -> RunConfig:
        """
        Resolve the command-line shorthands into a config.

        n_vars comes from --vars, from --k as 2k + 2, or from the degree list as 2t. Without
        --e or --e-range the range starts at max(max d + 1, 3) and ends at 12 for k = 1, at 6
        for k = 2 and two degrees higher otherwise.

        Raises:
            InputError: If --k and --vars disagree or both --e and --e-range are given.
        """
        if k is not None:
            if n_vars is not None and n_vars != 2 * k + 2:
                raise InputError(f"--k {k} requires --vars {2 * k + 2}, got {n_vars}")
            n_vars = 2 * k + 2
        if n_vars is None:
            n_vars = 2 * len(degrees)
        if e is not None and e_range is not None:
            raise InputError("give either --e or --e-range, not both")
        bounds: Tuple[int, int]
        if e is not None:
            bounds = (e, e)
        elif e_range is not None:
            try:
                bounds = parse_range(e_range)
            except ValueError as error:
                raise InputError(str(error)) from error
        else:
            lower = max(max(degrees, default=0) + 1, 3)
            upper = {4: 12, 6: 6}.get(n_vars, lower + 2)
            bounds = (lower, max(lower, upper))
        return cls(n_vars=n_vars, degrees=degrees, e_range=bounds, **options)

    @property
    def k(self) -> Optional[int]:
        return (self.n_vars - 2) // 2 if self.n_vars % 2 == 0 else None

    def e_values(self) -> List[int]:
        return list(range(self.e_range[0], self.e_range[1] + 1))

    def profile(self, e: int) -> MultidegreeProfile:
        """
        Normalized profile of the configured degrees at e.

        Raises:
            InputError: If some d_i is not in [1, e - 1].
        """
        return MultidegreeProfile(n_vars=self.n_vars, degrees=self.degrees, e=e).normalized()
