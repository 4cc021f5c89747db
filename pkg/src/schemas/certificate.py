# src/schemas/certificate.py
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Certificate(BaseModel):
    """
    Outcome of a regular-sequence certification.

    Attributes:
        mode (str): "full" when the forms are as many as the variables (exact test),
            "partial" otherwise (Hilbert-function agreement, heuristic).
        degrees (List[int]): Degrees of the certified forms.
        verified_through (int): Largest degree whose Hilbert function was compared.
        passed (bool): Whether every comparison agreed.
        failed_at (Optional[int]): First degree where the check failed.
        attempts (int): Number of random draws consumed before this certificate.
    """

    mode: Literal["full", "partial"]
    degrees: List[int]
    verified_through: int
    passed: bool
    failed_at: Optional[int] = None
    attempts: int = Field(default=1, ge=1)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "mode": "full",
                "degrees": [1, 1, 3, 3],
                "verified_through": 5,
                "passed": True,
                "failed_at": None,
                "attempts": 1,
            }
        },
    )

    @property
    def heuristic(self) -> bool:
        return self.mode == "partial"
