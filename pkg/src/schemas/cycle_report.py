# src/schemas/cycle_report.py
from typing import List

from pydantic import BaseModel, ConfigDict


class ResidualReport(BaseModel):
    """
    Checks attached to swapping P_i and Q_i in F = sum P_j Q_j.

    Attributes:
        index (int): The 1-based index i that was swapped.
        degrees (List[int]): Multidegree of the residual cycle.
        identity_preserved (bool): The residual witness still expands to F.
        class_identity (bool): F - P_i Q_i lies in the degree-e piece of (P_j : j != i).
    """

    index: int
    degrees: List[int]
    identity_preserved: bool
    class_identity: bool

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"index": 1, "degrees": [3, 1], "identity_preserved": True, "class_identity": True}
        },
    )


class JacobianReport(BaseModel):
    """
    Membership of each partial derivative dF/dx_j in the degree e-1 piece of (P, Q).

    Attributes:
        memberships (List[bool]): One entry per variable.
    """

    memberships: List[bool]

    model_config = ConfigDict(json_schema_extra={"example": {"memberships": [True, True, True, True]}})

    @property
    def holds(self) -> bool:
        return all(self.memberships)
