# src/schemas/report.py
from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from src.schemas.certificate import Certificate

Scalar = Union[int, str, bool]


class Quantity(BaseModel):
    """
    A computed integer together with the operation and inputs that produced it.

    Attributes:
        name (str): Column name in tabular output.
        operation (str): Name of the producing operation.
        inputs (Dict[str, Any]): Arguments of the operation.
        value (int): The result.
    """

    name: str
    operation: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    value: int


class ReportRow(BaseModel):
    """
    One row of a tabulation.

    Attributes:
        key (Dict[str, Scalar]): Identifying columns (e.g. e, degrees).
        quantities (List[Quantity]): Computed columns, in display order.
    """

    key: Dict[str, Scalar]
    quantities: List[Quantity] = Field(default_factory=list)

    def flatten(self) -> Dict[str, Scalar]:
        row: Dict[str, Scalar] = dict(self.key)
        row.update({quantity.name: quantity.value for quantity in self.quantities})
        return row


class TableReport(BaseModel):
    """Output of the codim, hilbert, dims and recover subcommands."""

    command: str
    config: Dict[str, Any]
    rows: List[ReportRow]
    version: str

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "command": "codim",
                "config": {"n_vars": 4, "degrees": [1, 1], "e_range": [4, 4]},
                "rows": [
                    {
                        "key": {"e": 4, "degrees": "1,1"},
                        "quantities": [
                            {
                                "name": "locus_codim",
                                "operation": "locus_codim",
                                "inputs": {"degrees": [1, 1], "e": 4},
                                "value": 1,
                            }
                        ],
                    }
                ],
                "version": "0.1.0",
            }
        }
    )


class Comparison(BaseModel):
    """
    One checked equality between an expected and an observed integer.

    Boolean checks are recorded with expected 1 and observed 0 or 1.
    """

    family: str
    check: str
    operation: str
    inputs: Dict[str, Any] = Field(default_factory=dict)
    expected: int
    observed: int
    passed: bool


class ErrorRecord(BaseModel):
    """Machine-readable error emitted on stderr or attached to a trial."""

    error: str
    detail: str
    exit_status: int


class TrialReport(BaseModel):
    """
    Result of one verification trial.

    Attributes:
        degrees (List[int]): Normalized multidegree of the cycle.
        e (int): Hypersurface degree.
        trial (int): Trial index within the profile.
        seed (int): Seed of the witness.
        certificate (Optional[Certificate]): Certificate of the drawn witness.
        comparisons (List[Comparison]): Every checked pair of integers.
        error (Optional[ErrorRecord]): Set when no witness could be drawn.
        fingerprint (Optional[str]): Digest of the drawn F, equal for identical witnesses.
    """

    degrees: List[int]
    e: int
    trial: int
    seed: int
    certificate: Optional[Certificate] = None
    comparisons: List[Comparison] = Field(default_factory=list)
    error: Optional[ErrorRecord] = None
    fingerprint: Optional[str] = None

    @property
    def failures(self) -> List[Comparison]:
        return [comparison for comparison in self.comparisons if not comparison.passed]

    @property
    def passed(self) -> bool:
        return self.error is None and not self.failures


class CampaignReport(BaseModel):
    """
    Output of the verify subcommand, trials ordered by (profile, trial index).

    Attributes:
        config (Dict[str, Any]): The run configuration.
        trials (List[TrialReport]): Per-trial results.
        failures (int): Number of failed comparisons over all trials.
        version (str): Package version.
    """

    config: Dict[str, Any]
    trials: List[TrialReport]
    failures: int
    version: str
