# src/exceptions.py
from typing import Any, Dict


class NLCodimError(Exception):
    """
    Base error for the library and the command line.

    Attributes:
        detail (str): Human readable description of the failure.
        exit_status (int): Process exit status reported by the CLI for this failure.
    """

    exit_status = 2

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail

    def to_record(self) -> Dict[str, Any]:
        """Machine-readable error record emitted on stderr."""
        return {"error": type(self).__name__, "detail": self.detail, "exit_status": self.exit_status}


class InputError(NLCodimError):
    """Invalid input or violated precondition."""

    exit_status = 2


class GorensteinError(NLCodimError):
    """A quotient that should be Artinian Gorenstein is not."""

    exit_status = 1


class InvariantViolation(NLCodimError):
    """A formula disagreed with the brute-force oracle."""

    exit_status = 1


class CertificationExhausted(NLCodimError):
    """No random witness passed certification within the resampling budget."""

    exit_status = 3
