# src/main.py
import argparse
import json
import logging
import sys
import traceback
from typing import Any, Dict, NoReturn, Optional, Sequence

from pydantic import ValidationError

from src import __version__
from src.commands import codim, dims, hilbert, recover, verify
from src.config import LOG_LEVEL, LOG_LEVELS
from src.exceptions import InputError, NLCodimError


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors surface as InputError, sub-parsers included."""

    def error(self, message: str) -> NoReturn:
        raise InputError(f"{self.prog}: {message}")


def create_parser() -> argparse.ArgumentParser:
    """
    Builds the nlcodim argument parser with one sub-parser per command.

    Returns:
        argparse.ArgumentParser: The configured parser.
    """
    parser = ArgumentParser(
        prog="nlcodim",
        description="Codimensions of Noether-Lefschetz loci from Koszul combinatorics, "
        "verified against exact linear algebra over a prime field.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        dest="log_level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=LOG_LEVEL,
        help="Logging level for stderr.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in (codim, hilbert, dims, verify, recover):
        command.register(subparsers)
    return parser


def _error_record(error: Exception) -> Dict[str, Any]:
    if isinstance(error, NLCodimError):
        return error.to_record()
    if isinstance(error, ValidationError):
        detail = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in error.errors())
        return {"error": "ValidationError", "detail": detail, "exit_status": 2}
    return {"error": type(error).__name__, "detail": str(error), "exit_status": 2}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Entry point: parse flags, run the command and map failures to exit statuses.

    Exit statuses: 0 success, 1 mathematical invariant violated, 2 input or validation error,
    3 certification exhaustion. Errors are printed on stderr as one JSON record.
    """
    parser = create_parser()
    logging.basicConfig(
        level=LOG_LEVEL,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    try:
        args = parser.parse_args(argv)
        logging.getLogger().setLevel(args.log_level)
        return int(args.handler(args))
    except (NLCodimError, ValidationError) as error:
        record = _error_record(error)
        logging.error(f"{record['error']}: {record['detail']}")
    except Exception as error:
        record = _error_record(error)
        logging.error(f"Unexpected error: {error}\n{traceback.format_exc()}")
    print(json.dumps(record), file=sys.stderr)
    return int(record["exit_status"])


if __name__ == "__main__":
    sys.exit(main())
