# src/commands/common.py
import argparse
import sys
from typing import List

from src.config import DEFAULT_PRIME, DEFAULT_SEED, MAX_ATTEMPTS
from src.exceptions import InputError
from src.schemas.chi import ChiOracle
from src.schemas.run_config import RunConfig


def parse_degrees(value: str) -> List[int]:
    """Parse "d1,d2,..." for argparse."""
    try:
        return [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {value!r}") from None


def add_ring_arguments(parser: argparse.ArgumentParser, degrees_required: bool = True) -> None:
    """Flags shared by every subcommand that works on a multidegree profile."""
    parser.add_argument("--k", type=int, help="Dimension parameter; the ring has 2k + 2 variables.")
    parser.add_argument("--vars", dest="n_vars", type=int, help="Number of variables of S.")
    parser.add_argument("--degrees", type=parse_degrees, required=degrees_required, help="Degrees d1,d2,...")
    parser.add_argument("--e", type=int, help="Single hypersurface degree.")
    parser.add_argument("--e-range", dest="e_range", help="Inclusive degree range a..b.")
    parser.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="Prime modulus (default 2^31 - 1).")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Campaign seed.")
    parser.add_argument("--format", choices=["table", "csv", "json"], default="table")
    parser.add_argument("--chi-table", dest="chi_table", help="JSON table of the ambient Hilbert function.")


def build_config(args: argparse.Namespace) -> RunConfig:
    """Validate the parsed flags into a RunConfig."""
    return RunConfig.from_options(
        degrees=args.degrees,
        k=args.k,
        n_vars=args.n_vars,
        e=args.e,
        e_range=args.e_range,
        prime=args.prime,
        seed=args.seed,
        format=args.format,
        chi_table=args.chi_table,
        trials=getattr(args, "trials", 3),
        check_smooth=getattr(args, "check_smooth", False),
        sabotage=getattr(args, "sabotage", False),
        workers=getattr(args, "workers", 1),
        max_attempts=getattr(args, "max_attempts", MAX_ATTEMPTS),
    )


def load_chi(config: RunConfig) -> ChiOracle:
    """The tabulated chi when --chi-table is given, otherwise projective space."""
    if config.chi_table is None:
        return ChiOracle.projective(config.n_vars)
    if not config.chi_table.is_file():
        raise InputError(f"chi table {config.chi_table} does not exist")
    return ChiOracle.from_file(config.chi_table)


def emit(text: str) -> None:
    sys.stdout.write(text)
