# src/commands/verify.py
import argparse
from typing import Any

from src.commands.common import add_ring_arguments, build_config, emit
from src.config import MAX_ATTEMPTS
from src.services.report_service import render_campaign_report
from src.services.verify_service import campaign_exit_status, run_campaign


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="Run a seeded campaign comparing every formula with the brute-force oracle.",
        description="Exit status 0 when all checks pass, 1 on an invariant failure, "
        "3 when no witness passed certification.",
    )
    add_ring_arguments(parser)
    parser.add_argument("--trials", type=int, default=3, help="Witnesses per value of e.")
    parser.add_argument("--workers", type=int, default=1, help="Threads running trials.")
    parser.add_argument(
        "--max-attempts", dest="max_attempts", type=int, default=MAX_ATTEMPTS, help="Certification resampling budget."
    )
    parser.add_argument(
        "--check-smooth", dest="check_smooth", action="store_true", help="Also run the slow smoothness check."
    )
    parser.add_argument("--sabotage", action="store_true", help=argparse.SUPPRESS)
    parser.set_defaults(handler=cmd_verify)


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Runs the verification campaign and prints its report.

    Returns:
        int: 0 if every comparison passed, 1 on failures, 3 on certification exhaustion.
    """
    config = build_config(args)
    report = run_campaign(config)
    emit(render_campaign_report(report, config.format))
    return campaign_exit_status(report)
