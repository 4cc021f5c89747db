# src/commands/hilbert.py
import argparse
from typing import Any, List

from src import __version__
from src.commands.common import add_ring_arguments, build_config, emit, load_chi
from src.exceptions import InputError
from src.schemas.chi import ChiOracle
from src.schemas.profile import MultidegreeProfile
from src.schemas.report import Quantity, ReportRow, TableReport
from src.schemas.run_config import RunConfig, parse_range
from src.services.koszul_service import ci_hilbert, hilbert_diff
from src.services.report_service import render_table_report


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "hilbert",
        help="Tabulate Hilbert functions of complete intersections.",
        description="With --m-range: h_I(m) of the complete intersection with the given degrees, taken as "
        "given. Otherwise, for each e: h of (P_1..P_t) and of (P_1..P_t, Q_t..Q_1) in degree e, and their "
        "difference.",
    )
    add_ring_arguments(parser)
    parser.add_argument("--m-range", dest="m_range", help="Inclusive range a..b of degrees m to tabulate h_I(m).")
    parser.set_defaults(handler=cmd_hilbert)


def _function_rows(config: RunConfig, chi: ChiOracle, m_range: str) -> List[ReportRow]:
    try:
        lower, upper = parse_range(m_range)
    except ValueError as error:
        raise InputError(str(error)) from error
    if lower < 0 or lower > upper:
        raise InputError(f"invalid m-range {m_range}")
    profile = MultidegreeProfile(n_vars=config.n_vars, degrees=config.degrees)
    if profile.t > profile.n_vars:
        raise InputError(f"{profile.t} forms cannot be a complete intersection in {profile.n_vars} variables")
    return [
        ReportRow(
            key={"m": m, "degrees": profile.label},
            quantities=[
                Quantity(
                    name="h",
                    operation="ci_hilbert",
                    inputs={"degrees": profile.degrees, "m": m},
                    value=ci_hilbert(chi, profile.degrees, m),
                )
            ],
        )
        for m in range(lower, upper + 1)
    ]


def _locus_rows(config: RunConfig, chi: ChiOracle) -> List[ReportRow]:
    rows = []
    for e in config.e_values():
        profile = config.profile(e)
        degrees, full = profile.degrees, profile.full_degrees
        rows.append(
            ReportRow(
                key={"e": e, "degrees": profile.label},
                quantities=[
                    Quantity(
                        name="h_cycle",
                        operation="ci_hilbert",
                        inputs={"degrees": degrees, "m": e},
                        value=ci_hilbert(chi, degrees, e),
                    ),
                    Quantity(
                        name="h_locus",
                        operation="ci_hilbert",
                        inputs={"degrees": full, "m": e},
                        value=ci_hilbert(chi, full, e),
                    ),
                    Quantity(
                        name="hilbert_diff",
                        operation="hilbert_diff",
                        inputs={"degrees": degrees, "e": e},
                        value=hilbert_diff(chi, degrees, e),
                    ),
                ],
            )
        )
    return rows


def cmd_hilbert(args: argparse.Namespace) -> int:
    """
    Tabulates h_I(m) over --m-range, or h_I'(e), h_I(e) and h_I(e) - h_I'(e) over the e-range with
    I' the cycle ideal and I the locus ideal.

    Raises:
        InputError: If --m-range is combined with --e or --e-range, or a range is malformed.
    """
    if args.m_range is not None and (args.e is not None or args.e_range is not None):
        raise InputError("--m-range tabulates h_I(m) and takes no --e or --e-range")
    config = build_config(args)
    chi = load_chi(config)
    rows = _locus_rows(config, chi) if args.m_range is None else _function_rows(config, chi, args.m_range)
    report = TableReport(command="hilbert", config=config.model_dump(mode="json"), rows=rows, version=__version__)
    emit(render_table_report(report, config.format))
    return 0
