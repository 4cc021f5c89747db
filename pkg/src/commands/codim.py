# src/commands/codim.py
import argparse
import logging
from typing import Any

from src import __version__
from src.commands.common import add_ring_arguments, build_config, emit, load_chi
from src.schemas.report import Quantity, ReportRow, TableReport
from src.services.koszul_service import ci_scheme_dim, flag_scheme_dim, locus_codim
from src.services.report_service import render_table_report


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "codim",
        help="Tabulate the codimension of the Hodge locus over a range of e.",
        description="One row per e: normalized degrees, a, c, the Hilbert scheme and flag scheme "
        "dimensions and the codimension of the locus.",
    )
    add_ring_arguments(parser)
    parser.set_defaults(handler=cmd_codim)


def cmd_codim(args: argparse.Namespace) -> int:
    """
    Tabulates locus codimensions.

    Args:
        args (argparse.Namespace): Parsed command-line flags.

    Returns:
        int: Exit status, 0 on success.

    Raises:
        InputError: If a degree is out of range for some e or the ring does not fit the cycle.
    """
    config = build_config(args)
    chi = load_chi(config)
    rows = []
    for e in config.e_values():
        profile = config.profile(e)
        degrees = profile.degrees
        inputs = {"degrees": degrees, "e": e}
        rows.append(
            ReportRow(
                key={"e": e, "degrees": profile.label},
                quantities=[
                    Quantity(name="a", operation="a_value", inputs=inputs, value=profile.a),
                    Quantity(name="c", operation="c_value", inputs=inputs, value=profile.c),
                    Quantity(
                        name="ci_scheme_dim",
                        operation="ci_scheme_dim",
                        inputs={"degrees": degrees},
                        value=ci_scheme_dim(chi, degrees),
                    ),
                    Quantity(
                        name="flag_scheme_dim",
                        operation="flag_scheme_dim",
                        inputs=inputs,
                        value=flag_scheme_dim(chi, degrees, e),
                    ),
                    Quantity(
                        name="locus_codim",
                        operation="locus_codim",
                        inputs=inputs,
                        value=locus_codim(chi, degrees, e, config.n_vars),
                    ),
                ],
            )
        )
    logging.debug(f"codim: {len(rows)} row(s) for {config.degrees}")
    report = TableReport(command="codim", config=config.model_dump(mode="json"), rows=rows, version=__version__)
    emit(render_table_report(report, config.format))
    return 0
