# src/commands/dims.py
import argparse
from typing import Any

from src import __version__
from src.commands.common import add_ring_arguments, build_config, emit, load_chi
from src.exceptions import InvariantViolation
from src.schemas.report import Quantity, ReportRow, TableReport
from src.services.koszul_service import (
    ci_scheme_dim,
    ci_scheme_dim_inductive,
    flag_scheme_dim,
    locus_codim,
    locus_dim,
)
from src.services.report_service import render_table_report


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "dims",
        help="Tabulate parameter space dimensions.",
        description="Hilbert scheme (closed and inductive), flag scheme and locus dimensions, "
        "with dim |O(e)| - locus_dim checked against the codimension.",
    )
    add_ring_arguments(parser)
    parser.set_defaults(handler=cmd_dims)


def cmd_dims(args: argparse.Namespace) -> int:
    """
    Tabulates dimensions.

    Raises:
        InvariantViolation: If the closed and inductive Hilbert scheme dimensions disagree, or
            the locus dimension and codimension do not add up to dim |O(e)|.
    """
    config = build_config(args)
    chi = load_chi(config)
    rows = []
    for e in config.e_values():
        profile = config.profile(e)
        degrees = profile.degrees
        inputs = {"degrees": degrees, "e": e}
        scheme = ci_scheme_dim(chi, degrees)
        inductive = ci_scheme_dim_inductive(chi, degrees)
        dim = locus_dim(chi, degrees, e)
        codim = locus_codim(chi, degrees, e, config.n_vars)
        if scheme != inductive or dim + codim != chi(e) - 1:
            raise InvariantViolation(
                f"dimension identities fail for {degrees}, e={e}: "
                f"scheme {scheme} vs {inductive}, locus {dim} + {codim} vs {chi(e) - 1}"
            )
        rows.append(
            ReportRow(
                key={"e": e, "degrees": profile.label},
                quantities=[
                    Quantity(
                        name="ci_scheme_dim", operation="ci_scheme_dim", inputs={"degrees": degrees}, value=scheme
                    ),
                    Quantity(
                        name="ci_scheme_dim_inductive",
                        operation="ci_scheme_dim_inductive",
                        inputs={"degrees": degrees},
                        value=inductive,
                    ),
                    Quantity(
                        name="flag_scheme_dim",
                        operation="flag_scheme_dim",
                        inputs=inputs,
                        value=flag_scheme_dim(chi, degrees, e),
                    ),
                    Quantity(name="locus_dim", operation="locus_dim", inputs=inputs, value=dim),
                    Quantity(name="hypersurfaces_dim", operation="chi", inputs={"m": e}, value=chi(e) - 1),
                ],
            )
        )
    report = TableReport(command="dims", config=config.model_dump(mode="json"), rows=rows, version=__version__)
    emit(render_table_report(report, config.format))
    return 0
