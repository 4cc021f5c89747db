# src/commands/recover.py
import argparse
import logging
from pathlib import Path
from typing import Any, List, Sequence, Tuple

from src import __version__
from src.commands.common import add_ring_arguments, build_config, emit
from src.config import DEFAULT_PRIME
from src.exceptions import InputError, InvariantViolation
from src.models.field import PrimeField
from src.models.graded_basis import GradedBasis
from src.models.polynomial import SparsePolynomial
from src.schemas.polynomial import PolynomialSetDocument
from src.schemas.report import Quantity, ReportRow, TableReport
from src.services.gorenstein_service import recover_ideal
from src.services.graded_service import graded_span
from src.services.koszul_service import socle_degree
from src.services.report_service import emit_polynomial, parse_polynomial, render_table_report
from src.services.witness_service import random_witness


def register(subparsers: Any) -> None:
    parser = subparsers.add_parser(
        "recover",
        help="Recover a Gorenstein ideal from its socle-degree piece.",
        description="Builds V = I_socle from a random witness (or reads forms from --input), recovers "
        "the ideal from V alone and compares it with the source ideal degree by degree.",
    )
    add_ring_arguments(parser, degrees_required=False)
    parser.add_argument("--input", type=Path, help="Polynomial set document to recover from.")
    parser.add_argument("--write-socle", dest="write_socle", type=Path, help="Write a basis of V as a document.")
    parser.set_defaults(handler=cmd_recover)


def _load_document(path: Path) -> Tuple[List[SparsePolynomial], GradedBasis, bool]:
    """
    Forms of the source ideal, the subspace V described by a polynomial set document, and
    whether the forms generate the whole ideal (false when the document only spans V).
    """
    if not path.is_file():
        raise InputError(f"input file {path} does not exist")
    document = PolynomialSetDocument.model_validate_json(path.read_text(encoding="utf-8"))
    field = PrimeField(document.prime or DEFAULT_PRIME)
    forms = []
    for form_document in document.forms:
        if form_document.n_vars != document.n_vars:
            raise InputError(f"form with {form_document.n_vars} variables in a {document.n_vars}-variable document")
        forms.append(parse_polynomial(form_document, field))
    if document.degree is not None:
        return forms, graded_span(forms, document.degree, field, document.n_vars), False
    degrees = []
    for form in forms:
        if form.homogeneous_degree is None:
            raise InputError(f"{form!r} is not homogeneous")
        degrees.append(form.homogeneous_degree)
    socle = socle_degree(document.n_vars, degrees)
    return forms, graded_span(forms, socle, field, document.n_vars), True


def _write_socle(path: Path, V: GradedBasis) -> None:
    document = PolynomialSetDocument(
        n_vars=V.n_vars,
        prime=V.field.p,
        degree=V.ambient_degree,
        forms=[emit_polynomial(form) for form in V.polynomials()],
    )
    path.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logging.info(f"wrote {V.dimension} form(s) spanning V to {path}")


def _rows(forms: Sequence[SparsePolynomial], V: GradedBasis) -> List[ReportRow]:
    recovered = recover_ideal(V)
    if not recovered.is_ideal():
        raise InvariantViolation("recovered pieces are not closed under multiplication by the variables")
    rows = []
    for k in range(recovered.socle + 1):
        source = graded_span(forms, k, V.field, V.n_vars)
        inputs = {"socle": recovered.socle, "k": k}
        rows.append(
            ReportRow(
                key={
                    "k": k,
                    "equal": recovered.piece(k) == source,
                    "contains_source": recovered.piece(k).contains_space(source),
                },
                quantities=[
                    Quantity(name="dim_S", operation="ambient_dim", inputs={"k": k}, value=source.ambient_dim),
                    Quantity(name="h_recovered", operation="recover_ideal", inputs=inputs, value=recovered.dims[k]),
                    Quantity(name="h_source", operation="brute_hilbert", inputs={"m": k}, value=source.codimension),
                ],
            )
        )
    return rows


def cmd_recover(args: argparse.Namespace) -> int:
    """
    Recovery demonstration.

    Returns:
        int: 0 when the recovered ideal equals the source ideal in every degree (for a document
        that only spans V: contains it in every degree and equals V on top), 1 otherwise.

    Raises:
        InputError: If neither --input nor --degrees is given, --chi-table or more than one e is
            given, or V is not a base point free hyperplane.
    """
    if args.chi_table is not None:
        raise InputError("recover works in the polynomial ring itself; --chi-table does not apply")
    if args.input is not None:
        forms, V, complete = _load_document(args.input)
        output = args.format
        config_record = {"input": str(args.input)}
    else:
        if args.degrees is None:
            raise InputError("recover needs --degrees or --input")
        config = build_config(args)
        e, upper = config.e_range
        if upper != e:
            raise InputError(f"recover needs a single hypersurface degree, got the range {e}..{upper}; use --e")
        field = PrimeField(config.prime)
        witness = random_witness(field, config.n_vars, config.profile(e).degrees, config.seed, e=e)
        forms = witness.generators
        socle = socle_degree(config.n_vars, witness.profile.full_degrees)
        V = graded_span(forms, socle, field, config.n_vars)
        output = config.format
        config_record = config.model_dump(mode="json")
        complete = True
    if args.write_socle is not None:
        _write_socle(args.write_socle, V)
    rows = _rows(forms, V)
    report = TableReport(command="recover", config=config_record, rows=rows, version=__version__)
    emit(render_table_report(report, output))
    if complete:
        passed = all(row.key["equal"] for row in rows)
    else:
        passed = all(row.key["contains_source"] for row in rows) and bool(rows[-1].key["equal"])
    return 0 if passed else 1
