# src/services/report_service.py
import csv
import io
from typing import Dict, List, Literal, Sequence

from src.exceptions import InputError
from src.models.field import PrimeField
from src.models.monomial import Monomial
from src.models.polynomial import SparsePolynomial
from src.schemas.polynomial import PolynomialDocument, TermDocument
from src.schemas.report import CampaignReport, Scalar, TableReport

OutputFormat = Literal["table", "csv", "json"]


def parse_polynomial(document: PolynomialDocument, field: PrimeField) -> SparsePolynomial:
    """
    Load a polynomial from its interchange document, reducing coefficients mod p.

    Raises:
        InputError: If an exponent vector does not have n_vars entries.
    """
    terms: Dict[Monomial, int] = {}
    for term in document.terms:
        if len(term.e) != document.n_vars:
            raise InputError(f"exponent vector {term.e} does not have {document.n_vars} entries")
        monomial = Monomial(tuple(term.e))
        terms[monomial] = terms.get(monomial, 0) + int(term.c)
    return SparsePolynomial(field, document.n_vars, terms)


def emit_polynomial(polynomial: SparsePolynomial) -> PolynomialDocument:
    """Interchange document of a polynomial, terms in grevlex order."""
    return PolynomialDocument(
        n_vars=polynomial.n_vars,
        terms=[TermDocument(c=str(c), e=list(monomial.exponents)) for monomial, c in polynomial.items()],
    )


def _render_grid(columns: List[str], rows: Sequence[Dict[str, Scalar]]) -> str:
    cells = [[str(row.get(column, "")) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
    lines = ["  ".join(column.rjust(width) for column, width in zip(columns, widths))]
    lines.append("  ".join("-" * width for width in widths))
    lines.extend("  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in cells)
    return "\n".join(lines) + "\n"


def _render_csv(columns: List[str], rows: Sequence[Dict[str, Scalar]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _columns(rows: Sequence[Dict[str, Scalar]]) -> List[str]:
    columns: List[str] = []
    for row in rows:
        columns.extend(column for column in row if column not in columns)
    return columns


def render_table_report(report: TableReport, output: OutputFormat) -> str:
    """Render the rows of a tabulation; all three formats carry the same records."""
    if output == "json":
        return report.model_dump_json(indent=2) + "\n"
    rows = [row.flatten() for row in report.rows]
    columns = _columns(rows)
    return _render_csv(columns, rows) if output == "csv" else _render_grid(columns, rows)


def _comparison_rows(report: CampaignReport) -> List[Dict[str, Scalar]]:
    rows: List[Dict[str, Scalar]] = []
    for trial in report.trials:
        key: Dict[str, Scalar] = {
            "degrees": ",".join(map(str, trial.degrees)),
            "e": trial.e,
            "trial": trial.trial,
            "seed": trial.seed,
        }
        if trial.error is not None:
            rows.append({**key, "family": "witness", "check": trial.error.error, "passed": False})
        for comparison in trial.comparisons:
            rows.append(
                {
                    **key,
                    "family": comparison.family,
                    "check": comparison.check,
                    "expected": comparison.expected,
                    "observed": comparison.observed,
                    "passed": comparison.passed,
                }
            )
    return rows


def render_campaign_report(report: CampaignReport, output: OutputFormat) -> str:
    """
    Render a verification campaign. CSV and the table list one line per compared pair, JSON
    carries the same comparisons inside the full report.
    """
    if output == "json":
        return report.model_dump_json(indent=2) + "\n"
    columns = ["degrees", "e", "trial", "seed", "family", "check", "expected", "observed", "passed"]
    rows = _comparison_rows(report)
    if output == "csv":
        return _render_csv(columns, rows)
    text = _render_grid(columns, rows)
    return text + f"\n{len(report.trials)} trial(s), {report.failures} failed check(s)\n"
