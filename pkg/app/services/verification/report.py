"""TSV and JSON-lines rendering of bound reports."""

from pydantic import ValidationError

from app.models.report import BoundReport, ReportRow, entry_from_row, entry_to_row

from .exceptions import ReportParseError
from .models import ReportFormat

TSV_COLUMNS = ("name", "expected", "computed", "status")


def emit_report(report: BoundReport, fmt: ReportFormat = ReportFormat.TSV) -> str:
    """Render the entries sorted by name.

    TSV starts with a header line; JSON-lines has one object per entry with
    the same four keys. Lines end with LF.
    """
    rows = [entry_to_row(e) for e in report.sorted_entries()]
    if fmt is ReportFormat.TSV:
        lines = ["\t".join(TSV_COLUMNS)]
        lines.extend("\t".join(getattr(row, column) for column in TSV_COLUMNS) for row in rows)
    else:
        lines = [row.model_dump_json() for row in rows]
    return "".join(line + "\n" for line in lines)


def parse_jsonl_report(text: str, suite: str = "") -> BoundReport:
    """Read a JSON-lines report back into entries.

    Raises:
        ReportParseError: On a line that is not a report row
    """
    report = BoundReport(suite=suite)
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            report.add(entry_from_row(ReportRow.model_validate_json(line)))
        except (ValidationError, ValueError) as e:
            raise ReportParseError(line_number, line, str(e).splitlines()[0]) from e
    return report
