# codes/renderers.py
# Byte-stable CSV / Markdown / JSON serialization of result tables

import csv
import io
from typing import List, Sequence, Union

import orjson

from semigroups.errors import UnknownFormatError
from state.semigroup_state import CodeRecord, OutputFormat

RECORD_COLUMNS = ("rho_ell", "n", "dim", "d1", "d2")
RECORD_MARKDOWN_HEADERS = ("rho_ell", "n", "n-ell", "d(C1)", "d(C2)")


def _as_format(fmt: Union[OutputFormat, str]) -> OutputFormat:
    try:
        return OutputFormat(fmt)
    except ValueError as exc:
        raise UnknownFormatError(f"unknown format {fmt!r}; expected csv, markdown or json") from exc


def render_rows(
    columns: Sequence[str],
    rows: Sequence[Sequence[int]],
    fmt: Union[OutputFormat, str],
    headers: Sequence[str] = (),
) -> str:
    """
    Serialize integer rows

    Args:
        columns: Field names (CSV header, JSON keys)
        rows: Row tuples aligned with columns
        fmt: csv, markdown or json
        headers: Optional display headers for markdown

    Returns:
        Text ending in a newline
    """
    output_format = _as_format(fmt)

    if output_format == OutputFormat.CSV:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
        return buffer.getvalue()

    if output_format == OutputFormat.JSON:
        objects = [dict(zip(columns, (int(value) for value in row))) for row in rows]
        return orjson.dumps(objects, option=orjson.OPT_INDENT_2).decode() + "\n"

    titles = list(headers) or list(columns)
    lines = [
        "| " + " | ".join(titles) + " |",
        "|" + "|".join("---" for _ in titles) + "|",
    ]
    lines.extend("| " + " | ".join(str(value) for value in row) + " |" for row in rows)
    return "\n".join(lines) + "\n"


def render(records: List[CodeRecord], fmt: Union[OutputFormat, str]) -> str:
    """Serialize comparison rows as rho_ell,n,dim,d1,d2"""
    return render_rows(
        RECORD_COLUMNS,
        [record.as_row() for record in records],
        fmt,
        headers=RECORD_MARKDOWN_HEADERS,
    )
