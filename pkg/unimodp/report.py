# Copyright 2022 Amethyst Reese
# Licensed under the MIT License

"""
Rendering of result tables as json, csv, or markdown
"""

import csv
import io
import json
from typing import Any, Dict, List, Sequence, Tuple

from .types.base import Datatype, encode
from .types.core import Format
from .types.reports import Report


class Table(Datatype):
    """Rows of json-ready cells under named columns"""

    title: str
    source: str
    columns: Tuple[str, ...]
    rows: Tuple[Tuple[Any, ...], ...] = ()
    sections: Tuple["Table", ...] = ()

    @classmethod
    def build(
        cls,
        title: str,
        source: str,
        columns: Sequence[str],
        rows: Sequence[Sequence[Any]],
        sections: Sequence["Table"] = (),
    ) -> "Table":
        return cls(
            title=title,
            source=source,
            columns=tuple(columns),
            rows=tuple(tuple(cell_value(cell) for cell in row) for row in rows),
            sections=tuple(sections),
        )

    def records(self) -> List[Dict[str, Any]]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def cell_value(value: Any) -> Any:
    if hasattr(value, "to_json_value"):
        return value.to_json_value()
    if isinstance(value, (list, tuple)):
        return [cell_value(v) for v in value]
    if isinstance(value, dict):
        return {k: cell_value(v) for k, v in value.items()}
    return encode(value)


def cell_text(value: Any) -> str:
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


def json_document(table: Table) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "title": table.title,
        "source": table.source,
        "rows": table.records(),
    }
    if table.sections:
        document["sections"] = [json_document(s) for s in table.sections]
    return document


def render_json(table: Table) -> str:
    document = json_document(table)
    return json.dumps(document, sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def render_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([cell_text(cell) for cell in row])
    text = buffer.getvalue()
    for section in table.sections:
        text += "\n" + render_csv(section)
    return text


def render_md(table: Table) -> str:
    lines = [f"## {table.title}", "", f"_{table.source}_", ""]
    lines.append("| " + " | ".join(table.columns) + " |")
    lines.append("|" + "|".join("---" for _ in table.columns) + "|")
    for row in table.rows:
        cells = (cell_text(cell).replace("|", "\\|") for cell in row)
        lines.append("| " + " | ".join(cells) + " |")
    text = "\n".join(lines) + "\n"
    for section in table.sections:
        text += "\n#" + render_md(section)
    return text


RENDERERS = {
    Format.JSON: render_json,
    Format.CSV: render_csv,
    Format.MD: render_md,
}


def render(table: Table, fmt: str = Format.JSON) -> str:
    if fmt not in RENDERERS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {Format.ALL}")
    return RENDERERS[fmt](table)


def report_table(report: Report, source: str) -> Table:
    return Table.build(
        title=report.title,
        source=source,
        columns=("check", "passed", "detail"),
        rows=[(c.name, c.passed, c.detail) for c in report.checks],
    )
