"""
Concrete report renderers: CSV, JSON and aligned text.
"""

import csv
import io
import json

from .base import ReportRenderer, Table, format_number, round_number


class CsvRenderer(ReportRenderer):
    """Header line plus one line per row."""

    @property
    def name(self) -> str:
        return "csv"

    @property
    def extension(self) -> str:
        return ".csv"

    def render(self, table: Table) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(table.columns)
        writer.writerows(self._formatted_rows(table))
        return buffer.getvalue()


class JsonRenderer(ReportRenderer):
    """
    {"title", "metadata", "columns", "rows"} with rows as objects.

    Floats are rounded to the 15 digits the other formats print;
    non-finite values become null.
    """

    @property
    def name(self) -> str:
        return "json"

    @property
    def extension(self) -> str:
        return ".json"

    def render(self, table: Table) -> str:
        document = {
            "title": table.title,
            "metadata": _rounded(table.metadata),
            "columns": table.columns,
            "rows": [
                {name: round_number(cell) for name, cell in zip(table.columns, row)}
                for row in table.rows
            ],
        }
        return json.dumps(document, indent=2, sort_keys=False, allow_nan=False) + "\n"


class TextRenderer(ReportRenderer):
    """Right-aligned columns under an optional title."""

    @property
    def name(self) -> str:
        return "text"

    @property
    def extension(self) -> str:
        return ".txt"

    def render(self, table: Table) -> str:
        cells = [table.columns] + self._formatted_rows(table)
        widths = [max(len(row[i]) for row in cells) for i in range(len(table.columns))]
        lines = []
        if table.title:
            lines.append(table.title)
            lines.append("=" * len(table.title))
        for index, row in enumerate(cells):
            lines.append("  ".join(cell.rjust(width) for cell, width in zip(row, widths)))
            if index == 0:
                lines.append("  ".join("-" * width for width in widths))
        for key, value in table.metadata.items():
            shown = json.dumps(_rounded(value)) if isinstance(value, (list, dict)) else format_number(value)
            lines.append(f"{key}: {shown}")
        return "\n".join(lines) + "\n"


def _rounded(value):
    if isinstance(value, dict):
        return {str(k): _rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_rounded(v) for v in value]
    if hasattr(value, "tolist"):
        return _rounded(value.tolist())
    return round_number(value)
