"""
Abstract base class for report renderers.

📚 CONCEPT: Strategy Pattern

The same numbers go out in several shapes:
- CSV: data files (convergence table, phase-shift curve, wavefunctions)
- JSON: machine-readable reports (per-cell diffs, verify verdicts)
- Text: an aligned table for the terminal

Every command builds one Table; the ReportRenderer chosen by --format
decides how it is written. Numbers are always printed with 15 significant
digits, '.' as decimal separator and LF line endings, so the same
configuration gives byte-identical files.
"""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Sequence, Union

Cell = Union[float, int, str, None]


def format_number(value: Cell) -> str:
    """15 significant digits; integers and text pass through."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        return f"{value:.15g}"
    return str(value)


def round_number(value: Cell) -> Cell:
    """The float that format_number prints, or None for non-finite values."""
    if isinstance(value, float):
        if not math.isfinite(value):
            return None
        return float(f"{value:.15g}")
    return value


@dataclass
class Table:
    """
    A titled grid of cells plus free-form metadata.

    Attributes:
        columns: header names
        rows: one list of cells per row, same length as columns
        title: shown by the text renderer, stored by the JSON renderer
        metadata: extra key/value pairs carried into JSON reports
    """
    columns: List[str]
    rows: List[List[Cell]]
    title: str = ""
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        for i, row in enumerate(self.rows):
            if len(row) != len(self.columns):
                raise ValueError(
                    f"row {i} has {len(row)} cells, expected {len(self.columns)}"
                )

    def column(self, name: str) -> List[Cell]:
        index = self.columns.index(name)
        return [row[index] for row in self.rows]


class ReportRenderer(ABC):
    """
    Interface of every output format.

    Subclasses implement render(); writing to disk is shared.
    """

    # -------------------------------------------------------------------------
    # Abstract Properties
    # -------------------------------------------------------------------------

    @property
    @abstractmethod
    def name(self) -> str:
        """Format key used by --format (e.g., 'csv')."""
        pass

    @property
    @abstractmethod
    def extension(self) -> str:
        pass

    # -------------------------------------------------------------------------
    # Abstract Method: render
    # -------------------------------------------------------------------------

    @abstractmethod
    def render(self, table: Table) -> str:
        """The whole document as text, ending in a newline."""
        pass

    # -------------------------------------------------------------------------
    # Shared Helpers
    # -------------------------------------------------------------------------

    def write(self, table: Table, path: Union[str, Path]) -> Path:
        """Write the rendered table; the extension is added when missing."""
        path = Path(path)
        if path.suffix != self.extension:
            path = path.with_name(path.name + self.extension)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(self.render(table))
        return path

    @staticmethod
    def _formatted_rows(table: Table) -> List[List[str]]:
        return [[format_number(cell) for cell in row] for row in table.rows]

    def __str__(self) -> str:
        return self.name


def table_from_columns(title: str, columns: Dict[str, Sequence[Cell]], **metadata: Any) -> Table:
    """Build a Table from equally long named columns."""
    names = list(columns)
    lengths = {len(values) for values in columns.values()}
    if len(lengths) > 1:
        raise ValueError(f"columns differ in length: {sorted(lengths)}")
    count = lengths.pop() if lengths else 0
    rows = [[_plain(columns[name][i]) for name in names] for i in range(count)]
    return Table(columns=names, rows=rows, title=title, metadata=dict(metadata))


def _plain(value: Any) -> Cell:
    # numpy scalars -> Python scalars
    if hasattr(value, "item"):
        return value.item()
    return value
