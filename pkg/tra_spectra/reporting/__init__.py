"""
Reporting subpackage - results written as CSV, JSON or aligned text.

• Table - the neutral grid every command produces
• ReportRenderer and its CSV/JSON/text strategies
• RendererFactory - create a renderer from --format
• *_layout builders - result records -> Table
"""

from .base import ReportRenderer, Table, format_number, round_number, table_from_columns
from .renderers import CsvRenderer, JsonRenderer, TextRenderer
from .factory import RendererFactory
from .tables import (
    convergence_layout,
    convergence_diffs,
    phase_shift_layout,
    wavefunction_layout,
    plateau_layout,
    plateau_summary,
    verify_layout,
)

__all__ = [
    "ReportRenderer",
    "Table",
    "format_number",
    "round_number",
    "table_from_columns",
    "CsvRenderer",
    "JsonRenderer",
    "TextRenderer",
    "RendererFactory",
    "convergence_layout",
    "convergence_diffs",
    "phase_shift_layout",
    "wavefunction_layout",
    "plateau_layout",
    "plateau_summary",
    "verify_layout",
]
