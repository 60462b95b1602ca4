"""
Renderer Factory for creating output-format renderers.

📚 CONCEPT: Factory Pattern

The CLI only knows the --format string; the factory turns it into a
renderer. A new format needs one new entry here.
"""

from typing import Dict, List, Type

from .base import ReportRenderer
from .renderers import CsvRenderer, JsonRenderer, TextRenderer


class RendererFactory:
    """Registry of renderers keyed by format name."""

    # Class-level mapping: belongs to the class, shared by every caller
    _renderers: Dict[str, Type[ReportRenderer]] = {
        "csv": CsvRenderer,
        "json": JsonRenderer,
        "text": TextRenderer,
    }

    @classmethod
    def create(cls, format_name: str) -> ReportRenderer:
        """
        Create the renderer for a format.

        Raises:
            ValueError: unknown format
        """
        renderer_class = cls._renderers.get(format_name.strip().lower())
        if renderer_class is None:
            raise ValueError(
                f"No renderer found for format: {format_name}\n"
                f"Available formats: {list(cls._renderers.keys())}"
            )
        return renderer_class()

    @classmethod
    def register(cls, format_name: str, renderer_class: Type[ReportRenderer]) -> None:
        """Register (or replace) the renderer for a format."""
        cls._renderers[format_name] = renderer_class

    @classmethod
    def available_formats(cls) -> List[str]:
        return list(cls._renderers.keys())
