"""
Output formatters for verification reports.
"""

from .base import BaseFormatter
from .json_formatter import JSONFormatter
from .csv_formatter import CSVFormatter
from .text_formatter import TextFormatter
from ..config import OutputFormat

FORMATTERS = {
    OutputFormat.JSON: JSONFormatter,
    OutputFormat.CSV: CSVFormatter,
    OutputFormat.TXT: TextFormatter,
}


def get_formatter(output_format: str) -> BaseFormatter:
    """Formatter instance for JSON, CSV or TXT."""
    try:
        return FORMATTERS[output_format.upper()]()
    except KeyError:
        raise ValueError(f"Unsupported output format: {output_format}") from None


__all__ = [
    'BaseFormatter', 'JSONFormatter', 'CSVFormatter', 'TextFormatter', 'FORMATTERS', 'get_formatter'
]
