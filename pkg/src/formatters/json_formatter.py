"""
JSON formatter for verification reports.
"""

import json
from ..config import Config
from ..models import AxiomReport
from .base import BaseFormatter


class JSONFormatter(BaseFormatter):
    """Formatter for JSON output; keys are sorted so reruns are byte-identical."""

    def format(self, report: AxiomReport) -> str:
        """Format a report as JSON."""
        return json.dumps(report.to_dict(), indent=Config.REPORT_INDENT, ensure_ascii=False, sort_keys=True) + "\n"

    def get_file_extension(self) -> str:
        """Return JSON file extension."""
        return "json"

    def get_mime_type(self) -> str:
        """Return JSON MIME type."""
        return "application/json"
