"""
Base formatter class.
"""

from abc import ABC, abstractmethod
from ..models import AxiomReport


class BaseFormatter(ABC):
    """Base class for all report formatters."""

    @abstractmethod
    def format(self, report: AxiomReport) -> str:
        """Format a report into a specific output format."""
        pass

    @abstractmethod
    def get_file_extension(self) -> str:
        """Get file extension for this format."""
        pass

    @abstractmethod
    def get_mime_type(self) -> str:
        """Get MIME type for this format."""
        pass
