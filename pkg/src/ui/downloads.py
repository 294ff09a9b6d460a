"""
Download management for the Streamlit application.
"""

import streamlit as st

from ..formatters import FORMATTERS
from ..models import AxiomReport


class DownloadManager:
    """Manages download functionality for different formats."""

    def __init__(self):
        self.formatters = {name: formatter() for name, formatter in FORMATTERS.items()}

    def render_download_section(self, report: AxiomReport):
        """Render download section with all format options."""
        st.markdown("---")
        st.subheader("💾 Download Report")

        cols = st.columns(len(self.formatters))
        for i, (format_name, formatter) in enumerate(self.formatters.items()):
            with cols[i]:
                self._create_download_button(report, formatter, format_name)

    def _create_download_button(self, report: AxiomReport, formatter, format_name: str):
        """Create a single download button."""
        try:
            st.download_button(
                label=f"📄 {format_name}",
                data=formatter.format(report),
                file_name=f"report_{report.task}.{formatter.get_file_extension()}",
                mime=formatter.get_mime_type()
            )
        except Exception as e:
            st.error(f"Error generating {format_name}: {str(e)}")
