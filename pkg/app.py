"""
Main Streamlit application for the n-angulation verifier.
"""

from typing import Any, Dict

import streamlit as st

from src.config import EReading
from src.models import AxiomReport, Budget, JobConfig
from src.runner import run_job
from src.ui import UIComponents, DataDisplay, DownloadManager
from src.utils import create_progress_callback


class VerifierApp:
    """Main application class for the verifier."""

    def __init__(self):
        self.download_manager = DownloadManager()

    def run(self):
        """Run the main application."""
        UIComponents.setup_page_config()
        UIComponents.render_header()

        task, settings, run_button = UIComponents.render_sidebar()

        if run_button:
            self._handle_job_request(task, settings)
        else:
            UIComponents.render_instructions()

    def _handle_job_request(self, task: str, settings: Dict[str, Any]):
        """Run a job and show its report."""
        if not UIComponents.validate_input(settings):
            return

        with st.spinner("📐 Verification in progress..."):
            try:
                report = self._run_job(task, settings)
                if report.input_error:
                    DataDisplay.display_error(report.input_error)
                else:
                    DataDisplay.display_success(f"Job finished with verdict: {report.verdict}")
                DataDisplay.display_report(report)
                self.download_manager.render_download_section(report)
                DataDisplay.display_raw_data_preview(report)

            except Exception as e:
                DataDisplay.display_error(f"An error occurred during verification: {str(e)}")

    def _run_job(self, task: str, settings: Dict[str, Any]) -> AxiomReport:
        """Build the job config and run it with a progress bar."""
        budget = Budget(
            settings['cap_objects'], settings['cap_solutions'], settings['cap_instances'],
            settings['seed'], settings['exhaustive'],
        )
        config = JobConfig(
            task=task,
            input_path=settings.get('file_name'),
            corpus=settings.get('corpus'),
            n=settings.get('n'),
            budget=budget,
            e_reading=settings.get('e_reading', EReading.EXACT),
        )
        progress_bar, status_text = DataDisplay.create_progress_components()
        progress_callback = create_progress_callback(progress_bar, status_text)
        try:
            return run_job(config, progress_callback, text=settings.get('text'))
        finally:
            progress_bar.empty()
            status_text.empty()


def main():
    """Main entry point for the application."""
    app = VerifierApp()
    app.run()


if __name__ == "__main__":
    main()
