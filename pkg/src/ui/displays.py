"""
Report display components for the Streamlit application.
"""

import streamlit as st
import pandas as pd

from ..config import Verdict
from ..models import AxiomReport


class DataDisplay:
    """Components for displaying verification reports."""

    @staticmethod
    def display_report(report: AxiomReport):
        """Display verdict metrics and the per-check table."""
        st.subheader("📊 Summary")
        counts = {verdict: sum(1 for r in report.results if r.verdict == verdict)
                  for verdict in (Verdict.PASS, Verdict.FAIL, Verdict.INCONCLUSIVE)}
        col1, col2, col3, col4 = st.columns(4)
        with col1:
            st.metric("Verdict", report.verdict)
        with col2:
            st.metric("Passed", counts[Verdict.PASS])
        with col3:
            st.metric("Failed", counts[Verdict.FAIL])
        with col4:
            st.metric("Inconclusive", counts[Verdict.INCONCLUSIVE])

        if report.input_error:
            DataDisplay.display_error(f"Input error: {report.input_error}")

        if report.results:
            st.subheader("📋 Checks")
            table = pd.DataFrame([
                {'check': r.name, 'verdict': r.verdict, 'instances': r.instances, 'notes': '; '.join(r.notes)}
                for r in report.results
            ])
            st.dataframe(table, use_container_width=True)

            failing = [r for r in report.results if r.witnesses]
            for result in failing:
                with st.expander(f"Witnesses for {result.name}"):
                    st.json(result.witnesses)

        if report.notes:
            st.subheader("📝 Notes")
            for note in report.notes:
                st.write(f"- {note}")

    @staticmethod
    def display_raw_data_preview(report: AxiomReport):
        """Display the full report as JSON."""
        st.markdown("---")
        st.subheader("🔍 Raw Report")
        st.json(report.to_dict())

    @staticmethod
    def display_error(message: str):
        """Display error message."""
        st.error(f"❌ {message}")

    @staticmethod
    def display_success(message: str):
        """Display success message."""
        st.success(f"✅ {message}")

    @staticmethod
    def create_progress_components():
        """Create progress bar and status text components."""
        progress_bar = st.progress(0)
        status_text = st.empty()
        return progress_bar, status_text
