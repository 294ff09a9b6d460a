"""
CSV formatter for verification reports.
"""

import pandas as pd
from ..models import AxiomReport
from .base import BaseFormatter

COLUMNS = ['task', 'check', 'verdict', 'instances', 'budget_spent', 'witnesses', 'notes']


class CSVFormatter(BaseFormatter):
    """One row per check."""

    def format(self, report: AxiomReport) -> str:
        """Format a report as CSV."""
        rows = [
            {
                'task': report.task,
                'check': result.name,
                'verdict': result.verdict,
                'instances': result.instances,
                'budget_spent': result.budget_spent,
                'witnesses': len(result.witnesses),
                'notes': '; '.join(result.notes),
            }
            for result in report.results
        ]
        if report.input_error:
            rows.append({
                'task': report.task,
                'check': 'input',
                'verdict': report.verdict,
                'instances': 0,
                'budget_spent': 0,
                'witnesses': 0,
                'notes': report.input_error,
            })
        df = pd.DataFrame(rows, columns=COLUMNS)
        return df.to_csv(index=False)

    def get_file_extension(self) -> str:
        """Return CSV file extension."""
        return "csv"

    def get_mime_type(self) -> str:
        """Return CSV MIME type."""
        return "text/csv"
