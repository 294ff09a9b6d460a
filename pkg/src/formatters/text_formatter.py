"""
Text formatter for verification reports.
"""

import json
from ..models import AxiomReport
from .base import BaseFormatter

RULE = "─" * 64
MARKS = {'pass': '✅', 'fail': '❌', 'inconclusive': '❔'}


class TextFormatter(BaseFormatter):
    """Formatter for plain text output."""

    def format(self, report: AxiomReport) -> str:
        """Format a report as text."""
        budget = report.to_dict()['budgets']
        text = f"""╔══════════════════════════════════════════════════════════════╗
║                    📐 VERIFICATION REPORT                    ║
╚══════════════════════════════════════════════════════════════╝

📊 SUMMARY
{RULE}
Task: {report.task}
Verdict: {MARKS.get(report.verdict, '')} {report.verdict}
Exit code: {report.exit_code}
Budget: {', '.join(f'{key}={value}' for key, value in sorted(budget.items()))}

"""
        if report.input_error:
            text += f"⚠️ INPUT ERROR\n{RULE}\n{report.input_error}\n\n"

        if report.results:
            text += f"📋 CHECKS\n{RULE}\n"
            width = max(len(result.name) for result in report.results)
            for result in report.results:
                text += (f"{MARKS.get(result.verdict, ' ')} {result.name.ljust(width)}  {result.verdict:<12} "
                         f"instances={result.instances}\n")
                for note in result.notes:
                    text += f"      · {note}\n"
                for witness in result.witnesses[:3]:
                    text += f"      ↳ {json.dumps(witness, ensure_ascii=False, sort_keys=True)}\n"
            text += "\n"

        if report.notes:
            text += f"📝 NOTES\n{RULE}\n"
            for note in report.notes:
                text += f"- {note}\n"
            text += "\n"

        text += "╔══════════════════════════════════════════════════════════════╗\n"
        text += "║                        END OF REPORT                        ║\n"
        text += "╚══════════════════════════════════════════════════════════════╝\n"
        return text

    def get_file_extension(self) -> str:
        """Return text file extension."""
        return "txt"

    def get_mime_type(self) -> str:
        """Return text MIME type."""
        return "text/plain"
