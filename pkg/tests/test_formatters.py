import io
import json

import pandas as pd
import pytest

from src.config import Task, Verdict
from src.formatters import CSVFormatter, JSONFormatter, TextFormatter, get_formatter
from src.models import AxiomReport, AxiomResult, Budget


@pytest.fixture
def report():
    report = AxiomReport(task=Task.CHECK_AXIOMS, budget=Budget())
    report.add(AxiomResult(name="N1(a)", instances=3))
    broken = report.add(AxiomResult(name="N3", instances=2, budget_spent=5))
    broken.fail({'source': "s0|s0|0|0|s1"}, "first square has no completion")
    report.notes.append("membership is exact")
    return report


def test_json_is_sorted_and_newline_terminated(report):
    text = JSONFormatter().format(report)
    assert text.endswith("}\n")
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data['verdict'] == Verdict.FAIL
    assert data['exit_code'] == 1
    assert [v['name'] for v in data['verdicts']] == ["N1(a)", "N3"]


def test_csv_has_one_row_per_check(report):
    text = CSVFormatter().format(report)
    assert text.splitlines()[0] == "task,check,verdict,instances,budget_spent,witnesses,notes"
    df = pd.read_csv(io.StringIO(text))
    assert list(df['check']) == ["N1(a)", "N3"]
    assert list(df['verdict']) == [Verdict.PASS, Verdict.FAIL]
    assert int(df.loc[1, 'witnesses']) == 1


def test_csv_adds_an_input_row():
    report = AxiomReport(task=Task.BUILD_QUOTIENT, input_error="D must be a subset of Z")
    df = pd.read_csv(io.StringIO(CSVFormatter().format(report)))
    assert list(df['check']) == ["input"]
    assert df.loc[0, 'notes'] == "D must be a subset of Z"


def test_text_report_marks_each_check(report):
    text = TextFormatter().format(report)
    assert "📐 VERIFICATION REPORT" in text
    assert "✅ N1(a)" in text
    assert "❌ N3" in text
    assert "first square has no completion" in text
    assert "- membership is exact" in text


def test_text_report_shows_input_errors():
    report = AxiomReport(task=Task.VERIFY_THEOREM, input_error="cannot read missing.cat")
    text = TextFormatter().format(report)
    assert "⚠️ INPUT ERROR" in text
    assert "Exit code: 3" in text


@pytest.mark.parametrize("name, extension", [("json", "json"), ("CSV", "csv"), ("txt", "txt")])
def test_get_formatter(name, extension):
    assert get_formatter(name).get_file_extension() == extension


def test_unknown_format_is_rejected():
    with pytest.raises(ValueError, match="Unsupported output format"):
        get_formatter("xml")
