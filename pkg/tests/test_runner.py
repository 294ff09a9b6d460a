import json

import pytest

from src.config import Task, Verdict
from src.corpus import export_entry, load_entry
from src.models import AxiomReport, Budget, JobConfig
from src.runner import load_input, render_report, run_job, write_report

BUDGET = Budget(cap_objects=1, cap_solutions=32, cap_instances=6)


def job(task, **kwargs):
    return JobConfig(task=task, budget=BUDGET, **kwargs)


def test_check_axioms_on_a_split_entry_passes():
    report = run_job(job(Task.CHECK_AXIOMS, corpus="split-1-id"))
    assert report.verdict != Verdict.FAIL
    assert report.exit_code in (0, 2)
    assert report.choices['input']['source'] == "corpus:split-1-id"


def test_unknown_corpus_entry_is_an_input_error():
    report = run_job(job(Task.CHECK_AXIOMS, corpus="moebius"))
    assert report.exit_code == 3
    assert "Unknown corpus entry" in report.input_error


def test_missing_input_is_an_input_error():
    report = run_job(job(Task.CHECK_AXIOMS))
    assert report.exit_code == 3


def test_unreadable_file_is_an_input_error(tmp_path):
    report = run_job(job(Task.CHECK_AXIOMS, input_path=str(tmp_path / "absent.cat")))
    assert report.exit_code == 3
    assert report.input_error.startswith("cannot read")


def test_D_outside_Z_is_an_input_error():
    text = export_entry(load_entry("two-simple-id")).replace("sub Z = s0, s1", "sub Z = s0").replace(
        "sub D =", "sub D = s1")
    for task in (Task.VALIDATE_MUTATION_PAIR, Task.BUILD_QUOTIENT, Task.VERIFY_THEOREM):
        report = run_job(job(task), text=text)
        assert report.exit_code == 3, task
        assert report.input_error == "D must be a subset of Z"
        assert report.verdict == Verdict.FAIL


def test_bad_presentation_fails_validate_category(dual_numbers_text):
    text = dual_numbers_text.replace("rel x x = 0", "comp x x = id\nrel x x = 0")
    report = run_job(job(Task.VALIDATE_CATEGORY), text=text)
    assert report.exit_code == 1
    assert "associativity/unit consistency" in report.result("presentation").notes[0]

    other = run_job(job(Task.CHECK_AXIOMS), text=text)
    assert other.exit_code == 3
    assert "associativity/unit consistency" in other.input_error


def test_validate_category_accepts_a_good_file(dual_numbers_text):
    report = run_job(job(Task.VALIDATE_CATEGORY), text=dual_numbers_text)
    assert report.result("presentation").verdict == Verdict.PASS
    assert report.result("suspension_functor").verdict == Verdict.PASS
    assert report.result("hom_exact") is not None


def test_n_override_applies_to_corpus_entries():
    loaded = load_input(job(Task.CHECK_AXIOMS, corpus="split-2-swap", n=5))
    assert loaded.structure.n == 5
    assert loaded.describe()['n'] == 5


def test_build_quotient_records_the_quotient():
    report = run_job(job(Task.BUILD_QUOTIENT, corpus="split-2-swap"))
    assert report.verdict != Verdict.FAIL
    assert report.choices['quotient']['zero_generators'] == []
    assert 'witness' in report.choices


def test_json_output_is_deterministic():
    config = job(Task.VALIDATE_MUTATION_PAIR, corpus="split-1-id")
    first = render_report(run_job(config), "json")
    second = render_report(run_job(config), "json")
    assert first == second
    data = json.loads(first)
    assert list(data) == sorted(data)
    assert data['task'] == Task.VALIDATE_MUTATION_PAIR
    assert data['seed'] == BUDGET.seed
    assert AxiomReport.from_dict(data).exit_code == data['exit_code']


def test_report_is_written_atomically(tmp_path):
    target = tmp_path / "out" / "report.json"
    config = job(Task.CHECK_AXIOMS, corpus="zero", output_path=str(target))
    report = run_job(config)
    path = write_report(report, config)
    assert path == str(target)
    assert json.loads(target.read_text(encoding="utf-8"))['exit_code'] == report.exit_code
    assert not (tmp_path / "out" / "report.json.tmp").exists()


def test_job_config_validates_task_and_n():
    with pytest.raises(ValueError, match="Unknown task"):
        JobConfig(task="prove-everything")
    with pytest.raises(ValueError, match="n must be at least 3"):
        JobConfig(task=Task.CHECK_AXIOMS, n=2)


WITNESS_FILE = "\n".join([
    "field p=2",
    "n=3",
    "gen s",
    "hom s s dim=1 basis=e",
    "comp e e = e",
    "angles list",
    "sub D = s",
    "seq s|s|0 : 1 ; - ; -",
    "seq 0|s|s : - ; 1 ; -",
    "fixed s : s|s|0 : 1 ; - ; -",
    "cofixed s : 0|s|s : - ; 1 ; -",
]) + "\n"


def test_supplied_witness_is_certified():
    report = run_job(job(Task.VERIFY_THEOREM), text=WITNESS_FILE)
    assert report.choices['input']['witness_supplied']
    assert report.result("fixed_angles").verdict == Verdict.PASS


def test_corrupted_witness_fails_verification():
    text = WITNESS_FILE.replace("fixed s : s|s|0 : 1 ;", "fixed s : s|s|0 : 0 ;")
    report = run_job(job(Task.VERIFY_THEOREM), text=text)
    assert report.exit_code == 1
    result = report.result("fixed_angles")
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['kind'] == "fixed"


NON_EXACT_FILE = "\n".join(WITNESS_FILE.splitlines()[:7] + ["seq s|s|0 : 0 ; - ; -"]) + "\n"


@pytest.mark.parametrize("task", [Task.VALIDATE_MUTATION_PAIR, Task.BUILD_QUOTIENT, Task.VERIFY_THEOREM])
def test_non_exact_member_is_rejected_at_load(task):
    report = run_job(job(task), text=NON_EXACT_FILE)
    assert report.exit_code == 3
    assert "Hom-exactness screen" in report.input_error


def test_non_exact_member_is_a_failing_check_for_check_axioms():
    report = run_job(job(Task.CHECK_AXIOMS), text=NON_EXACT_FILE)
    assert report.exit_code == 1
    assert report.result("hom_exact").verdict == Verdict.FAIL
