"""
Batch job runner: load a structure, run the task pipeline, write the report.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Optional

from .angles import AngleClass, AngulatedStructure, check_hom_exact_screen, run_axiom_suite
from .category import Subcategory
from .config import Task, Verdict
from .corpus import DEFAULT_N, load_entry
from .errors import InputError, PresentationError
from .fileformat import CategoryFile, parse_category_file
from .formatters import get_formatter
from .models import AxiomReport, AxiomResult, JobConfig
from .mutation import MutationPairWitness
from .quotient import build_quotient_report, obtain_witness, verify_frobenius_quotient, verify_quotient_angulation
from .utils import atomic_write_text, default_output_path

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


@dataclass
class JobInput:
    """Everything a task pipeline consumes."""
    source: str
    name: str
    structure: AngulatedStructure
    angles: AngleClass
    Z: Subcategory
    D: Subcategory
    witness: Optional[MutationPairWitness] = None

    def describe(self) -> dict:
        category = self.structure.category
        names = category.generator_names
        return {
            'source': self.source,
            'name': self.name,
            'p': category.p,
            'n': self.structure.n,
            'generators': list(names),
            'angles': self.angles.name,
            'Z': self.Z.names(names),
            'D': self.D.names(names),
            'witness_supplied': self.witness is not None,
        }


def from_category_file(document: CategoryFile, source: str) -> JobInput:
    return JobInput(source, document.name, document.structure, document.angles,
                    document.Z, document.D, document.witness())


def _read_input(config: JobConfig, text: Optional[str]) -> JobInput:
    if text is not None:
        return from_category_file(parse_category_file(text, config.n), config.input_path or "<upload>")
    if config.input_path:
        try:
            with open(config.input_path, encoding="utf-8") as handle:
                text = handle.read()
        except OSError as error:
            raise InputError(f"cannot read {config.input_path}: {error.strerror}") from None
        return from_category_file(parse_category_file(text, config.n), config.input_path)
    if config.corpus:
        entry = load_entry(config.corpus, config.n or DEFAULT_N)
        return JobInput(f"corpus:{config.corpus}", entry.name, entry.structure, entry.angles, entry.Z, entry.D)
    raise InputError("either an input file or a corpus entry is required")


def screen_input(job: JobInput, config: JobConfig) -> JobInput:
    """Reject a membership oracle whose members are not Hom-exact.

    validate-category and check-axioms report the screen as a check of
    their own; every other task refuses to run on such an oracle.
    """
    if config.task in (Task.VALIDATE_CATEGORY, Task.CHECK_AXIOMS):
        return job
    result = check_hom_exact_screen(job.angles, config.budget)
    if result.verdict == Verdict.FAIL:
        witness = result.witnesses[0]
        raise PresentationError(
            f"angle class {job.angles.name} fails the Hom-exactness screen: a member is not "
            f"{witness['variance']} exact at position {witness['position']} against {witness['probe']}"
        )
    logger.debug("screened %s: %d instances", job.name or job.source, result.instances)
    return job


def load_input(config: JobConfig, text: Optional[str] = None) -> JobInput:
    """Structure named by the config: uploaded text, a category file or a corpus entry."""
    return screen_input(_read_input(config, text), config)


def _validate_category(job: JobInput, report: AxiomReport) -> None:
    category = job.structure.category
    report.add(AxiomResult(name="presentation", instances=category.generator_count))
    report.add(AxiomResult(name="suspension_functor", instances=category.generator_count))
    report.add(check_hom_exact_screen(job.angles, report.budget))


def _validate_mutation_pair(job: JobInput, report: AxiomReport, progress: Optional[ProgressCallback]) -> None:
    witness = obtain_witness(job.angles, job.Z, job.D, report.budget, report, progress, job.witness)
    if witness is None:
        report.notes.append("no mutation pair witness within budget")


def _build_quotient(job: JobInput, report: AxiomReport, progress: Optional[ProgressCallback]) -> None:
    witness = obtain_witness(job.angles, job.Z, job.D, report.budget, report, progress, job.witness)
    if witness is None:
        report.notes.append("mutation pair not established; quotient not built")
        return
    build_quotient_report(witness, report.budget, report)


def execute(job: JobInput, config: JobConfig, progress: Optional[ProgressCallback] = None) -> AxiomReport:
    """Run the task pipeline on a loaded input."""
    budget = config.budget
    task = config.task
    if task == Task.VERIFY_THEOREM:
        report = verify_quotient_angulation(job.angles, job.Z, job.D, budget, progress, job.witness)
    elif task == Task.VERIFY_FROBENIUS:
        report = verify_frobenius_quotient(job.angles, job.Z, budget, config.e_reading, progress)
        report.choices['e_reading'] = config.e_reading
    else:
        report = AxiomReport(task=task, budget=budget)
        if task == Task.VALIDATE_CATEGORY:
            _validate_category(job, report)
        elif task == Task.CHECK_AXIOMS:
            report.extend(run_axiom_suite(job.angles, budget, progress))
        elif task == Task.VALIDATE_MUTATION_PAIR:
            _validate_mutation_pair(job, report, progress)
        elif task == Task.BUILD_QUOTIENT:
            _build_quotient(job, report, progress)
        else:
            raise ValueError(f"Unknown task: {task}")
    report.budget = budget
    report.choices['input'] = job.describe()
    return report


def run_job(config: JobConfig, progress: Optional[ProgressCallback] = None, text: Optional[str] = None) -> AxiomReport:
    """Load, run and report; domain errors become exit status 3.

    For validate-category a presentation that fails its laws is the
    answer to the task, so it is reported as a failing check instead.
    """
    try:
        job = load_input(config, text)
    except PresentationError as error:
        report = AxiomReport(task=config.task, budget=config.budget)
        if config.task == Task.VALIDATE_CATEGORY:
            report.add(AxiomResult(name="presentation")).fail({'error': str(error)}, str(error))
        else:
            report.input_error = str(error)
        logger.warning("could not load input: %s", error)
        return report
    except (InputError, ValueError) as error:
        logger.warning("could not load input: %s", error)
        return AxiomReport(task=config.task, budget=config.budget, input_error=str(error))

    logger.info("running %s on %s", config.task, job.name or job.source)
    try:
        report = execute(job, config, progress)
    except InputError as error:
        report = AxiomReport(task=config.task, budget=config.budget, input_error=str(error))
        report.choices['input'] = job.describe()
    if report.verdict == Verdict.FAIL:
        logger.warning("%s failed: %s", config.task, ", ".join(r.name for r in report.results if r.verdict == Verdict.FAIL))
    return report


def render_report(report: AxiomReport, output_format: str) -> str:
    return get_formatter(output_format).format(report)


def write_report(report: AxiomReport, config: JobConfig) -> str:
    """Render in the configured format and write atomically; returns the path."""
    formatter = get_formatter(config.output_format)
    path = config.output_path or default_output_path(config.task, formatter.get_file_extension())
    atomic_write_text(path, formatter.format(report))
    return path
