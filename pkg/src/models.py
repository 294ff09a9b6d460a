"""
Data models for budgets, search outcomes and verification reports.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Generic, List, Optional, TypeVar

from .config import Config, Task, Verdict

T = TypeVar("T")


@dataclass(frozen=True)
class Budget:
    """Search budget shared by every bounded check."""
    cap_objects: int = Config.DEFAULT_CAP_OBJECTS
    cap_solutions: int = Config.DEFAULT_CAP_SOLUTIONS
    cap_instances: int = Config.DEFAULT_CAP_INSTANCES
    seed: int = Config.DEFAULT_SEED
    exhaustive: bool = False

    def __post_init__(self):
        for name in ("cap_objects", "cap_solutions", "cap_instances"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cap_objects': self.cap_objects,
            'cap_solutions': self.cap_solutions,
            'cap_instances': self.cap_instances,
            'seed': self.seed,
            'exhaustive': self.exhaustive,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Budget':
        return cls(
            cap_objects=data.get('cap_objects', Config.DEFAULT_CAP_OBJECTS),
            cap_solutions=data.get('cap_solutions', Config.DEFAULT_CAP_SOLUTIONS),
            cap_instances=data.get('cap_instances', Config.DEFAULT_CAP_INSTANCES),
            seed=data.get('seed', Config.DEFAULT_SEED),
            exhaustive=data.get('exhaustive', False),
        )


@dataclass
class SearchOutcome(Generic[T]):
    """Result of a bounded search.

    value is None when nothing was found; exhausted tells whether the
    budget ran out before the search space was covered, which makes a
    missing value inconclusive rather than a definite negative.
    """
    value: Optional[T] = None
    exhausted: bool = False
    spent: int = 0

    @property
    def found(self) -> bool:
        return self.value is not None


@dataclass
class AxiomResult:
    """Verdict of one named check with its witnesses."""
    name: str
    verdict: str = Verdict.PASS
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    instances: int = 0
    budget_spent: int = 0
    notes: List[str] = field(default_factory=list)

    def fail(self, witness: Dict[str, Any], note: Optional[str] = None) -> None:
        """Record a counterexample."""
        self.verdict = Verdict.FAIL
        self.witnesses.append(witness)
        if note:
            self.notes.append(note)

    def undecided(self, note: str) -> None:
        """Downgrade a pass to inconclusive."""
        if self.verdict == Verdict.PASS:
            self.verdict = Verdict.INCONCLUSIVE
        if note not in self.notes:
            self.notes.append(note)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'verdict': self.verdict,
            'witnesses': self.witnesses,
            'instances': self.instances,
            'budget_spent': self.budget_spent,
            'notes': self.notes,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AxiomResult':
        return cls(
            name=data.get('name', ''),
            verdict=data.get('verdict', Verdict.PASS),
            witnesses=list(data.get('witnesses', [])),
            instances=data.get('instances', 0),
            budget_spent=data.get('budget_spent', 0),
            notes=list(data.get('notes', [])),
        )


@dataclass
class AxiomReport:
    """A task report: per-check results plus the run parameters."""
    task: str
    results: List[AxiomResult] = field(default_factory=list)
    budget: Optional[Budget] = None
    choices: Dict[str, Any] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)
    input_error: Optional[str] = None

    def add(self, result: AxiomResult) -> AxiomResult:
        self.results.append(result)
        return result

    def extend(self, results: List[AxiomResult], prefix: str = "") -> None:
        for result in results:
            if prefix:
                result.name = f"{prefix}{result.name}"
            self.results.append(result)

    @property
    def verdict(self) -> str:
        if self.input_error:
            return Verdict.FAIL
        return Verdict.combine([r.verdict for r in self.results])

    @property
    def exit_code(self) -> int:
        """0 all pass, 1 any fail, 2 inconclusive without fail, 3 input error."""
        if self.input_error:
            return 3
        return {Verdict.PASS: 0, Verdict.FAIL: 1, Verdict.INCONCLUSIVE: 2}[self.verdict]

    def result(self, name: str) -> Optional[AxiomResult]:
        for r in self.results:
            if r.name == name:
                return r
        return None

    def to_dict(self) -> Dict[str, Any]:
        budget = self.budget or Budget()
        return {
            'task': self.task,
            'verdict': self.verdict,
            'exit_code': self.exit_code,
            'verdicts': [r.to_dict() for r in self.results],
            'budgets': budget.to_dict(),
            'seed': budget.seed,
            'choices': self.choices,
            'notes': self.notes,
            'input_error': self.input_error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'AxiomReport':
        return cls(
            task=data.get('task', ''),
            results=[AxiomResult.from_dict(r) for r in data.get('verdicts', [])],
            budget=Budget.from_dict(data.get('budgets', {})),
            choices=dict(data.get('choices', {})),
            notes=list(data.get('notes', [])),
            input_error=data.get('input_error'),
        )


@dataclass
class JobConfig:
    """One batch job as given on the command line."""
    task: str
    input_path: Optional[str] = None
    corpus: Optional[str] = None
    n: Optional[int] = None
    budget: Budget = field(default_factory=Budget)
    output_path: Optional[str] = None
    output_format: str = "JSON"
    e_reading: str = "exact"

    def __post_init__(self):
        if self.task not in Task.ALL:
            raise ValueError(f"Unknown task: {self.task}")
        if self.n is not None and self.n < Config.MIN_N:
            raise ValueError(f"n must be at least {Config.MIN_N}, got {self.n}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'task': self.task,
            'input_path': self.input_path,
            'corpus': self.corpus,
            'n': self.n,
            'budget': self.budget.to_dict(),
            'output_path': self.output_path,
            'output_format': self.output_format,
            'e_reading': self.e_reading,
        }
