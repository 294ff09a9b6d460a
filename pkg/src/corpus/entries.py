"""
Built-in example structures.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from ..angles import AngleClass, AngulatedStructure, SplitAngleClass, WrapExactClass, check_hom_exact_screen
from ..category import PresentedCategory, Shift, Subcategory, SuspensionFunctor
from ..config import Config, Verdict
from ..errors import PresentationError
from ..ffmat import FpMatrix
from ..fileformat import serialize_structure
from ..models import AxiomResult, Budget

logger = logging.getLogger(__name__)


@dataclass
class CorpusEntry:
    """A named structure with its angle class and default subcategories."""
    name: str
    structure: AngulatedStructure
    angles: AngleClass
    Z: Subcategory
    D: Subcategory
    expected: Dict[str, str] = field(default_factory=dict)
    provenance: str = ""

    @property
    def category(self) -> PresentedCategory:
        return self.structure.category

    def describe(self) -> Dict[str, object]:
        names = self.category.generator_names
        return {
            'name': self.name,
            'p': self.category.p,
            'n': self.structure.n,
            'generators': list(names),
            'angles': self.angles.name,
            'Z': self.Z.names(names),
            'D': self.D.names(names),
            'expected': self.expected,
            'provenance': self.provenance,
        }


def semisimple_category(p: int, count: int, name: str = "") -> PresentedCategory:
    """Generators s0.. with Hom(g, g) = F_p id_g and no cross morphisms."""
    names = [f"s{g}" for g in range(count)]
    basis = {(g, g): [f"id_{names[g]}"] for g in range(count)}
    composition = {(g, g, g): np.ones((1, 1, 1), dtype=np.int64) for g in range(count)}
    identities = {g: [1] for g in range(count)}
    return PresentedCategory(p, names, basis, composition, identities, name=name).validate()


def permutation_suspension(category: PresentedCategory, permutation: Sequence[int]) -> SuspensionFunctor:
    """Σ permuting the generators of a semisimple category, identity on scalars."""
    hom_maps = {
        (g, h): FpMatrix.identity(category.p, category.hom_dim(g, h))
        for g in category.generators() for h in category.generators()
    }
    return SuspensionFunctor(category, permutation, hom_maps).validate()


def split_structure(p: int, count: int, permutation: Optional[Sequence[int]] = None, n: int = 4) -> CorpusEntry:
    """Semisimple category with contractible angles."""
    if p not in Config.SUPPORTED_PRIMES:
        raise PresentationError(f"p must be one of {Config.SUPPORTED_PRIMES}, got {p}")
    permutation = list(range(count)) if permutation is None else list(permutation)
    if count and permutation == list(range(count)):
        label = "id"
    elif permutation == list(range(count))[::-1] and count == 2:
        label = "swap"
    else:
        label = "".join(str(s) for s in permutation) or "empty"
    name = f"split-p{p}-g{count}-{label}-n{n}"
    category = semisimple_category(p, count, name=name)
    shift = Shift.from_automorphism(permutation_suspension(category, permutation))
    structure = AngulatedStructure(category, shift, n)
    everything = Subcategory.of(category.generators())
    return CorpusEntry(
        name=name,
        structure=structure,
        angles=SplitAngleClass(structure),
        Z=everything,
        D=Subcategory(),
        expected={'check-axioms': Verdict.PASS},
        provenance="semisimple presentation with split angles",
    )


def two_simple_structure(swap: bool, p: int = 2, n: int = 4) -> CorpusEntry:
    """Two simple objects s0, s1 with Σ swapping them or fixing both."""
    entry = split_structure(p, 2, [1, 0] if swap else [0, 1], n)
    entry.name = f"two-simple-{'swap' if swap else 'id'}-p{p}-n{n}"
    entry.category.name = entry.name
    entry.provenance = "two simple objects without cross morphisms"
    return entry


def zero_structure(p: int = 2, n: int = 4) -> CorpusEntry:
    """The zero category; every check passes vacuously."""
    entry = split_structure(p, 0, [], n)
    entry.name = f"zero-p{p}-n{n}"
    entry.category.name = entry.name
    entry.provenance = "no generators"
    return entry


def local_algebra_category() -> PresentedCategory:
    """Free modules over F_2[x]/(x^2): one generator P, End(P) spanned by id and x."""
    tensor = np.zeros((2, 2, 2), dtype=np.int64)
    tensor[0, 0] = [1, 0]
    tensor[0, 1] = [0, 1]
    tensor[1, 0] = [0, 1]
    return PresentedCategory(2, ["P"], {(0, 0): ["id", "x"]}, {(0, 0, 0): tensor}, {0: [1, 0]},
                             name="dual-numbers").validate()


def local_algebra_candidate(n: int = 4) -> CorpusEntry:
    """Wrap-exact sequences of free F_2[x]/(x^2)-modules; the checker decides the verdict."""
    category = local_algebra_category()
    shift = Shift.from_automorphism(SuspensionFunctor.identity_on(category))
    structure = AngulatedStructure(category, shift, n)
    return CorpusEntry(
        name=f"dual-numbers-n{n}",
        structure=structure,
        angles=WrapExactClass(structure),
        Z=Subcategory.of([0]),
        D=Subcategory(),
        provenance="candidate class on a local algebra; verdicts are recorded, not asserted",
    )


CORPUS: Dict[str, Callable[[int], CorpusEntry]] = {
    "split-1-id": lambda n: split_structure(2, 1, [0], n),
    "split-2-swap": lambda n: split_structure(2, 2, [1, 0], n),
    "two-simple-swap": lambda n: two_simple_structure(True, n=n),
    "two-simple-id": lambda n: two_simple_structure(False, n=n),
    "zero": lambda n: zero_structure(n=n),
    "dual-numbers": lambda n: local_algebra_candidate(n),
}

DEFAULT_N = 4


def load_entry(name: str, n: int = DEFAULT_N) -> CorpusEntry:
    try:
        builder = CORPUS[name]
    except KeyError:
        raise ValueError(f"Unknown corpus entry: {name}") from None
    return builder(n)


def screen_entry(entry: CorpusEntry, budget: Budget) -> AxiomResult:
    """Hom-exactness of the enumerated members of an entry."""
    return check_hom_exact_screen(entry.angles, budget)


def load_corpus(screen: bool = True, budget: Optional[Budget] = None, n: int = DEFAULT_N) -> List[CorpusEntry]:
    """Every corpus entry; with screen, members must pass the Hom-exactness screen."""
    entries = [builder(n) for builder in CORPUS.values()]
    if screen:
        budget = budget or Budget()
        for entry in entries:
            result = screen_entry(entry, budget)
            if result.verdict == Verdict.FAIL:
                raise PresentationError(f"corpus entry {entry.name} fails the Hom-exactness screen")
            logger.info("screened %s: %d instances", entry.name, result.instances)
    return entries


def export_entry(entry: CorpusEntry) -> str:
    """The entry as a canonical category file."""
    return serialize_structure(entry.structure, entry.angles, entry.Z, entry.D, name=entry.name)
