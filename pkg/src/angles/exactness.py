"""
Exactness of the long Hom sequences induced by an n-sequence.

For a probe W the sequence is extended one period in each direction
(Σ'-shifted, original, Σ-shifted) and Hom(W, -) or Hom(-, W) is applied.
Exactness at a middle term M of L -a-> M -b-> N is the rank condition
b a = 0 and rank(a) + rank(b) = dim Hom(W, M).
"""

import logging
from typing import Iterable, Iterator, List, Optional, Tuple

from ..category import Morphism, ObjectExpr
from ..ffmat import rank
from ..models import AxiomResult
from .sequences import NSequence

logger = logging.getLogger(__name__)

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"
VARIANCES = (COVARIANT, CONTRAVARIANT)


def long_sequence(seq: NSequence) -> List[Morphism]:
    """Σ'f₁ .. Σ'f_{n-1}, (-1)^n η Σ'f_n, f₁ .. f_n, Σf₁ .. Σf_n."""
    structure = seq.structure
    back = [structure.suspend(f, -1) for f in seq.maps[:-1]]
    wrap = (structure.unit(seq.objects[0]) @ structure.suspend(seq.maps[-1], -1)).scale(structure.sign)
    forward = [structure.suspend(f) for f in seq.maps]
    return back + [wrap] + list(seq.maps) + forward


def exact_at(a: Morphism, b: Morphism, probe: ObjectExpr, variance: str = COVARIANT) -> bool:
    """Exactness of the Hom sequence at the middle object of a then b."""
    cat = a.category
    if variance == COVARIANT:
        first, second = cat.post_matrix(a, probe), cat.post_matrix(b, probe)
        middle = cat.layout(probe, a.codomain).size
    else:
        first, second = cat.pre_matrix(b, probe), cat.pre_matrix(a, probe)
        middle = cat.layout(a.codomain, probe).size
    if not (second @ first).is_zero():
        return False
    return rank(first) + rank(second) == middle


def exactness_failures(
    seq: NSequence,
    variance: str = COVARIANT,
    probes: Optional[Iterable[ObjectExpr]] = None,
) -> Iterator[Tuple[ObjectExpr, int]]:
    """Yield (probe, position) for every interior position that is not exact."""
    chain = long_sequence(seq)
    probe_list = list(probes) if probes is not None else list(seq.structure.generator_objects())
    for probe in probe_list:
        for position in range(len(chain) - 1):
            if not exact_at(chain[position], chain[position + 1], probe, variance):
                yield probe, position + 1


def is_hom_exact(seq: NSequence, variance: str = COVARIANT, probes: Optional[Iterable[ObjectExpr]] = None) -> bool:
    return next(exactness_failures(seq, variance, probes), None) is None


def check_hom_exact(
    seq: NSequence,
    variance: str = COVARIANT,
    probes: Optional[Iterable[ObjectExpr]] = None,
) -> AxiomResult:
    """Rank-based exactness check of one sequence for every probe."""
    result = AxiomResult(name=f"hom_exact_{variance}")
    names = seq.structure.category.generator_names
    probe_list = list(probes) if probes is not None else list(seq.structure.generator_objects())
    result.instances = len(probe_list)
    for probe, position in exactness_failures(seq, variance, probe_list):
        result.fail({
            'sequence': seq.to_payload(),
            'probe': probe.names(names),
            'variance': variance,
            'position': position,
        })
        logger.debug("sequence not %s exact at position %d for probe %s", variance, position, probe.names(names))
        break
    return result
