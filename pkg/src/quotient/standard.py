"""
Standard angles and the class Φ on Z/[D].

A member X₁ -> X₂ -> ... -> X_n -> ΣX₁ of Θ with terms in Z and a D-monic
first map is compared with the fixed angle X₁ -> D₁ -> ... -> TX₁ -> ΣX₁:
completing the identity of X₁ to a morphism of sequences gives
a_n: X_n -> TX₁, and the standard angle is

    X₁ -> X₂ -> ... -> X_n -> TX₁

in the quotient with last map the class of a_n. Φ is the class of
sequences isomorphic to standard angles.
"""

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

import numpy as np

from ..angles import (
    COVARIANT,
    AngleClass,
    AngulatedStructure,
    NSequence,
    SequenceMorphism,
    is_hom_exact,
    sample_members,
    sequence_isomorphism,
    solve_sequence_morphism,
)
from ..angles.solving import SequenceMorphismSpace
from ..category import Morphism
from ..config import Membership
from ..errors import CorruptWitnessError, PreconditionError
from ..models import Budget, SearchOutcome
from ..mutation import is_D_monic
from .functor import QuotientFunctor

logger = logging.getLogger(__name__)


@dataclass
class StandardAngle:
    """An ambient member, its completion into the fixed angle and the quotient sequence."""
    source: NSequence
    morphism: SequenceMorphism
    space: SequenceMorphismSpace
    sequence: NSequence

    @property
    def a_n(self) -> Morphism:
        return self.morphism.components[-1]

    def independent(self, functor: QuotientFunctor) -> bool:
        """Every completion has the same last component modulo D."""
        n = self.source.n
        return all(functor.quotient.in_ideal(c) for c in self.space.kernel_components(n - 1))

    def to_payload(self) -> dict:
        return {
            'source': self.source.to_payload(),
            'a_n': self.a_n.to_payload(),
            'sequence': self.sequence.to_payload(),
        }


def standard_angle(
    seq: NSequence,
    functor: QuotientFunctor,
    structure: AngulatedStructure,
    angles: Optional[AngleClass] = None,
    budget: Optional[Budget] = None,
) -> StandardAngle:
    """The standard angle of an ambient member; structure is (Z/[D], T, n).

    Membership of seq is only checked when an angle class and a budget are
    given.
    """
    quotient = functor.quotient
    cat = seq.structure.category
    names = cat.generator_names
    for i, obj in enumerate(seq.objects):
        if not quotient.Z.contains(obj):
            raise PreconditionError(f"term {i + 1} ({obj.names(names)}) does not lie in Z")
    if not is_D_monic(seq.first, quotient.D):
        raise PreconditionError("f₁ is not D-monic")
    if angles is not None and budget is not None:
        if angles.membership(seq, budget) == Membership.OUT:
            raise PreconditionError("the sequence is not a member of the angle class")
    target = functor.witness.fixed_angle(seq.objects[0])
    space = solve_sequence_morphism(seq, target, {0: cat.identity(seq.objects[0])})
    if space is None:
        raise CorruptWitnessError(
            "the identity does not extend to a morphism into the fixed angle",
            witness={'sequence': seq.to_payload(), 'fixed': target.to_payload()},
        )
    morphism = space.particular_morphism()
    maps = [quotient.project(f) for f in seq.maps[:-1]]
    maps.append(quotient.project(morphism.components[-1]))
    return StandardAngle(seq, morphism, space, NSequence.of(structure, maps))


def d_monic_extension(functor: QuotientFunctor, f: Morphism) -> Morphism:
    """(f; d₁): X -> Y ⊕ D₁ with d₁ the first map of the fixed angle of X."""
    cat = f.category
    d1 = functor.witness.fixed_angle(f.domain).first
    return cat.block_matrix([f.domain], [f.codomain, d1.codomain], {(0, 0): f, (1, 0): d1})


class PhiAngleClass(AngleClass):
    """Sequences of Z/[D] isomorphic to standard angles.

    Membership is decided up to isomorphism against a few candidate
    standard angles: the one obtained by lifting the sequence itself, the
    completion of its first map, and those of sampled ambient members.

    Every member of an angulation is a Hom-exact complex, and both
    properties are invariant under isomorphism. A sequence failing either
    one is therefore a definite OUT. This is a necessary condition only:
    a Hom-exact complex that matches no candidate stays INCONCLUSIVE.
    """

    name = "standard"

    def __init__(self, functor: QuotientFunctor, angles: AngleClass):
        shift = functor.shift()
        if shift is None:
            raise PreconditionError("T has no quasi-inverse data")
        super().__init__(AngulatedStructure(functor.quotient, shift, functor.n))
        self.functor = functor
        self.angles = angles
        self._pool: Optional[List[NSequence]] = None

    @property
    def quotient(self):
        return self.functor.quotient

    def standard(self, seq: NSequence, budget: Optional[Budget] = None) -> StandardAngle:
        return standard_angle(seq, self.functor, self.structure, self.angles if budget else None, budget)

    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        quotient = self.quotient
        extended = d_monic_extension(self.functor, quotient.lift(f))
        outcome = self.angles.complete(extended, budget)
        if not outcome.found:
            return SearchOutcome(None, outcome.exhausted, outcome.spent)
        try:
            standard = self.standard(outcome.value)
        except PreconditionError as error:
            logger.debug("completion of (f; d₁) has no standard angle: %s", error)
            return SearchOutcome(None, True, outcome.spent)
        seq = standard.sequence
        maps = list(seq.maps)
        maps[0] = quotient.transfer(seq.maps[0], f.domain, f.codomain)
        maps[1] = quotient.transfer(seq.maps[1], f.codomain, seq.maps[1].codomain)
        return SearchOutcome(NSequence.of(self.structure, maps), False, outcome.spent)

    def _lifted(self, seq: NSequence, budget: Budget) -> Optional[NSequence]:
        """Standard angle of the lift X₁ -> ... -> X_n -> ΣX₁ with last map d_n o lift(f_n)."""
        quotient = self.quotient
        ambient = self.angles.structure
        fixed = self.functor.fixed_angle(seq.objects[0])
        maps = [quotient.lift(f) for f in seq.maps]
        maps[-1] = fixed.last @ maps[-1]
        try:
            lifted = NSequence.of(ambient, maps)
            if self.angles.membership(lifted, budget) != Membership.IN:
                return None
            return self.standard(lifted).sequence
        except PreconditionError:
            return None

    def pool(self, budget: Budget) -> List[NSequence]:
        """Standard angles of the sampled ambient members they apply to."""
        if self._pool is None:
            self._pool = []
            members, _ = sample_members(self.angles, budget)
            for member in members:
                try:
                    self._pool.append(self.standard(member).sequence)
                except PreconditionError:
                    continue
            logger.debug("standard angle pool holds %d sequences", len(self._pool))
        return self._pool

    def _candidates(self, seq: NSequence, budget: Budget) -> Iterator[NSequence]:
        lifted = self._lifted(seq, budget)
        if lifted is not None:
            yield lifted
        completion = self.complete(seq.first, budget)
        if completion.found:
            yield completion.value
        yield from self.pool(budget)

    def membership(self, seq: NSequence, budget: Budget) -> str:
        if not seq.is_complex() or not is_hom_exact(seq, COVARIANT):
            return Membership.OUT
        for candidate in self._candidates(seq, budget):
            outcome = sequence_isomorphism(seq, candidate, budget.cap_solutions, budget.seed)
            if outcome.found:
                return Membership.IN
        return Membership.INCONCLUSIVE


def sample_standard_angles(phi: PhiAngleClass, budget: Budget) -> List[StandardAngle]:
    """Standard angles of ambient members and of completed basis morphisms, up to cap_instances."""
    functor = phi.functor
    quotient = phi.quotient
    found: List[StandardAngle] = []
    members, _ = sample_members(phi.angles, budget)
    for member in members:
        try:
            found.append(phi.standard(member))
        except PreconditionError:
            continue
        if len(found) >= budget.cap_instances:
            return found
    for q in quotient.generators():
        for r in quotient.generators():
            dim = quotient.hom_dim(q, r)
            for a in range(dim):
                basis = quotient.generator_morphism(q, r, np.eye(dim, dtype=np.int64)[a])
                outcome = phi.angles.complete(d_monic_extension(functor, quotient.lift(basis)), budget)
                if not outcome.found:
                    continue
                try:
                    found.append(phi.standard(outcome.value))
                except PreconditionError:
                    continue
                if len(found) >= budget.cap_instances:
                    return found
    return found

