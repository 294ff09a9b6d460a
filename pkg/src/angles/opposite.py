"""
The opposite angulated structure.

A sequence Y₁ -> ... -> Y_n -> Σ⁻¹Y₁ of C^op is an angle when the
reversed sequence X_i = Y_{n+1-i} with f_i = u_{n-i} and
f_n = (-1)^n Σ(u_n) is an angle of C.
"""

from typing import Iterator, List, Tuple

from ..category import Morphism, ObjectExpr, op_morphism, opposite_shift
from ..errors import PreconditionError
from ..models import Budget, SearchOutcome
from .classes import AngleClass
from .sequences import NSequence, rotate_right
from .structure import AngulatedStructure


def opposite_structure(structure: AngulatedStructure) -> AngulatedStructure:
    if not structure.shift.strict:
        raise PreconditionError("the opposite structure needs a strict suspension")
    return AngulatedStructure(structure.category.opposite(), opposite_shift(structure.shift), structure.n)


def to_opposite(seq: NSequence, op_structure: AngulatedStructure) -> NSequence:
    """Reverse seq into the opposite category."""
    structure = seq.structure
    n = structure.n
    maps = [op_morphism(seq.maps[n - 2 - i]) for i in range(n - 1)]
    wrap = structure.suspend(seq.maps[-1], -1).scale(structure.sign)
    maps.append(op_morphism(wrap))
    return NSequence.of(op_structure, maps)


def from_opposite(op_seq: NSequence, structure: AngulatedStructure) -> NSequence:
    """Inverse of to_opposite."""
    n = structure.n
    maps = [op_morphism(op_seq.maps[n - 2 - i]) for i in range(n - 1)]
    maps.append(structure.suspend(op_morphism(op_seq.maps[-1])).scale(structure.sign))
    return NSequence.of(structure, maps)


class OppositeAngleClass(AngleClass):
    """The class of reversed members of a base class, living on C^op."""

    def __init__(self, base: AngleClass):
        super().__init__(opposite_structure(base.structure))
        self.base = base
        self.name = f"{base.name}^op"

    def to_base(self, op_seq: NSequence) -> NSequence:
        return from_opposite(op_seq, self.base.structure)

    def from_base(self, seq: NSequence) -> NSequence:
        return to_opposite(seq, self.structure)

    def objects(self, cap: int) -> List[ObjectExpr]:
        return self.base.objects(cap)

    def generator_objects(self) -> List[ObjectExpr]:
        return self.base.generator_objects()

    def membership(self, seq: NSequence, budget: Budget) -> str:
        return self.base.membership(self.to_base(seq), budget)

    def complete(self, u: Morphism, budget: Budget) -> SearchOutcome:
        """Complete op(u) in the base, then rotate it into position n-1."""
        outcome = self.base.complete(op_morphism(u), budget)
        if not outcome.found:
            return outcome
        seq = outcome.value
        for _ in range(self.structure.n - 2):
            seq = rotate_right(seq)
        return SearchOutcome(self.from_base(seq), False, outcome.spent)

    def enumerate(self, budget: Budget) -> Iterator[NSequence]:
        for seq in self.base.enumerate(budget):
            yield self.from_base(seq)


def build_opposite(structure: AngulatedStructure, angles: AngleClass) -> Tuple[AngulatedStructure, OppositeAngleClass]:
    """(C^op, Σ⁻¹, reversed angles)."""
    if angles.structure is not structure:
        raise PreconditionError("angle class belongs to a different structure")
    op_class = OppositeAngleClass(angles)
    return op_class.structure, op_class
