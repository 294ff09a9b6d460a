"""
Mutation pairs: every object of Z admits angles through D in both directions.

Condition (1) asks, for X in Z, for an angle X -> D₁ -> ... -> D_{n-2} -> Y -> ΣX
with every D_i in D, Y in Z, d₁ a left D-approximation and d_{n-1} a right
D-approximation. Condition (2) asks the same with Y given, and is searched
as condition (1) in the opposite structure.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..angles import AngleClass, AngulatedStructure, NSequence, OppositeAngleClass, sample_members, trivial_angle
from ..angles.sequences import direct_sum_all
from ..category import ObjectExpr, Subcategory
from ..config import Membership, Verdict
from ..errors import InputError
from ..models import AxiomResult, Budget
from .approximations import find_left_approximation, is_left_approximation, is_right_approximation

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


def angle_defects(
    angles: AngleClass,
    seq: NSequence,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    approximations: bool = True,
) -> Tuple[List[str], bool]:
    """Reasons seq fails to be a condition (1) angle, and whether membership was undecided.

    Without approximations only the terms and membership are checked.
    """
    n = seq.n
    defects = []
    for i, obj in enumerate(seq.objects[1:n - 1], start=1):
        if not D.contains(obj):
            defects.append(f"term {i + 1} is not in D")
    if not Z.contains(seq.objects[0]):
        defects.append("first term is not in Z")
    if not Z.contains(seq.objects[n - 1]):
        defects.append(f"term {n} is not in Z")
    if approximations and not is_left_approximation(seq.maps[0], D):
        defects.append("d₁ is not a left D-approximation")
    if approximations and not is_right_approximation(seq.maps[n - 2], D):
        defects.append(f"d_{n - 1} is not a right D-approximation")
    if defects:
        return defects, False
    verdict = angles.membership(seq, budget)
    if verdict == Membership.OUT:
        defects.append("not a member of the angle class")
    return defects, verdict == Membership.INCONCLUSIVE


@dataclass
class MutationPairWitness:
    """Fixed angles per generator of Z for both conditions.

    fixed[g] is X -> D₁ -> ... -> TX -> ΣX with X = g; cofixed[g] is
    T'Y -> D₁ -> ... -> Y -> ΣT'Y with Y = g, stored in the ambient structure.
    """
    structure: AngulatedStructure
    Z: Subcategory
    D: Subcategory
    fixed: Dict[int, NSequence] = field(default_factory=dict)
    cofixed: Dict[int, NSequence] = field(default_factory=dict)

    def fixed_angle(self, obj: ObjectExpr) -> NSequence:
        """Sum of the fixed angles of the summands; the zero angle for 0."""
        if obj.is_zero:
            return trivial_angle(self.structure, obj)
        return direct_sum_all([self.fixed[g] for g in obj.summands])

    def to_payload(self) -> dict:
        names = self.structure.category.generator_names
        return {
            'Z': self.Z.names(names),
            'D': self.D.names(names),
            'fixed': {names[g]: seq.to_payload() for g, seq in sorted(self.fixed.items())},
            'cofixed': {names[g]: seq.to_payload() for g, seq in sorted(self.cofixed.items())},
        }


def search_condition_one(
    angles: AngleClass,
    X: ObjectExpr,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    approximations: bool = True,
) -> Tuple[Optional[NSequence], bool]:
    """An angle for condition (1) at X, and whether the search was undecided.

    The completion of a left approximation is tried first, then the
    enumerated members starting at X.
    """
    cat = angles.structure.category
    undecided = False
    approximation = find_left_approximation(cat, X, D, budget)
    if approximation.found:
        outcome = angles.complete(approximation.value, budget)
        if outcome.found:
            defects, unsure = angle_defects(angles, outcome.value, Z, D, budget, approximations)
            if not defects and not unsure:
                return outcome.value, False
            undecided = undecided or unsure
        undecided = undecided or outcome.exhausted
    members, truncated = sample_members(angles, budget)
    for seq in members:
        if seq.objects[0] != X:
            continue
        defects, unsure = angle_defects(angles, seq, Z, D, budget, approximations)
        if not defects and not unsure:
            return seq, False
        undecided = undecided or unsure
    return None, undecided or truncated


def _check_condition(
    angles: AngleClass,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    name: str,
    found: Dict[int, NSequence],
    convert=None,
) -> AxiomResult:
    result = AxiomResult(name=name)
    names = angles.structure.category.generator_names
    for g in Z.sorted():
        result.instances += 1
        seq, undecided = search_condition_one(angles, ObjectExpr.of(g), Z, D, budget)
        if seq is not None:
            found[g] = convert(seq) if convert else seq
            continue
        if budget.exhaustive and not undecided:
            result.fail({'generator': names[g]}, f"no angle through D found for {names[g]}")
        else:
            result.undecided(f"no angle through D found for {names[g]} within budget")
    return result


def validate_mutation_pair(
    angles: AngleClass,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    progress_callback: Optional[ProgressCallback] = None,
) -> Tuple[Optional[MutationPairWitness], List[AxiomResult]]:
    """Search witnesses for both conditions on every generator of Z."""
    if not D.issubset(Z):
        raise InputError("D must be a subset of Z")
    structure = angles.structure
    witness = MutationPairWitness(structure, Z, D)
    if progress_callback:
        progress_callback(0.0, "Searching angles for condition (1)")
    logger.info("validating mutation pair with %d generators in Z and %d in D", len(Z.generators), len(D.generators))
    first = _check_condition(angles, Z, D, budget, "mutation_pair(1)", witness.fixed)
    if progress_callback:
        progress_callback(0.5, "Searching angles for condition (2)")
    op_class = OppositeAngleClass(angles)
    second = _check_condition(op_class, Z, D, budget, "mutation_pair(2)", witness.cofixed, convert=op_class.to_base)
    if progress_callback:
        progress_callback(1.0, "Mutation pair search finished")
    complete = first.verdict == Verdict.PASS and second.verdict == Verdict.PASS
    return (witness if complete else None), [first, second]


def certify_witness(angles: AngleClass, witness: MutationPairWitness, budget: Budget) -> AxiomResult:
    """Re-verify supplied fixed and cofixed angles."""
    result = AxiomResult(name="fixed_angles")
    names = angles.structure.category.generator_names
    op_class = OppositeAngleClass(angles)
    for g in witness.Z.sorted():
        for kind, table in (("fixed", witness.fixed), ("cofixed", witness.cofixed)):
            result.instances += 1
            seq = table.get(g)
            if seq is None:
                result.fail({'generator': names[g], 'kind': kind}, f"no {kind} angle for {names[g]}")
                continue
            if kind == "fixed":
                at_position = seq.objects[0] == ObjectExpr.of(g)
                defects, unsure = angle_defects(angles, seq, witness.Z, witness.D, budget)
            else:
                at_position = seq.objects[-1] == ObjectExpr.of(g)
                defects, unsure = angle_defects(op_class, op_class.from_base(seq), witness.Z, witness.D, budget)
            if not at_position:
                defects.append(f"angle does not pass through {names[g]}")
            if defects:
                result.fail({'generator': names[g], 'kind': kind, 'sequence': seq.to_payload(), 'defects': defects},
                            f"{kind} angle of {names[g]} is not valid")
            elif unsure:
                result.undecided(f"membership of the {kind} angle of {names[g]} undecided within budget")
    return result


def is_extension_closed(angles: AngleClass, Z: Subcategory, budget: Budget) -> AxiomResult:
    """Members with both end terms in Z have every term in Z."""
    result = AxiomResult(name="extension_closed")
    members, truncated = sample_members(angles, budget)
    for seq in members:
        if not (Z.contains(seq.objects[0]) and Z.contains(seq.objects[-1])):
            continue
        result.instances += 1
        if not all(Z.contains(obj) for obj in seq.objects):
            result.fail({'sequence': seq.to_payload()}, "a member with ends in Z leaves Z")
            return result
    if truncated:
        result.notes.append(f"member enumeration truncated at {budget.cap_instances}")
    return result
