"""
Frobenius data of a subcategory: the internal angle class E, E-injectives,
E-projectives and the two "enough" conditions.

Admissible monomorphisms are first maps of E-angles and admissible
epimorphisms are their (n-1)-st maps. A generator G is E-injective when
Hom(-, G) turns every admissible monomorphism into a surjection, i.e. the
monomorphism is {G}-monic; projectives are the injectives of the opposite.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from ..angles import AngleClass, NSequence, OppositeAngleClass, RestrictedAngleClass, run_axiom_suite, sample_members
from ..category import Morphism, ObjectExpr, Subcategory
from ..config import EReading, Task, Verdict
from ..models import AxiomReport, AxiomResult, Budget
from .approximations import is_D_monic
from .pairs import search_condition_one

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


def e_class(angles: AngleClass, Z: Subcategory, reading: str = EReading.EXACT) -> RestrictedAngleClass:
    """E: members with every term in Z, and under the exact reading f_n = 0."""
    if reading not in (EReading.EXACT, EReading.ALL):
        raise ValueError(f"Unknown E reading: {reading}")
    return RestrictedAngleClass(angles, Z, require_zero_connecting=reading == EReading.EXACT)


@dataclass
class RelativeInjectives:
    """Injectives of one angle class and the maps that excluded the others."""
    generators: Subcategory
    excluded: Dict[int, Morphism] = field(default_factory=dict)
    admissible: int = 0
    truncated: bool = False


def _injectives(E: AngleClass, Z: Subcategory, budget: Budget) -> RelativeInjectives:
    members, truncated = sample_members(E, budget)
    monos: List[Morphism] = []
    seen = set()
    for seq in members:
        key = (seq.first.domain, seq.first.codomain, seq.first.coords.tobytes())
        if key not in seen:
            seen.add(key)
            monos.append(seq.first)
    injective, excluded = [], {}
    for g in Z.sorted():
        G = Subcategory.of([g])
        bad = next((f for f in monos if not is_D_monic(f, G)), None)
        if bad is None:
            injective.append(g)
        else:
            excluded[g] = bad
    return RelativeInjectives(Subcategory.of(injective), excluded, len(monos), truncated)


@dataclass
class FrobeniusData:
    """E, its injectives and projectives, and the "enough" witnesses."""
    Z: Subcategory
    reading: str
    injectives: RelativeInjectives
    projectives: RelativeInjectives
    enough_injectives: Dict[int, Optional[NSequence]] = field(default_factory=dict)
    enough_projectives: Dict[int, Optional[NSequence]] = field(default_factory=dict)
    undecided: Dict[str, List[int]] = field(default_factory=dict)

    @property
    def I(self) -> Subcategory:
        return self.injectives.generators

    def to_payload(self, generator_names) -> dict:
        def seqs(table):
            return {generator_names[g]: (s.to_payload() if s is not None else None) for g, s in sorted(table.items())}

        return {
            'reading': self.reading,
            'injectives': self.injectives.generators.names(generator_names),
            'projectives': self.projectives.generators.names(generator_names),
            'enough_injectives': seqs(self.enough_injectives),
            'enough_projectives': seqs(self.enough_projectives),
        }


def compute_e_injectives(
    angles: AngleClass,
    Z: Subcategory,
    budget: Budget,
    reading: str = EReading.EXACT,
) -> FrobeniusData:
    """Injectives, projectives and "enough" witnesses for E."""
    E = e_class(angles, Z, reading)
    op_E = e_class(OppositeAngleClass(angles), Z, reading)
    injectives = _injectives(E, Z, budget)
    projectives = _injectives(op_E, Z, budget)
    data = FrobeniusData(Z, reading, injectives, projectives, undecided={'injectives': [], 'projectives': []})
    for g in Z.sorted():
        X = ObjectExpr.of(g)
        seq, unsure = search_condition_one(E, X, Z, injectives.generators, budget, approximations=False)
        data.enough_injectives[g] = seq
        if seq is None and unsure:
            data.undecided['injectives'].append(g)
        op_seq, unsure = search_condition_one(op_E, X, Z, projectives.generators, budget, approximations=False)
        data.enough_projectives[g] = op_E.base.to_base(op_seq) if op_seq is not None else None
        if op_seq is None and unsure:
            data.undecided['projectives'].append(g)
    logger.info("E-injectives %s, E-projectives %s", injectives.generators.sorted(), projectives.generators.sorted())
    return data


def _enough(result: AxiomResult, table, undecided: List[int], names, budget: Budget, what: str) -> None:
    for g, seq in sorted(table.items()):
        result.instances += 1
        if seq is not None:
            continue
        if budget.exhaustive and g not in undecided:
            result.fail({'generator': names[g]}, f"no E-angle through {what} starting at {names[g]}")
        else:
            result.undecided(f"no E-angle through {what} found for {names[g]} within budget")


def frobenius_results(data: FrobeniusData, names, budget: Budget) -> List[AxiomResult]:
    injective = AxiomResult(name="E_injectives", instances=data.injectives.admissible)
    injective.notes.append(f"E read as '{data.reading}'; I = {data.I.names(names)}")
    for g, mono in sorted(data.injectives.excluded.items()):
        injective.witnesses.append({'generator': names[g], 'admissible_mono': mono.to_payload()})
    if data.injectives.truncated:
        injective.notes.append(f"admissible monomorphisms truncated at {budget.cap_instances} members")

    projective = AxiomResult(name="E_projectives", instances=data.projectives.admissible)
    projective.notes.append(f"P = {data.projectives.generators.names(names)}")
    if data.projectives.truncated:
        projective.notes.append(f"admissible epimorphisms truncated at {budget.cap_instances} members")

    coincide = AxiomResult(name="injectives=projectives", instances=1)
    if data.injectives.generators != data.projectives.generators:
        coincide.fail({
            'injectives': data.I.names(names),
            'projectives': data.projectives.generators.names(names),
        }, "E-injectives and E-projectives differ")

    enough_inj = AxiomResult(name="enough_injectives")
    _enough(enough_inj, data.enough_injectives, data.undecided.get('injectives', []), names, budget, "injectives")
    enough_proj = AxiomResult(name="enough_projectives")
    _enough(enough_proj, data.enough_projectives, data.undecided.get('projectives', []), names, budget, "projectives")
    return [injective, projective, coincide, enough_inj, enough_proj]


def check_frobenius(
    angles: AngleClass,
    Z: Subcategory,
    budget: Budget,
    reading: str = EReading.EXACT,
) -> Tuple[FrobeniusData, AxiomReport]:
    """Frobenius means enough injectives, enough projectives and I = P."""
    names = angles.structure.category.generator_names
    data = compute_e_injectives(angles, Z, budget, reading)
    report = AxiomReport(task=Task.VERIFY_FROBENIUS, budget=budget)
    for result in frobenius_results(data, names, budget):
        report.add(result)
    report.choices['frobenius'] = data.to_payload(names)
    return data, report


def is_suspension_stable(angles: AngleClass, Z: Subcategory) -> AxiomResult:
    """ΣZ and Σ⁻¹Z stay inside Z."""
    result = AxiomResult(name="suspension_stable")
    structure = angles.structure
    names = structure.category.generator_names
    for g in Z.sorted():
        for power in (1, -1):
            result.instances += 1
            image = structure.suspend_object(ObjectExpr.of(g), power)
            if not Z.contains(image):
                result.fail({'generator': names[g], 'power': power, 'image': image.names(names)},
                            f"Σ^{power} {names[g]} leaves Z")
    return result


def check_angulated_subcategory(
    angles: AngleClass,
    Z: Subcategory,
    budget: Budget,
    progress_callback: Optional[ProgressCallback] = None,
) -> List[AxiomResult]:
    """Σ-stability plus the axiom suite on the members lying in Z."""
    stable = is_suspension_stable(angles, Z)
    if stable.verdict == Verdict.FAIL:
        return [stable]
    results = run_axiom_suite(RestrictedAngleClass(angles, Z), budget, progress_callback)
    return [stable] + results
