"""
The functor T on Z/[D] and its quasi-inverse T'.

For f: X -> Y in Z, T(f) is read off any completion of f to a morphism
between the fixed angles X -> D₁ -> ... -> TX -> ΣX and
Y -> D₁' -> ... -> TY -> ΣY; the class of the TX-component does not
depend on the completion. T' is built the same way from the cofixed
angles T'X -> ... -> X -> ΣT'X, fixing the X-component and reading the
first one.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from ..angles import NSequence, solve_sequence_morphism
from ..angles.solving import SequenceMorphismSpace
from ..category import EndoFunctor, Morphism, NaturalTransformation, ObjectExpr, Shift, find_natural_isomorphism
from ..errors import CorruptWitnessError, PresentationError
from ..ffmat import FpMatrix
from ..models import AxiomResult, Budget
from ..mutation import MutationPairWitness
from .category import QuotientCategory

logger = logging.getLogger(__name__)

FORWARD = "T"
BACKWARD = "T'"


def _positions(direction: str, n: int) -> Tuple[int, int]:
    """(fixed component, read component) of the completion."""
    return (0, n - 1) if direction == FORWARD else (n - 1, 0)


def _angles(witness: MutationPairWitness, direction: str) -> Dict[int, NSequence]:
    return witness.fixed if direction == FORWARD else witness.cofixed


def completion_space(
    witness: MutationPairWitness,
    direction: str,
    f: Morphism,
) -> SequenceMorphismSpace:
    """Every morphism between the two witness angles extending f."""
    n = witness.structure.n
    table = _angles(witness, direction)
    fixed, _ = _positions(direction, n)
    g, h = f.domain.summands[0], f.codomain.summands[0]
    space = solve_sequence_morphism(table[g], table[h], {fixed: f})
    if space is None:
        names = witness.structure.category.generator_names
        raise CorruptWitnessError(
            f"{direction}: no completion of a morphism {names[g]} -> {names[h]} between the witness angles",
            witness={'direction': direction, 'morphism': f.to_payload(),
                     'source': table[g].to_payload(), 'target': table[h].to_payload()},
        )
    return space


def _build(quotient: QuotientCategory, witness: MutationPairWitness, direction: str) -> EndoFunctor:
    ambient = quotient.ambient
    n = witness.structure.n
    table = _angles(witness, direction)
    _, read = _positions(direction, n)
    object_map = [quotient.from_ambient_object(table[g].objects[read]) for g in quotient.ambient_index]
    hom_maps = {}
    for q in quotient.generators():
        for r in quotient.generators():
            rows = quotient.layout(object_map[q], object_map[r]).size
            dim = quotient.hom_dim(q, r)
            columns = []
            for a in range(dim):
                basis = quotient.generator_morphism(q, r, np.eye(dim, dtype=np.int64)[a])
                space = completion_space(witness, direction, quotient.lift(basis))
                columns.append(quotient.project(space.particular_morphism().components[read]).coords)
            hom_maps[(q, r)] = FpMatrix.from_columns(ambient.p, columns, rows)
    return EndoFunctor(quotient, object_map, hom_maps, name=direction)


@dataclass
class QuotientFunctor:
    """T and T' on Z/[D] with the natural isomorphisms found between them."""
    quotient: QuotientCategory
    witness: MutationPairWitness
    forward: EndoFunctor
    backward: EndoFunctor
    unit: Optional[NaturalTransformation] = None
    counit: Optional[NaturalTransformation] = None

    @property
    def n(self) -> int:
        return self.witness.structure.n

    def fixed_angle(self, obj: ObjectExpr) -> NSequence:
        """Ambient fixed angle of a quotient object."""
        return self.witness.fixed_angle(self.quotient.to_ambient_object(obj))

    def apply(self, f: Morphism) -> Morphism:
        return self.forward.apply(f)

    def shift(self) -> Optional[Shift]:
        if self.unit is None or self.counit is None:
            return None
        return Shift(self.forward, self.backward, self.unit, self.counit, strict=False)

    def to_payload(self) -> dict:
        names = self.quotient.generator_names
        payload = {
            'T': {names[q]: obj.names(names) for q, obj in enumerate(self.forward.object_map)},
            "T'": {names[q]: obj.names(names) for q, obj in enumerate(self.backward.object_map)},
        }
        if self.unit is not None:
            payload['unit'] = self.unit.to_payload()
        if self.counit is not None:
            payload['counit'] = self.counit.to_payload()
        return payload


def build_T(witness: MutationPairWitness, quotient: QuotientCategory) -> QuotientFunctor:
    """T and T' from the witness angles; raises CorruptWitnessError when a completion is infeasible."""
    forward = _build(quotient, witness, FORWARD)
    backward = _build(quotient, witness, BACKWARD)
    logger.info("built T and T' on %s", quotient.name)
    return QuotientFunctor(quotient, witness, forward, backward)


def find_quasi_inverse(functor: QuotientFunctor, budget: Budget) -> AxiomResult:
    """Natural isomorphisms T'T => id and TT' => id."""
    result = AxiomResult(name="quasi_inverse", instances=2)
    quotient = functor.quotient
    identity = EndoFunctor.identity(quotient)
    unit = find_natural_isomorphism(functor.backward.compose(functor.forward), identity, budget.cap_solutions, budget.seed)
    counit = find_natural_isomorphism(functor.forward.compose(functor.backward), identity, budget.cap_solutions, budget.seed)
    result.budget_spent = unit.spent + counit.spent
    for label, outcome in (("T'T => id", unit), ("TT' => id", counit)):
        if outcome.found:
            continue
        if outcome.exhausted:
            result.undecided(f"no natural isomorphism {label} within budget")
        else:
            result.fail({'transformation': label}, f"no natural isomorphism {label} exists")
    functor.unit = unit.value
    functor.counit = counit.value
    if unit.found and counit.found:
        result.witnesses.append({'unit': unit.value.to_payload(), 'counit': counit.value.to_payload()})
    return result


def check_completion_independence(functor: QuotientFunctor) -> AxiomResult:
    """Completions of one morphism agree modulo D, and ideal morphisms map into the ideal.

    Kernel vectors of the completion system are the differences of two
    completions; their read components must all factor through D.
    """
    result = AxiomResult(name="completion_independence")
    quotient = functor.quotient
    ambient = quotient.ambient
    names = quotient.generator_names
    for direction in (FORWARD, BACKWARD):
        _, read = _positions(direction, functor.n)
        for q in quotient.generators():
            for r in quotient.generators():
                g, h = quotient.ambient_index[q], quotient.ambient_index[r]
                X, Y = ObjectExpr.of(g), ObjectExpr.of(h)
                candidates = [ambient.zero(X, Y)] + [ambient.morphism(X, Y, v) for v in quotient.ideals[(q, r)]]
                for f in candidates:
                    result.instances += 1
                    try:
                        space = completion_space(functor.witness, direction, f)
                    except CorruptWitnessError as error:
                        result.fail(error.witness or {}, str(error))
                        return result
                    differences = [space.particular_morphism().components[read]] + space.kernel_components(read)
                    bad = next((d for d in differences if not quotient.in_ideal(d)), None)
                    if bad is not None:
                        result.fail({
                            'direction': direction,
                            'pair': [names[q], names[r]],
                            'morphism': f.to_payload(),
                            'component': bad.to_payload(),
                        }, f"{direction}: two completions differ outside the ideal")
                        return result
    return result


def induced_functor(quotient: QuotientCategory, functor: EndoFunctor) -> Optional[EndoFunctor]:
    """The functor induced on Z/[D] by an ambient one preserving Z and D, or None."""
    ambient = quotient.ambient
    images = [functor.object_map[g] for g in quotient.ambient_index]
    if not all(quotient.Z.contains(obj) for obj in images):
        return None
    if not all(quotient.D.contains(functor.object_map[g]) for g in quotient.D.sorted()):
        return None
    object_map = [quotient.from_ambient_object(obj) for obj in images]
    hom_maps = {}
    for q in quotient.generators():
        for r in quotient.generators():
            dim = quotient.hom_dim(q, r)
            columns = []
            for a in range(dim):
                basis = quotient.generator_morphism(q, r, np.eye(dim, dtype=np.int64)[a])
                columns.append(quotient.project(functor.apply(quotient.lift(basis))).coords)
            rows = quotient.layout(object_map[q], object_map[r]).size
            hom_maps[(q, r)] = FpMatrix.from_columns(ambient.p, columns, rows)
    return EndoFunctor(quotient, object_map, hom_maps, name=f"{functor.name}|Z/D")


def compare_with_suspension(functor: QuotientFunctor, suspension: EndoFunctor, budget: Budget) -> AxiomResult:
    """When Z and D are Σ-stable, look for a natural isomorphism T => Σ̄."""
    result = AxiomResult(name="T_vs_suspension")
    induced = induced_functor(functor.quotient, suspension)
    if induced is None:
        result.notes.append("Z or D is not Σ-stable; comparison skipped")
        return result
    result.instances = 1
    outcome = find_natural_isomorphism(functor.forward, induced, budget.cap_solutions, budget.seed)
    result.budget_spent = outcome.spent
    if outcome.found:
        result.witnesses.append({'isomorphism': outcome.value.to_payload()})
    elif outcome.exhausted:
        result.undecided("no natural isomorphism T => Σ within budget")
    elif functor.quotient.D.is_zero:
        result.fail({'T': functor.to_payload()['T']}, "T is not isomorphic to the induced suspension")
    else:
        result.notes.append("T is not isomorphic to the induced suspension")
    return result


def check_T_functoriality(functor: QuotientFunctor) -> List[AxiomResult]:
    """T and T' preserve identities and composition on basis pairs."""
    results = []
    for direction, f in ((FORWARD, functor.forward), (BACKWARD, functor.backward)):
        result = AxiomResult(name=f"functoriality_{'T' if direction == FORWARD else 'T_prime'}", instances=1)
        try:
            f.validate()
        except PresentationError as error:
            result.fail({'functor': direction}, str(error))
        results.append(result)
    return results
