"""
Bounded checkers for the axioms of an n-angulated category.

Each checker returns an AxiomResult. PASS means no counterexample was
found within the budget and every existential search found a witness;
a definite FAIL always carries a replayable witness; INCONCLUSIVE means
some search ran out of budget before it could decide.
"""

import itertools
import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..category import ObjectExpr
from ..config import Config, Membership, Verdict
from ..models import AxiomResult, Budget, SearchOutcome
from .classes import AngleClass
from .exactness import VARIANCES, exactness_failures
from .octahedron import OctahedralInstance, search_octahedron
from .sequences import (
    NSequence,
    SequenceMorphism,
    direct_sum,
    identity_morphism,
    mapping_cone,
    rotate_left,
    rotate_right,
    trivial_angle,
)
from .solving import (
    LinearSystemBuilder,
    SequenceMorphismSpace,
    complete_morphism,
    coordinate_inclusion,
    coordinate_projection,
    solve_sequence_morphism,
    split_idempotent,
)

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]


def sample_members(angles: AngleClass, budget: Budget) -> Tuple[List[NSequence], bool]:
    """The first cap_instances enumerated members and whether more exist."""
    stream = angles.enumerate(budget)
    members = list(itertools.islice(stream, budget.cap_instances))
    truncated = next(stream, None) is not None
    return members, truncated


def _record_membership(result: AxiomResult, verdict: str, witness: dict, what: str) -> None:
    if verdict == Membership.OUT:
        result.fail(witness, f"{what} is not a member")
    elif verdict == Membership.INCONCLUSIVE:
        result.undecided(f"membership of {what} undecided within budget")


def check_N1(angles: AngleClass, budget: Budget) -> List[AxiomResult]:
    """(a) sums and summands, (b) trivial angles, (c) completions."""
    return [check_N1_sums(angles, budget), check_N1_trivial(angles, budget), check_N1_completion(angles, budget)]


def _subsets(size: int) -> List[Tuple[int, ...]]:
    return [c for k in range(size + 1) for c in itertools.combinations(range(size), k)]


def idempotent_endomorphisms(seq: NSequence, budget: Budget) -> Tuple[List[SequenceMorphism], bool]:
    """Idempotent endomorphisms of seq other than 0 and 1, and whether the search was cut short.

    Coordinate projections onto summand positions come first, then the
    points of End(seq) in lexicographic order.
    """
    cat = seq.structure.category
    identity = identity_morphism(seq)
    found: List[SequenceMorphism] = []
    keys = set()

    def keep(phi: SequenceMorphism) -> None:
        components = phi.components
        if all(c.is_zero() for c in components) or components == identity.components:
            return
        if any(c @ c != c for c in components) or not phi.is_valid():
            return
        key = tuple(c.coords.tobytes() for c in components)
        if key not in keys:
            keys.add(key)
            found.append(phi)

    choices = itertools.product(*[_subsets(obj.size) for obj in seq.objects])
    for positions in itertools.islice(choices, budget.cap_solutions):
        keep(SequenceMorphism(seq, seq, tuple(
            coordinate_inclusion(cat, obj, chosen) @ coordinate_projection(cat, obj, chosen)
            for obj, chosen in zip(seq.objects, positions)
        )))
    space = solve_sequence_morphism(seq, seq)
    truncated = not space.exhausted_by(budget.cap_solutions)
    for phi in space.iter_morphisms(budget.cap_solutions):
        if len(found) >= budget.cap_instances:
            return found, True
        keep(phi)
    return found, truncated


def split_summand(e: SequenceMorphism, limit: int) -> Optional[NSequence]:
    """The summand A₁ -> ... -> ΣA₁ cut out by an idempotent, with a_i = r_{i+1} f_i s_i."""
    seq = e.source
    structure = seq.structure
    parts = [split_idempotent(c, limit) for c in e.components]
    if any(part is None for part in parts):
        return None
    s = [part[0] for part in parts]
    r = [part[1] for part in parts]
    n = seq.n
    maps = [r[i + 1] @ seq.maps[i] @ s[i] for i in range(n - 1)]
    maps.append(structure.suspend(r[0]) @ seq.maps[n - 1] @ s[n - 1])
    return NSequence.of(structure, maps)


def _idempotent_parts(members: List[NSequence], budget: Budget):
    """(member, e) and (member, 1 - e) for every idempotent found; (member, None) marks a cut search."""
    for member in members:
        cat = member.structure.category
        idempotents, cut = idempotent_endomorphisms(member, budget)
        if cut:
            yield member, None
        for e in idempotents:
            yield member, e
            yield member, SequenceMorphism(member, member, tuple(
                cat.identity(obj) - c for obj, c in zip(member.objects, e.components)
            ))


def check_N1_sums(angles: AngleClass, budget: Budget) -> AxiomResult:
    result = AxiomResult(name="N1(a)")
    members, truncated = sample_members(angles, budget)
    pairs = itertools.islice(itertools.combinations_with_replacement(range(len(members)), 2), budget.cap_instances)
    for i, j in pairs:
        total = direct_sum(members[i], members[j])
        result.instances += 1
        _record_membership(result, angles.membership(total, budget), {
            'summands': [members[i].to_payload(), members[j].to_payload()],
            'sum': total.to_payload(),
        }, "the direct sum")
        if result.verdict == Verdict.FAIL:
            return result
    partial, unsplit, checked = False, 0, 0
    for member, part in _idempotent_parts(members, budget):
        if part is None:
            partial = True
            continue
        if checked >= budget.cap_instances:
            partial = True
            break
        summand = split_summand(part, budget.cap_solutions)
        if summand is None:
            unsplit += 1
            continue
        checked += 1
        result.instances += 1
        _record_membership(result, angles.membership(summand, budget), {
            'member': member.to_payload(),
            'idempotent': [c.to_payload() for c in part.components],
            'summand': summand.to_payload(),
        }, "a direct summand of a member")
        if result.verdict == Verdict.FAIL:
            return result
    if truncated:
        result.notes.append(f"member enumeration truncated at {budget.cap_instances}")
    if partial:
        result.notes.append(f"idempotent search truncated at {budget.cap_solutions} endomorphisms")
    if unsplit:
        result.notes.append(f"{unsplit} idempotents do not split over sub-multisets")
    return result


def check_N1_trivial(angles: AngleClass, budget: Budget) -> AxiomResult:
    result = AxiomResult(name="N1(b)")
    structure = angles.structure
    names = structure.category.generator_names
    for obj in [ObjectExpr()] + list(angles.generator_objects()):
        seq = trivial_angle(structure, obj)
        result.instances += 1
        verdict = angles.membership(seq, budget)
        if verdict == Membership.OUT:
            result.fail({'generator': obj.names(names), 'sequence': seq.to_payload()},
                        f"trivial angle of {obj.names(names) or '0'} is not a member")
        elif verdict == Membership.INCONCLUSIVE:
            result.undecided("trivial angle membership undecided within budget")
    return result


def check_N1_completion(angles: AngleClass, budget: Budget) -> AxiomResult:
    result = AxiomResult(name="N1(c)")
    structure = angles.structure
    cat = structure.category
    objects = angles.objects(budget.cap_objects)
    pairs = [(X, Y) for X in objects for Y in objects]
    per_pair = max(Config.SQUARES_PER_PAIR, budget.cap_solutions // max(1, len(pairs)))
    truncated = False
    for X, Y in pairs:
        truncated = truncated or cat.hom_size(X, Y) > per_pair
        for f in cat.hom_elements(X, Y, per_pair):
            result.instances += 1
            outcome = angles.complete(f, budget)
            result.budget_spent += outcome.spent
            if not outcome.found:
                if outcome.exhausted:
                    result.undecided("completion search ran out of budget")
                    continue
                result.fail({'morphism': f.to_payload()}, "no completion of a morphism")
                return result
            seq = outcome.value
            if seq.first != f:
                result.fail({'morphism': f.to_payload(), 'sequence': seq.to_payload()}, "completion changed the first map")
                return result
            _record_membership(result, angles.membership(seq, budget), {
                'morphism': f.to_payload(), 'sequence': seq.to_payload(),
            }, "a completion")
            if result.verdict == Verdict.FAIL:
                return result
    if truncated:
        result.notes.append(f"Hom enumeration truncated at {per_pair} morphisms per pair")
    return result


def check_N2(angles: AngleClass, budget: Budget) -> AxiomResult:
    """Both rotation directions preserve membership."""
    result = AxiomResult(name="N2")
    members, truncated = sample_members(angles, budget)
    for seq in members:
        for direction, rotate in (("left", rotate_left), ("right", rotate_right)):
            rotated = rotate(seq)
            result.instances += 1
            _record_membership(result, angles.membership(rotated, budget), {
                'direction': direction, 'sequence': seq.to_payload(), 'rotated': rotated.to_payload(),
            }, f"the {direction} rotation")
            if result.verdict == Verdict.FAIL:
                return result
    if truncated:
        result.notes.append(f"member enumeration truncated at {budget.cap_instances}")
    return result


def first_squares(source: NSequence, target: NSequence, rng: np.random.Generator, count: int):
    """Commuting first squares (φ₁, φ₂); the identity square leads when source is target."""
    cat = source.structure.category
    squares = []
    if source == target:
        squares.append((cat.identity(source.objects[0]), cat.identity(source.objects[1])))
    f1, g1 = source.maps[0], target.maps[0]
    for _ in range(4 * count):
        if len(squares) >= count + (1 if source == target else 0):
            break
        phi1 = cat.random_morphism(source.objects[0], target.objects[0], rng)
        builder = LinearSystemBuilder(cat)
        builder.unknown("phi2", source.objects[1], target.objects[1])
        builder.equation([("phi2", builder.pre("phi2", f1))], -(g1 @ phi1).coords)
        space = builder.solve()
        if space is None:
            continue
        values = next(space.sample(rng, 1)) if space.dimension else space.particular()
        squares.append((phi1, values["phi2"]))
    return squares


def _instance_pairs(members: List[NSequence], budget: Budget):
    return itertools.islice(itertools.product(members, repeat=2), budget.cap_instances)


def check_N3(angles: AngleClass, budget: Budget) -> AxiomResult:
    """Every commuting first square between members completes."""
    result = AxiomResult(name="N3")
    members, _ = sample_members(angles, budget)
    rng = np.random.default_rng(budget.seed)
    for source, target in _instance_pairs(members, budget):
        for phi1, phi2 in first_squares(source, target, rng, Config.SQUARES_PER_PAIR):
            result.instances += 1
            if complete_morphism(phi1, phi2, source, target) is None:
                result.fail({
                    'source': source.to_payload(), 'target': target.to_payload(),
                    'phi1': phi1.to_payload(), 'phi2': phi2.to_payload(),
                }, "first square has no completion")
                return result
    return result


def check_N4(angles: AngleClass, budget: Budget) -> AxiomResult:
    """Some completion of each sampled square has a member as mapping cone."""
    result = AxiomResult(name="N4")
    members, _ = sample_members(angles, budget)
    rng = np.random.default_rng(budget.seed)
    for source, target in _instance_pairs(members, budget):
        for phi1, phi2 in first_squares(source, target, rng, Config.SQUARES_PER_PAIR):
            result.instances += 1
            space = complete_morphism(phi1, phi2, source, target)
            witness = {
                'source': source.to_payload(), 'target': target.to_payload(),
                'phi1': phi1.to_payload(), 'phi2': phi2.to_payload(),
            }
            if space is None:
                result.fail(witness, "first square has no completion")
                return result
            outcome = cone_member_search(angles, space, budget)
            result.budget_spent += outcome.spent
            if outcome.found:
                continue
            if outcome.exhausted:
                result.undecided("cone search ran out of budget")
            else:
                result.fail(witness, "no completion has a member as mapping cone")
                return result
    return result


def cone_member_search(angles: AngleClass, space: SequenceMorphismSpace, budget: Budget) -> SearchOutcome:
    """A completion in space whose mapping cone is a member, at most cap_solutions tries."""
    exhausted, spent = not space.exhausted_by(budget.cap_solutions), 0
    for morphism in space.iter_morphisms(budget.cap_solutions):
        spent += 1
        verdict = angles.membership(mapping_cone(morphism), budget)
        if verdict == Membership.IN:
            return SearchOutcome(morphism, False, spent)
        exhausted = exhausted or verdict == Membership.INCONCLUSIVE
    return SearchOutcome(None, exhausted, spent)


def octahedral_instances(angles: AngleClass, budget: Budget, result: AxiomResult):
    """Triples (row, row, column) built from members and sampled φ₂."""
    structure = angles.structure
    cat = structure.category
    members, _ = sample_members(angles, budget)
    rng = np.random.default_rng(budget.seed)
    objects = angles.objects(budget.cap_objects)
    produced = 0
    for seq in members:
        X2 = seq.objects[1]
        candidates = [cat.identity(X2)]
        for _ in range(Config.SQUARES_PER_PAIR):
            Y2 = objects[int(rng.integers(0, len(objects)))]
            candidates.append(cat.random_morphism(X2, Y2, rng))
        for phi2 in candidates:
            if produced >= budget.cap_instances:
                return
            row = angles.complete(phi2 @ seq.first, budget)
            column = angles.complete(phi2, budget)
            if not (row.found and column.found):
                result.undecided("an octahedral instance could not be completed")
                continue
            produced += 1
            yield OctahedralInstance(seq, row.value, column.value)


def check_N4_prime(angles: AngleClass, budget: Budget) -> AxiomResult:
    result = AxiomResult(name="N4'")
    for instance in octahedral_instances(angles, budget, result):
        result.instances += 1
        outcome = search_octahedron(angles, instance, budget)
        result.budget_spent += outcome.spent
        if outcome.found:
            continue
        if outcome.exhausted:
            result.undecided("octahedral search ran out of budget")
        else:
            result.fail(instance.to_payload(), "no octahedral data for an instance")
            return result
    return result


def _holds(outcome: Optional[SearchOutcome]) -> str:
    if outcome is None:
        return Verdict.FAIL
    if outcome.found:
        return Verdict.PASS
    return Verdict.INCONCLUSIVE if outcome.exhausted else Verdict.FAIL


def differential_n4(angles: AngleClass, budget: Budget) -> AxiomResult:
    """Both octahedral formulations on one shared instance set.

    Each octahedral instance also gives the square (id, φ₂) from its
    x-row to its y-row; the cone search of N4 and the octahedral search
    of N4′ must agree on it.
    """
    result = AxiomResult(name="N4<=>N4'")
    cat = angles.structure.category
    for instance in octahedral_instances(angles, budget, result):
        result.instances += 1
        phi1 = cat.identity(instance.x_row.objects[0])
        space = complete_morphism(phi1, instance.phi2, instance.x_row, instance.y_row)
        cone = None if space is None else cone_member_search(angles, space, budget)
        octahedron = search_octahedron(angles, instance, budget)
        result.budget_spent += octahedron.spent + (cone.spent if cone else 0)
        verdicts = {'N4': _holds(cone), "N4'": _holds(octahedron)}
        if Verdict.INCONCLUSIVE in verdicts.values():
            result.undecided("one of the two searches ran out of budget on an instance")
        elif verdicts['N4'] != verdicts["N4'"]:
            result.fail({**instance.to_payload(), **verdicts}, "the two formulations disagree on an instance")
            return result
    return result


def check_hom_exact_screen(angles: AngleClass, budget: Budget) -> AxiomResult:
    """Every enumerated member is Hom-exact in both variances for nonzero probes at cap."""
    result = AxiomResult(name="hom_exact")
    structure = angles.structure
    names = structure.category.generator_names
    probes = [obj for obj in angles.objects(budget.cap_objects) if not obj.is_zero]
    members, _ = sample_members(angles, budget)
    for seq in members:
        for variance in VARIANCES:
            result.instances += 1
            failure = next(exactness_failures(seq, variance, probes), None)
            if failure is not None:
                probe, position = failure
                result.fail({
                    'sequence': seq.to_payload(), 'variance': variance,
                    'probe': probe.names(names), 'position': position,
                }, f"member is not {variance} Hom-exact")
                return result
    return result


def run_axiom_suite(
    angles: AngleClass,
    budget: Budget,
    progress_callback: Optional[ProgressCallback] = None,
    screen: bool = True,
) -> List[AxiomResult]:
    """All axiom checks in order, the Hom-exactness screen and the N4 differential."""
    steps = [
        ("N1", lambda: check_N1(angles, budget)),
        ("N2", lambda: [check_N2(angles, budget)]),
        ("N3", lambda: [check_N3(angles, budget)]),
        ("N4", lambda: [check_N4(angles, budget)]),
        ("N4'", lambda: [check_N4_prime(angles, budget)]),
    ]
    if screen:
        steps.append(("Hom exactness", lambda: [check_hom_exact_screen(angles, budget)]))
    steps.append(("N4<=>N4'", lambda: [differential_n4(angles, budget)]))
    results: List[AxiomResult] = []
    for index, (label, step) in enumerate(steps):
        if progress_callback:
            progress_callback(index / (len(steps) + 1), f"Checking {label} ({index + 1}/{len(steps)})")
        logger.info("checking %s on %s", label, angles.describe())
        results.extend(step())
    if progress_callback:
        progress_callback(1.0, "Completed axiom suite")
    return results
