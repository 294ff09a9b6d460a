import numpy as np
import pytest

from src.angles import NSequence, direct_sum, rotate_left, trivial_angle
from src.category import Subcategory
from src.config import EReading, Membership, Task, Verdict
from src.corpus import load_entry, local_algebra_candidate, two_simple_structure
from src.errors import InputError
from src.models import AxiomReport
from src.mutation import MutationPairWitness, validate_mutation_pair
from src.quotient import (
    PhiAngleClass,
    build_quotient,
    build_quotient_report,
    check_ideal_property,
    verify_frobenius_quotient,
    verify_quotient_angulation,
)
from src.quotient.category import ideal_subspace
from src.quotient.functor import FORWARD, build_T, check_completion_independence, completion_space
from src.quotient.verification import QUOTIENT_PREFIX

EVERYTHING = Subcategory.of([0])
NOTHING = Subcategory()


def test_quotient_by_everything_is_zero(split_one):
    quotient = build_quotient(split_one.category, EVERYTHING, EVERYTHING)
    assert quotient.hom_dim(0, 0) == 0
    assert quotient.is_zero_generator(0)
    assert quotient.name.endswith("/[s0]")


def test_quotient_by_nothing_keeps_every_morphism(split_swap):
    cat = split_swap.category
    Z = Subcategory.of([0, 1])
    quotient = build_quotient(cat, Z, NOTHING)
    for g in cat.generators():
        for h in cat.generators():
            assert quotient.hom_dim(g, h) == cat.hom_dim(g, h)
    X = quotient.object_of("s0", "s1")
    f = quotient.morphism(X, X, [1, 1])
    assert quotient.project(quotient.lift(f)) == f
    assert not quotient.in_ideal(quotient.lift(f))


def test_identity_factoring_through_D_kills_the_object(dual_numbers):
    P = Subcategory.of([0])
    quotient = build_quotient(dual_numbers, P, P)
    assert quotient.hom_dim(0, 0) == 0
    assert check_ideal_property(quotient).verdict == Verdict.PASS


def test_ideal_property_holds_for_a_proper_ideal(split_swap):
    quotient = build_quotient(split_swap.category, Subcategory.of([0, 1]), Subcategory.of([1]))
    assert quotient.hom_dim(0, 0) == 1
    assert quotient.hom_dim(1, 1) == 0
    assert check_ideal_property(quotient).verdict == Verdict.PASS


def test_D_must_lie_in_Z(split_swap):
    with pytest.raises(InputError, match="D must be a subset of Z"):
        build_quotient(split_swap.category, Subcategory.of([0]), Subcategory.of([1]))


def test_T_matches_the_suspension_when_D_is_zero(split_swap, small_budget):
    Z = Subcategory.of([0, 1])
    witness, _ = validate_mutation_pair(split_swap.angles, Z, NOTHING, small_budget)
    assert witness is not None
    report = AxiomReport(task=Task.BUILD_QUOTIENT, budget=small_budget)
    quotient, functor = build_quotient_report(witness, small_budget, report)
    assert functor is not None
    assert report.choices['quotient']['hom_dims'] == {"s0,s0": 1, "s0,s1": 0, "s1,s0": 0, "s1,s1": 1}
    for name in ("ideal_property", "functor_T", "completion_independence",
                 "functoriality_T", "functoriality_T_prime", "quasi_inverse", "T_vs_suspension"):
        assert report.result(name).verdict == Verdict.PASS, name
    assert functor.forward.object_map == (quotient.object_of("s1"), quotient.object_of("s0"))
    assert functor.shift() is not None


def test_quotient_angulation_on_a_split_structure(split_one, small_budget):
    report = verify_quotient_angulation(split_one.angles, EVERYTHING, NOTHING, small_budget)
    failed = [r.to_dict() for r in report.results if r.verdict == Verdict.FAIL]
    assert not failed
    assert report.result(f"{QUOTIENT_PREFIX}N1(b)") is not None
    assert report.result("standard_angle_independence").verdict == Verdict.PASS
    assert "membership in Φ is a bounded search up to isomorphism" in report.notes


def test_quotient_by_everything_is_verified_vacuously(split_one, small_budget):
    report = verify_quotient_angulation(split_one.angles, EVERYTHING, EVERYTHING, small_budget)
    assert report.verdict != Verdict.FAIL
    assert report.choices['quotient']['zero_generators'] == ["s0"]


def test_ideal_of_a_simple_object_misses_the_other_one():
    entry = load_entry("two-simple-id")
    cat = entry.category
    D = Subcategory.of([0])
    assert ideal_subspace(cat, 1, 1, D) == []
    assert len(ideal_subspace(cat, 0, 0, D)) == 1
    assert ideal_subspace(cat, 0, 0, NOTHING) == []
    quotient = build_quotient(cat, Subcategory.of([0, 1]), D)
    assert quotient.hom_dim(1, 1) == 1
    assert quotient.hom_dim(0, 0) == 0


def test_frobenius_quotient_of_a_semisimple_structure(split_one, small_budget):
    report = verify_frobenius_quotient(split_one.angles, EVERYTHING, small_budget)
    assert report.task == Task.VERIFY_FROBENIUS
    assert report.verdict != Verdict.FAIL
    assert report.choices['frobenius']['reading'] == EReading.EXACT
    assert report.result("Z:N2") is not None


def rotated_trivial(structure, X, turns):
    seq = trivial_angle(structure, X)
    for _ in range(turns):
        seq = rotate_left(seq)
    return seq


def dual_numbers_witness():
    """P -> 0 -> 0 -> P -> ΣP serves as both fixed and cofixed angle when D = 0."""
    entry = local_algebra_candidate()
    angle = rotated_trivial(entry.structure, entry.category.object_of("P"), 1)
    return entry, MutationPairWitness(entry.structure, entry.Z, entry.D, {0: angle}, {0: angle})


def padded_witness():
    """Two simple objects over F_5 with D = s1.

    The fixed angle of s0 carries a contractible s1 summand at positions
    three and four, so completions of s0 -> s0 differ by a map through s1.
    """
    entry = two_simple_structure(False, p=5)
    structure = entry.structure
    s0, s1 = entry.category.object_of("s0"), entry.category.object_of("s1")
    padding = rotated_trivial(structure, s1, 2)
    fixed = {0: direct_sum(rotated_trivial(structure, s0, 1), padding), 1: trivial_angle(structure, s1)}
    cofixed = {0: rotated_trivial(structure, s0, 1), 1: padding}
    return entry, MutationPairWitness(structure, Subcategory.of([0, 1]), Subcategory.of([1]), fixed, cofixed)


@pytest.mark.parametrize("make_witness", [dual_numbers_witness, padded_witness])
def test_sampled_completion_pairs_agree_modulo_the_ideal(make_witness, small_budget):
    entry, witness = make_witness()
    for seq in list(witness.fixed.values()) + list(witness.cofixed.values()):
        assert entry.angles.membership(seq, small_budget) == Membership.IN
    cat = entry.category
    quotient = build_quotient(cat, witness.Z, witness.D)
    assert check_completion_independence(build_T(witness, quotient)).verdict == Verdict.PASS
    rng = np.random.default_rng(0)
    X = cat.object_of(cat.generator_names[0])
    pairs = 0
    while pairs < 200:
        f = cat.random_morphism(X, X, rng)
        space = completion_space(witness, FORWARD, f)
        first, second = (space.to_morphism(values) for values in space.sample(rng, 2))
        assert first.is_valid() and second.is_valid()
        assert quotient.project(first.components[-1]) == quotient.project(second.components[-1])
        pairs += 1


def test_padded_completions_are_not_unique():
    entry, witness = padded_witness()
    s0 = entry.category.object_of("s0")
    space = completion_space(witness, FORWARD, entry.category.identity(s0))
    assert space.dimension == 1
    components = {m.components[-1] for m in space.iter_morphisms()}
    assert len(components) == 5


def test_corrupted_completion_coordinate_breaks_independence(small_budget):
    entry, witness = padded_witness()
    seq = witness.fixed[0]
    # zeroing the last map leaves the s0 row of the fourth component free
    broken = entry.category.zero(seq.last.domain, seq.last.codomain)
    witness.fixed[0] = NSequence.of(seq.structure, list(seq.maps[:-1]) + [broken])
    report = AxiomReport(task=Task.VERIFY_THEOREM, budget=small_budget)
    build_quotient_report(witness, small_budget, report)
    result = report.result("completion_independence")
    assert result.verdict == Verdict.FAIL
    witness_payload = result.witnesses[0]
    assert witness_payload['direction'] == FORWARD
    assert witness_payload['pair'] == ["s0", "s0"]
    assert 'component' in witness_payload
    assert report.exit_code == 1


def test_phi_rejects_a_complex_that_is_not_exact(split_swap, small_budget):
    Z = Subcategory.of([0, 1])
    witness, _ = validate_mutation_pair(split_swap.angles, Z, NOTHING, small_budget)
    report = AxiomReport(task=Task.VERIFY_THEOREM, budget=small_budget)
    quotient, functor = build_quotient_report(witness, small_budget, report)
    phi = PhiAngleClass(functor, split_swap.angles)
    s0 = quotient.object_of("s0")
    objects = [s0, s0, s0, s0, phi.structure.suspend_object(s0)]
    seq = NSequence.of(phi.structure, [quotient.zero(a, b) for a, b in zip(objects, objects[1:])])
    assert seq.is_complex()
    assert phi.membership(seq, small_budget) == Membership.OUT
