import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.angles import (
    COVARIANT,
    ListedAngleClass,
    NSequence,
    OppositeAngleClass,
    SplitAngleClass,
    build_opposite,
    check_hom_exact,
    direct_sum,
    identity_morphism,
    is_hom_exact,
    mapping_cone,
    rotate_left,
    rotate_right,
    sequence_isomorphism,
    trivial_angle,
    zero_morphism,
)
from src.category import ZERO, ObjectExpr
from src.config import Membership, Verdict
from src.corpus import local_algebra_candidate, split_structure
from src.errors import PreconditionError, PresentationError
from src.models import Budget

BUDGET = Budget(cap_objects=2, cap_solutions=64, cap_instances=8)


def random_map(entry, size_in, size_out, seed):
    cat = entry.category
    X = ObjectExpr.of(*([0] * size_in))
    Y = ObjectExpr.of(*([0] * size_out))
    return cat.random_morphism(X, Y, np.random.default_rng(seed))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_trivial_angles_are_split_members(n):
    entry = split_structure(3, 1, [0], n)
    X = entry.category.object_of("s0", "s0")
    seq = trivial_angle(entry.structure, X)
    assert seq.is_complex()
    assert entry.angles.membership(seq, BUDGET) == Membership.IN
    assert entry.angles.membership(trivial_angle(entry.structure, ZERO), BUDGET) == Membership.IN


def test_sequence_objects_must_chain(split_one):
    cat = split_one.category
    X = cat.object_of("s0")
    maps = [cat.identity(X)] * 3 + [cat.zero(X, ZERO)]
    with pytest.raises(PreconditionError):
        NSequence.of(split_one.structure, maps)


def test_non_complex_is_rejected(split_one):
    cat = split_one.category
    X = cat.object_of("s0")
    seq = NSequence.of(split_one.structure, [cat.identity(X)] * 4)
    assert not seq.is_complex()
    assert split_one.angles.membership(seq, BUDGET) == Membership.OUT


@settings(max_examples=25, deadline=None)
@given(
    size_in=st.integers(min_value=0, max_value=2),
    size_out=st.integers(min_value=0, max_value=2),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_split_completion_is_a_member(size_in, size_out, seed):
    entry = split_structure(3, 1, [0], 4)
    f = random_map(entry, size_in, size_out, seed)
    outcome = entry.angles.complete(f, BUDGET)
    assert outcome.found
    seq = outcome.value
    assert seq.first == f
    assert entry.angles.membership(seq, BUDGET) == Membership.IN
    assert is_hom_exact(seq, COVARIANT)


@settings(max_examples=25, deadline=None)
@given(
    size_in=st.integers(min_value=0, max_value=2),
    size_out=st.integers(min_value=0, max_value=2),
    seed=st.integers(min_value=0, max_value=10_000),
    n=st.integers(min_value=3, max_value=5),
)
def test_rotations_are_mutually_inverse(size_in, size_out, seed, n):
    entry = split_structure(2, 1, [0], n)
    seq = entry.angles.complete(random_map(entry, size_in, size_out, seed), BUDGET).value
    assert rotate_right(rotate_left(seq)) == seq
    assert rotate_left(rotate_right(seq)) == seq
    assert entry.angles.membership(rotate_left(seq), BUDGET) == Membership.IN


def test_swap_suspension_rotates_objects(split_swap):
    cat = split_swap.category
    f = cat.identity(cat.object_of("s0"))
    seq = split_swap.angles.complete(f, BUDGET).value
    rotated = rotate_left(seq)
    assert rotated.objects[-1] == cat.object_of("s1")
    assert split_swap.angles.membership(rotated, BUDGET) == Membership.IN


def test_cone_of_identity_is_a_member(split_one):
    cat = split_one.category
    X = cat.object_of("s0", "s0")
    f = cat.morphism(X, cat.object_of("s0"), [1, 1])
    seq = split_one.angles.complete(f, BUDGET).value
    cone = mapping_cone(identity_morphism(seq))
    assert cone.is_complex()
    assert split_one.angles.membership(cone, BUDGET) == Membership.IN


def test_isomorphic_sequences_are_found(split_swap):
    cat = split_swap.category
    X = cat.object_of("s0", "s1")
    Y = cat.object_of("s1", "s0")
    first = trivial_angle(split_swap.structure, X)
    second = trivial_angle(split_swap.structure, Y)
    outcome = sequence_isomorphism(first, second, BUDGET.cap_solutions)
    assert outcome.found
    assert outcome.value.is_valid()
    assert outcome.value.is_isomorphism()


def test_listed_class_answers_up_to_isomorphism(split_swap):
    structure = split_swap.structure
    cat = split_swap.category
    listed = ListedAngleClass(structure, [trivial_angle(structure, cat.object_of("s0", "s1"))])
    assert listed.membership(trivial_angle(structure, cat.object_of("s1", "s0")), BUDGET) == Membership.IN
    assert listed.membership(trivial_angle(structure, cat.object_of("s0")), BUDGET) == Membership.OUT


def test_split_class_needs_a_semisimple_presentation():
    entry = local_algebra_candidate()
    with pytest.raises(PresentationError):
        SplitAngleClass(entry.structure)


def test_opposite_class_reverses_members(split_swap):
    op_class = OppositeAngleClass(split_swap.angles)
    cat = split_swap.category
    seq = split_swap.angles.complete(cat.identity(cat.object_of("s1")), BUDGET).value
    reversed_seq = op_class.from_base(seq)
    assert op_class.to_base(reversed_seq) == seq
    assert op_class.membership(reversed_seq, BUDGET) == Membership.IN


def test_wrap_sequence_of_x_is_exact():
    entry = local_algebra_candidate()
    cat = entry.category
    P = cat.object_of("P")
    x = cat.morphism(P, P, [0, 1])
    wrap = NSequence.of(entry.structure, [x] * 4)
    assert is_hom_exact(wrap)
    assert entry.angles.membership(wrap, BUDGET) == Membership.IN
    assert entry.angles.membership(trivial_angle(entry.structure, P), BUDGET) == Membership.IN

    broken = NSequence.of(entry.structure, [x, cat.zero(P, P), x, x])
    assert not is_hom_exact(broken)
    assert entry.angles.membership(broken, BUDGET) == Membership.OUT


def test_cone_of_a_zero_morphism_splits(split_swap):
    structure = split_swap.structure
    cat = split_swap.category
    a = trivial_angle(structure, cat.object_of("s0"))
    b = split_swap.angles.complete(cat.identity(cat.object_of("s1")), BUDGET).value
    cone = mapping_cone(zero_morphism(a, b))
    assert cone == direct_sum(rotate_left(a), b)
    assert cone.maps[-1].codomain == structure.suspend_object(cone.objects[0])


def test_check_hom_exact_reports_the_failing_position():
    entry = local_algebra_candidate()
    cat = entry.category
    P = cat.object_of("P")
    x = cat.morphism(P, P, [0, 1])
    assert check_hom_exact(NSequence.of(entry.structure, [x] * 4)).verdict == Verdict.PASS
    broken = check_hom_exact(NSequence.of(entry.structure, [x, cat.zero(P, P), x, x]), COVARIANT)
    assert broken.verdict == Verdict.FAIL
    assert broken.witnesses[0]['variance'] == COVARIANT
    assert broken.witnesses[0]['probe'] == ["P"]


def test_build_opposite_keeps_n_and_reverses_hom(split_one):
    op_structure, op_class = build_opposite(split_one.structure, split_one.angles)
    assert op_structure.n == split_one.structure.n
    assert op_class.base is split_one.angles
    with pytest.raises(PreconditionError):
        build_opposite(split_structure(2, 1, [0], 5).structure, split_one.angles)
