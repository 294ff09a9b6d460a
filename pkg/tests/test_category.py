import numpy as np
import pytest

from src.category import (
    ZERO,
    EndoFunctor,
    ObjectExpr,
    PresentedCategory,
    Subcategory,
    SuspensionFunctor,
    apply_suspension,
    find_natural_isomorphism,
    op_morphism,
)
from src.errors import FieldError, PreconditionError, PresentationError
from src.ffmat import FpMatrix


def dual_morphisms(cat):
    P = cat.object_of("P")
    return P, cat.morphism(P, P, [1, 0]), cat.morphism(P, P, [0, 1])


def test_composition_follows_the_table(dual_numbers):
    P, ident, x = dual_morphisms(dual_numbers)
    assert ident == dual_numbers.identity(P)
    assert x @ ident == x
    assert ident @ x == x
    assert (x @ x).is_zero()
    assert dual_numbers.is_isomorphism(ident)
    assert not dual_numbers.is_isomorphism(x)


def test_morphism_rejects_wrong_coordinate_count(dual_numbers):
    P = dual_numbers.object_of("P")
    with pytest.raises(FieldError):
        dual_numbers.morphism(P, P, [1, 0, 1])


def test_composition_needs_matching_objects(split_swap):
    cat = split_swap.category
    s0, s1 = cat.object_of("s0"), cat.object_of("s1")
    with pytest.raises(PreconditionError):
        cat.identity(s0) @ cat.identity(s1)


def test_broken_unit_is_reported():
    tensor = np.zeros((2, 2, 2), dtype=np.int64)
    tensor[0, 0] = [1, 0]
    tensor[0, 1] = [0, 1]
    tensor[1, 0] = [0, 1]
    cat = PresentedCategory(2, ["P"], {(0, 0): ["id", "x"]}, {(0, 0, 0): tensor}, {0: [0, 1]})
    with pytest.raises(PresentationError, match="associativity/unit consistency"):
        cat.validate()


def test_one_sided_unit_is_reported():
    # x o id = x but id o x = 0
    tensor = np.zeros((2, 2, 2), dtype=np.int64)
    tensor[0, 0] = [1, 0]
    tensor[1, 1] = [1, 0]
    tensor[1, 0] = [0, 1]
    cat = PresentedCategory(3, ["P"], {(0, 0): ["id", "x"]}, {(0, 0, 0): tensor}, {0: [1, 0]})
    with pytest.raises(PresentationError, match="associativity/unit consistency"):
        cat.validate()


def test_sum_inclusions_and_projections(split_swap):
    cat = split_swap.category
    parts = [cat.object_of("s0"), cat.object_of("s1")]
    total = parts[0] + parts[1]
    for index, part in enumerate(parts):
        assert cat.projection(parts, index) @ cat.inclusion(parts, index) == cat.identity(part)
    resolved = cat.inclusion(parts, 0) @ cat.projection(parts, 0) + cat.inclusion(parts, 1) @ cat.projection(parts, 1)
    assert resolved == cat.identity(total)


def test_iso_search_reorders_summands(split_swap):
    cat = split_swap.category
    X = cat.object_of("s0", "s1")
    Y = cat.object_of("s1", "s0")
    outcome = cat.iso_search(X, Y)
    assert outcome.found
    assert cat.is_isomorphism(outcome.value)
    assert not cat.iso_search(X, cat.object_of("s0", "s0")).found


def test_zero_object_has_trivial_hom(dual_numbers):
    P = dual_numbers.object_of("P")
    assert dual_numbers.hom_size(P, ZERO) == 1
    assert dual_numbers.zero(P, ZERO).is_zero()


def test_subcategory_membership():
    Z = Subcategory.of([0, 1])
    D = Subcategory.of([1])
    assert D.issubset(Z)
    assert Z.contains(ObjectExpr.of(0, 1, 1))
    assert not D.contains(ObjectExpr.of(0))
    assert D.contains(ZERO)


def test_suspension_inverse_undoes_the_swap(split_swap):
    sigma = split_swap.structure.shift.forward
    cat = split_swap.category
    X = cat.object_of("s0", "s1", "s1")
    f = cat.morphism(X, X, [1, 1, 0, 1, 1])
    assert sigma.apply_object(X) == cat.object_of("s1", "s0", "s0")
    assert sigma.inverse().apply(sigma.apply(f)) == f


def test_non_invertible_suspension_is_rejected(dual_numbers):
    with pytest.raises(PresentationError):
        SuspensionFunctor(dual_numbers, [0], {(0, 0): FpMatrix.zeros(2, 2, 2)})


def test_opposite_reverses_arrows(split_swap):
    cat = split_swap.category
    op = cat.opposite()
    assert op.opposite() is cat
    X = cat.object_of("s0", "s1")
    Y = cat.object_of("s1")
    f = cat.morphism(X, Y, [1])
    g = op_morphism(f)
    assert g.domain == Y and g.codomain == X
    assert op_morphism(g) == f


def test_commutative_endomorphisms_are_self_opposite(dual_numbers):
    assert dual_numbers.opposite().same_tables(dual_numbers)


def test_identity_functor_is_naturally_isomorphic_to_itself(dual_numbers):
    identity = EndoFunctor.identity(dual_numbers)
    outcome = find_natural_isomorphism(identity, identity)
    assert outcome.found
    for component in outcome.value.components.values():
        assert dual_numbers.is_isomorphism(component)


def test_apply_suspension_powers(split_swap):
    sigma = split_swap.structure.shift.forward
    cat = split_swap.category
    X = cat.object_of("s0", "s1")
    f = cat.morphism(X, X, [1, 1])
    assert apply_suspension(sigma, f, 0) == f
    assert apply_suspension(sigma, apply_suspension(sigma, f, 1), -1) == f
    assert apply_suspension(sigma, f, 2) == f
    assert apply_suspension(sigma, cat.identity(cat.object_of("s0")), 1) == cat.identity(cat.object_of("s1"))
