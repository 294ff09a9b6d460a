import pytest

from src.category import ZERO, Subcategory
from src.config import EReading, Verdict
from src.errors import InputError
from src.mutation import (
    certify_witness,
    check_frobenius,
    e_class,
    find_left_approximation,
    find_right_approximation,
    is_D_epic,
    is_D_monic,
    is_extension_closed,
    is_suspension_stable,
    stacked_map,
    validate_mutation_pair,
)

EVERYTHING = Subcategory.of([0])
NOTHING = Subcategory()


def test_identity_is_monic_and_epic_relative_to_itself(split_one):
    cat = split_one.category
    X = cat.object_of("s0")
    assert is_D_monic(cat.identity(X), EVERYTHING)
    assert is_D_epic(cat.identity(X), EVERYTHING)
    assert not is_D_monic(cat.zero(X, X), EVERYTHING)
    assert is_D_monic(cat.zero(X, X), NOTHING)


def test_left_approximation_prefers_the_identity(split_one, small_budget):
    cat = split_one.category
    X = cat.object_of("s0", "s0")
    outcome = find_left_approximation(cat, X, EVERYTHING, small_budget)
    assert outcome.value == cat.identity(X)


def test_approximation_into_an_orthogonal_subcategory_is_zero(split_swap, small_budget):
    cat = split_swap.category
    X = cat.object_of("s0")
    D = Subcategory.of([1])
    left = find_left_approximation(cat, X, D, small_budget)
    right = find_right_approximation(cat, X, D, small_budget)
    assert left.value.codomain == ZERO
    assert right.value.domain == ZERO


def test_stacked_map_is_an_approximation(dual_numbers):
    X = dual_numbers.object_of("P")
    stacked = stacked_map(dual_numbers, X, Subcategory.of([0]))
    assert stacked.codomain == dual_numbers.object_of("P", "P")
    assert is_D_monic(stacked, Subcategory.of([0]))


def test_identity_wins_over_the_stacked_map(dual_numbers, small_budget):
    P = dual_numbers.object_of("P")
    D = Subcategory.of([0])
    left = find_left_approximation(dual_numbers, P, D, small_budget)
    right = find_right_approximation(dual_numbers, P, D, small_budget)
    assert left.value == dual_numbers.identity(P)
    assert right.value == dual_numbers.identity(P)
    assert left.value != stacked_map(dual_numbers, P, D)


@pytest.mark.parametrize("D", [EVERYTHING, NOTHING], ids=["D=Z", "D=0"])
def test_split_structure_is_a_mutation_pair(split_one, small_budget, D):
    witness, results = validate_mutation_pair(split_one.angles, EVERYTHING, D, small_budget)
    assert [r.name for r in results] == ["mutation_pair(1)", "mutation_pair(2)"]
    assert all(r.verdict == Verdict.PASS for r in results)
    assert witness is not None
    assert set(witness.fixed) == {0} and set(witness.cofixed) == {0}
    assert witness.fixed[0].objects[0] == split_one.category.object_of("s0")
    assert witness.cofixed[0].objects[-1] == split_one.category.object_of("s0")
    assert certify_witness(split_one.angles, witness, small_budget).verdict == Verdict.PASS


def test_D_outside_Z_is_an_input_error(split_swap, small_budget):
    with pytest.raises(InputError, match="D must be a subset of Z"):
        validate_mutation_pair(split_swap.angles, Subcategory.of([0]), Subcategory.of([1]), small_budget)


def test_certification_flags_missing_angles(split_one, small_budget):
    witness, _ = validate_mutation_pair(split_one.angles, EVERYTHING, NOTHING, small_budget)
    witness.cofixed.clear()
    result = certify_witness(split_one.angles, witness, small_budget)
    assert result.name == "fixed_angles"
    assert result.verdict == Verdict.FAIL


def test_extension_closure(split_swap, small_budget):
    everything = Subcategory.of([0, 1])
    assert is_extension_closed(split_swap.angles, everything, small_budget).verdict == Verdict.PASS


def test_suspension_stability(split_swap):
    assert is_suspension_stable(split_swap.angles, Subcategory.of([0, 1])).verdict == Verdict.PASS
    unstable = is_suspension_stable(split_swap.angles, Subcategory.of([0]))
    assert unstable.verdict == Verdict.FAIL
    assert unstable.witnesses[0]['image'] == ["s1"]


def test_unknown_E_reading_is_rejected(split_one):
    with pytest.raises(ValueError):
        e_class(split_one.angles, EVERYTHING, "partial")


def test_semisimple_Z_is_frobenius_with_everything_injective(split_one, small_budget):
    data, report = check_frobenius(split_one.angles, EVERYTHING, small_budget, EReading.EXACT)
    assert data.I == EVERYTHING
    assert report.result("injectives=projectives").verdict == Verdict.PASS
    assert report.choices['frobenius']['reading'] == EReading.EXACT


def test_nilpotent_map_is_neither_monic_nor_epic(dual_numbers):
    P = dual_numbers.object_of("P")
    x = dual_numbers.morphism(P, P, [0, 1])
    add_P = Subcategory.of([0])
    assert not is_D_monic(x, add_P)
    assert not is_D_epic(x, add_P)
    assert is_D_monic(x, NOTHING) and is_D_epic(x, NOTHING)
