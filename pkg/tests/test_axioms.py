import pytest

from src.angles import (
    AngleClass,
    ListedAngleClass,
    NSequence,
    check_N1,
    check_N2,
    check_N3,
    check_N4,
    check_N4_prime,
    differential_n4,
    run_axiom_suite,
    trivial_angle,
)
from src.angles import axioms
from src.angles.axioms import check_N1_completion, check_N1_sums, idempotent_endomorphisms, split_summand
from src.category import ZERO
from src.config import Membership, Verdict
from src.corpus import load_entry, local_algebra_candidate, zero_structure
from src.models import Budget, SearchOutcome


@pytest.mark.parametrize("name", ["split-1-id", "split-2-swap", "two-simple-id"])
def test_split_entries_pass_the_suite(name, small_budget):
    entry = load_entry(name)
    results = run_axiom_suite(entry.angles, small_budget)
    names = [r.name for r in results]
    assert names == ["N1(a)", "N1(b)", "N1(c)", "N2", "N3", "N4", "N4'", "hom_exact", "N4<=>N4'"]
    assert all(r.verdict != Verdict.FAIL for r in results), [r.to_dict() for r in results if r.verdict == Verdict.FAIL]


def test_trivial_rotation_and_morphism_axioms(split_one, small_budget):
    n1 = {r.name: r for r in check_N1(split_one.angles, small_budget)}
    assert n1["N1(b)"].verdict == Verdict.PASS
    assert n1["N1(b)"].instances == 2
    assert check_N2(split_one.angles, small_budget).verdict == Verdict.PASS
    assert check_N3(split_one.angles, small_budget).verdict != Verdict.FAIL


def test_zero_category_passes_vacuously(small_budget):
    results = run_axiom_suite(zero_structure().angles, small_budget)
    assert Verdict.combine([r.verdict for r in results]) != Verdict.FAIL


def test_progress_reaches_completion(split_one, small_budget):
    seen = []
    run_axiom_suite(split_one.angles, small_budget, lambda fraction, message: seen.append(fraction))
    assert seen[-1] == 1.0
    assert seen == sorted(seen)


def test_suite_is_deterministic_for_a_seed(split_swap):
    budget = Budget(cap_objects=1, cap_solutions=16, cap_instances=4, seed=7)
    first = [r.to_dict() for r in run_axiom_suite(split_swap.angles, budget)]
    second = [r.to_dict() for r in run_axiom_suite(split_swap.angles, budget)]
    assert first == second


def test_capped_completion_is_not_a_counterexample():
    entry = local_algebra_candidate(3)
    cat = entry.category
    P = cat.object_of("P")
    f = cat.zero(P, P)
    capped = Budget(cap_objects=1, cap_solutions=32, cap_instances=4)
    outcome = entry.angles.complete(f, capped)
    assert not outcome.found
    assert outcome.exhausted
    roomy = entry.angles.complete(f, Budget(cap_objects=2, cap_solutions=32, cap_instances=4))
    assert roomy.found
    assert roomy.value.first == f
    assert check_N1_completion(entry.angles, capped).verdict != Verdict.FAIL


def test_exhaustive_budget_makes_a_missing_completion_definite():
    entry = local_algebra_candidate(3)
    P = entry.category.object_of("P")
    budget = Budget(cap_objects=1, cap_solutions=32, cap_instances=4, exhaustive=True)
    outcome = entry.angles.complete(entry.category.zero(P, P), budget)
    assert not outcome.found
    assert not outcome.exhausted


def test_members_decompose_into_trivial_summands(split_one, small_budget):
    cat = split_one.category
    seq = trivial_angle(split_one.structure, cat.object_of("s0", "s0"))
    idempotents, _ = idempotent_endomorphisms(seq, small_budget)
    assert idempotents
    summand = split_summand(idempotents[0], small_budget.cap_solutions)
    assert summand.objects[0] == cat.object_of("s0")
    assert split_one.angles.membership(summand, small_budget) == Membership.IN


def test_indecomposable_member_has_no_idempotents(split_one, small_budget):
    seq = trivial_angle(split_one.structure, split_one.category.object_of("s0"))
    assert idempotent_endomorphisms(seq, small_budget) == ([], False)


# Defective classes: each one breaks a single axiom and the checker must say so.

class MultiSummandClass(AngleClass):
    """Split angles starting at an object with at least two summands."""

    name = "multi-summand"

    def __init__(self, entry):
        super().__init__(entry.structure)
        self.split = entry.angles

    def membership(self, seq: NSequence, budget: Budget) -> str:
        if seq.objects[0].size == 1:
            return Membership.OUT
        return self.split.membership(seq, budget)

    def complete(self, f, budget: Budget) -> SearchOutcome:
        return self.split.complete(f, budget)

    def enumerate(self, budget: Budget):
        yield trivial_angle(self.structure, self.structure.category.object_of("s0", "s0"))


def listed(entry, *members):
    return ListedAngleClass(entry.structure, members)


def test_summand_that_is_not_a_member_fails(split_one, small_budget):
    result = check_N1_sums(MultiSummandClass(split_one), small_budget)
    assert result.verdict == Verdict.FAIL
    witness = result.witnesses[0]
    assert witness['summand']['objects'][0] == ["s0"]
    assert witness['member']['objects'][0] == ["s0", "s0"]


def test_missing_direct_sum_fails(split_one, small_budget):
    trivial = trivial_angle(split_one.structure, split_one.category.object_of("s0"))
    result = check_N1_sums(listed(split_one, trivial), small_budget)
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['sum']['objects'][0] == ["s0", "s0"]


def test_missing_trivial_angle_fails(split_one, small_budget):
    angles = listed(split_one, trivial_angle(split_one.structure, ZERO))
    result = {r.name: r for r in check_N1(angles, small_budget)}["N1(b)"]
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['generator'] == ["s0"]


def test_missing_rotation_fails(split_one, small_budget):
    trivial = trivial_angle(split_one.structure, split_one.category.object_of("s0"))
    result = check_N2(listed(split_one, trivial), small_budget)
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['direction'] == "left"
    assert result.witnesses[0]['sequence'] == trivial.to_payload()


def test_uncompletable_square_fails(split_one, small_budget, monkeypatch):
    cat = split_one.category
    s0 = cat.object_of("s0")
    one, zero = cat.identity(s0), cat.zero(s0, s0)
    # the last three squares force phi4 = phi3 = phi2 and phi4 = phi1
    seq = NSequence.of(split_one.structure, [zero, one, one, one])
    monkeypatch.setattr(axioms, "first_squares", lambda source, target, rng, count: [(one, zero)])
    result = check_N3(listed(split_one, seq), small_budget)
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['phi1'] == one.to_payload()
    assert result.witnesses[0]['phi2'] == zero.to_payload()


def test_cone_outside_the_class_fails(split_one, small_budget):
    trivial = trivial_angle(split_one.structure, split_one.category.object_of("s0"))
    result = check_N4(listed(split_one, trivial), small_budget)
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['source'] == trivial.to_payload()
    assert "mapping cone" in result.notes[0]


def test_missing_octahedral_data_fails(split_one, small_budget):
    trivial = trivial_angle(split_one.structure, split_one.category.object_of("s0"))
    result = check_N4_prime(listed(split_one, trivial), small_budget)
    assert result.verdict == Verdict.FAIL
    assert result.witnesses[0]['x_row'] == trivial.to_payload()


def test_differential_runs_both_searches_per_instance(split_one, small_budget):
    result = differential_n4(split_one.angles, small_budget)
    assert result.instances > 0
    assert result.verdict != Verdict.FAIL


def test_differential_reports_the_disagreeing_instance(split_one, small_budget, monkeypatch):
    monkeypatch.setattr(axioms, "search_octahedron", lambda angles, inst, budget: SearchOutcome(None, False, 1))
    result = differential_n4(split_one.angles, small_budget)
    assert result.verdict == Verdict.FAIL
    witness = result.witnesses[0]
    assert witness['N4'] == Verdict.PASS
    assert witness["N4'"] == Verdict.FAIL
    assert {'x_row', 'y_row', 'column'} <= set(witness)
