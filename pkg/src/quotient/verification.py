"""
End-to-end verification that Z/[D] with T and Φ is n-angulated.

The pipeline validates (or certifies) the mutation pair, checks that Z is
extension closed, builds the quotient and T, runs the axiom suite on Φ and
finally re-checks the identities the argument relies on: the rotation
identity for a_n, compatibility of standard angles with morphisms, and
the two octahedral identities.
"""

import itertools
import logging
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..angles import (
    AngleClass,
    LinearSystemBuilder,
    NSequence,
    OctahedralInstance,
    complete_morphism,
    run_axiom_suite,
    search_octahedron,
)
from ..angles.axioms import first_squares
from ..category import Morphism, Subcategory
from ..config import Config, EReading, Task, Verdict
from ..errors import CorruptWitnessError, InputError, PreconditionError
from ..models import AxiomReport, AxiomResult, Budget
from ..mutation import (
    MutationPairWitness,
    certify_witness,
    check_angulated_subcategory,
    check_frobenius,
    is_extension_closed,
    validate_mutation_pair,
)
from .category import QuotientCategory, build_quotient, check_ideal_property
from .functor import (
    QuotientFunctor,
    build_T,
    check_completion_independence,
    check_T_functoriality,
    compare_with_suspension,
    find_quasi_inverse,
)
from .standard import PhiAngleClass, StandardAngle, sample_standard_angles

logger = logging.getLogger(__name__)

ProgressCallback = Callable[[float, str], None]

QUOTIENT_PREFIX = "Z/D:"


def _progress(callback: Optional[ProgressCallback], fraction: float, message: str) -> None:
    if callback:
        callback(fraction, message)


def obtain_witness(
    angles: AngleClass,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    report: AxiomReport,
    progress_callback: Optional[ProgressCallback] = None,
    witness: Optional[MutationPairWitness] = None,
) -> Optional[MutationPairWitness]:
    """Certify a supplied witness or search one; None when the pair is not established."""
    if not D.issubset(Z):
        raise InputError("D must be a subset of Z")
    if witness is not None:
        result = report.add(certify_witness(angles, witness, budget))
        if result.verdict != Verdict.PASS:
            return None
    else:
        witness, results = validate_mutation_pair(angles, Z, D, budget, progress_callback)
        report.extend(results)
        if witness is None:
            return None
    report.choices['witness'] = witness.to_payload()
    return witness


def build_quotient_report(
    witness: MutationPairWitness,
    budget: Budget,
    report: AxiomReport,
) -> Tuple[QuotientCategory, Optional[QuotientFunctor]]:
    """Quotient, T and T' with their checks added to report."""
    structure = witness.structure
    quotient = build_quotient(structure.category, witness.Z, witness.D)
    names = quotient.generator_names
    report.choices['quotient'] = {
        'name': quotient.name,
        'hom_dims': {f"{names[q]},{names[r]}": quotient.hom_dim(q, r)
                     for q in quotient.generators() for r in quotient.generators()},
        'zero_generators': [names[q] for q in quotient.generators() if quotient.is_zero_generator(q)],
    }
    report.add(check_ideal_property(quotient))
    functor_result = AxiomResult(name="functor_T", instances=1)
    report.add(functor_result)
    try:
        functor = build_T(witness, quotient)
    except CorruptWitnessError as error:
        functor_result.fail(error.witness, str(error))
        return quotient, None
    report.add(check_completion_independence(functor))
    report.extend(check_T_functoriality(functor))
    report.add(find_quasi_inverse(functor, budget))
    report.add(compare_with_suspension(functor, structure.shift.forward, budget))
    report.choices['functor'] = functor.to_payload()
    return quotient, functor


def check_standard_independence(phi: PhiAngleClass, standards: List[StandardAngle]) -> AxiomResult:
    """Last components of all completions into the fixed angle agree modulo D."""
    result = AxiomResult(name="standard_angle_independence")
    for standard in standards:
        result.instances += 1
        if not standard.independent(phi.functor):
            result.fail(standard.to_payload(), "two completions give different classes of a_n")
            return result
    return result


def check_rotation_identity(phi: PhiAngleClass, standards: List[StandardAngle]) -> AxiomResult:
    """Every ψ with d_n ψ = (-1)^n f_n is (-1)^n a_n modulo D."""
    result = AxiomResult(name="rotation_identity")
    quotient = phi.quotient
    for standard in standards:
        seq = standard.source
        structure = seq.structure
        d_n = standard.morphism.target.last
        a_n = standard.a_n
        builder = LinearSystemBuilder(structure.category)
        builder.unknown("psi", a_n.domain, a_n.codomain)
        builder.equation([("psi", builder.post(d_n, "psi"))], -seq.last.scale(structure.sign).coords)
        space = builder.solve()
        result.instances += 1
        if space is None:
            result.fail(standard.to_payload(), "no ψ with d_n ψ = (-1)^n f_n")
            return result
        differences = [space.particular()["psi"] - a_n.scale(structure.sign)]
        differences += [values["psi"] for values in space.kernel_morphisms()]
        bad = next((d for d in differences if not quotient.in_ideal(d)), None)
        if bad is not None:
            result.fail({**standard.to_payload(), 'difference': bad.to_payload()},
                        "ψ differs from (-1)^n a_n outside the ideal")
            return result
    return result


def check_compatibility(phi: PhiAngleClass, standards: List[StandardAngle], budget: Budget) -> AxiomResult:
    """A morphism of members induces b_n φ_n = T(φ₁) a_n in the quotient."""
    result = AxiomResult(name="compatibility")
    quotient = phi.quotient
    functor = phi.functor
    rng = np.random.default_rng(budget.seed)
    pairs = itertools.islice(itertools.product(standards, repeat=2), budget.cap_instances)
    for source, target in pairs:
        for phi1, phi2 in first_squares(source.source, target.source, rng, Config.SQUARES_PER_PAIR):
            space = complete_morphism(phi1, phi2, source.source, target.source)
            if space is None:
                continue
            result.instances += 1
            morphism = space.particular_morphism()
            lhs = quotient.project(target.a_n) @ quotient.project(morphism.components[-1])
            rhs = functor.apply(quotient.project(phi1)) @ quotient.project(source.a_n)
            if lhs != rhs:
                result.fail({
                    'source': source.to_payload(),
                    'target': target.to_payload(),
                    'morphism': [c.to_payload() for c in morphism.components],
                }, "standard angles are not compatible with a morphism of members")
                return result
    return result


def octahedral_instance(
    phi: PhiAngleClass,
    x_row_source: NSequence,
    other: Morphism,
    budget: Budget,
) -> Optional[OctahedralInstance]:
    """Rows and column built from a member and a map X₂ -> W, made D-monic by d₁ of X₂."""
    angles = phi.angles
    cat = angles.structure.category
    Z = phi.quotient.Z
    X2 = x_row_source.objects[1]
    d1 = phi.functor.witness.fixed_angle(X2).first
    phi2 = cat.block_matrix([X2], [other.codomain, d1.codomain], {(0, 0): other, (1, 0): d1})
    y_row = angles.complete(phi2 @ x_row_source.first, budget)
    column = angles.complete(phi2, budget)
    if not (y_row.found and column.found):
        return None
    rows = (x_row_source, y_row.value, column.value)
    if not all(Z.contains(obj) for seq in rows for obj in seq.objects):
        return None
    return OctahedralInstance(*rows)


def check_octahedral_identities(phi: PhiAngleClass, standards: List[StandardAngle], budget: Budget) -> List[AxiomResult]:
    """e_n = T(f₂) c_n and c_n ψ_n = T(f₁) b_n in the quotient on sampled instances."""
    first = AxiomResult(name="octahedral_identity_e")
    second = AxiomResult(name="octahedral_identity_psi")
    quotient = phi.quotient
    functor = phi.functor
    cat = phi.angles.structure.category
    objects = [obj for obj in phi.angles.objects(budget.cap_objects) if quotient.Z.contains(obj)]
    rng = np.random.default_rng(budget.seed)
    produced = 0
    skipped = 0
    for standard in standards:
        x_row = standard.source
        X2 = x_row.objects[1]
        others = [cat.identity(X2)]
        for _ in range(Config.SQUARES_PER_PAIR):
            W = objects[int(rng.integers(0, len(objects)))]
            others.append(cat.random_morphism(X2, W, rng))
        for other in others:
            if produced >= budget.cap_instances:
                return [first, second]
            instance = octahedral_instance(phi, x_row, other, budget)
            if instance is None:
                continue
            outcome = search_octahedron(phi.angles, instance, budget)
            if not outcome.found:
                if outcome.exhausted:
                    second.undecided("octahedral search ran out of budget")
                continue
            produced += 1
            data = outcome.value
            n = instance.n
            column = phi.standard(instance.column)
            y_row = phi.standard(instance.y_row)
            c_n = quotient.project(column.a_n)
            second.instances += 1
            lhs = c_n @ quotient.project(data.psi(n))
            rhs = functor.apply(quotient.project(instance.f(1))) @ quotient.project(y_row.a_n)
            if lhs != rhs:
                second.fail(data.to_payload(), "c_n ψ_n differs from T(f₁) b_n")
                return [first, second]
            try:
                assembled = phi.standard(data.sequence)
            except PreconditionError:
                skipped += 1
                continue
            first.instances += 1
            lhs = quotient.project(assembled.a_n)
            rhs = functor.apply(quotient.project(instance.f(2))) @ c_n
            if lhs != rhs:
                first.fail(data.to_payload(), "e_n differs from T(f₂) c_n")
                return [first, second]
    if skipped:
        first.notes.append(f"{skipped} assembled sequences had no standard angle")
    return [first, second]


def verify_quotient_angulation(
    angles: AngleClass,
    Z: Subcategory,
    D: Subcategory,
    budget: Budget,
    progress_callback: Optional[ProgressCallback] = None,
    witness: Optional[MutationPairWitness] = None,
    task: str = Task.VERIFY_THEOREM,
) -> AxiomReport:
    """Check that (Z/[D], T, Φ) satisfies every axiom and the supporting identities."""
    report = AxiomReport(task=task, budget=budget)
    _progress(progress_callback, 0.0, "Establishing the mutation pair")
    witness = obtain_witness(angles, Z, D, budget, report, None, witness)
    if witness is None:
        report.notes.append("mutation pair not established; quotient not built")
        return report
    closed = report.add(is_extension_closed(angles, Z, budget))
    if closed.verdict == Verdict.FAIL:
        report.notes.append("Z is not extension closed; quotient not built")
        return report
    _progress(progress_callback, 0.2, "Building the quotient and T")
    _, functor = build_quotient_report(witness, budget, report)
    if functor is None or functor.shift() is None:
        report.notes.append("T is not an equivalence on the quotient; axioms not checked")
        return report
    phi = PhiAngleClass(functor, angles)

    def suite_progress(fraction: float, message: str) -> None:
        _progress(progress_callback, 0.3 + 0.5 * fraction, f"Z/D: {message}")

    try:
        report.extend(run_axiom_suite(phi, budget, suite_progress), prefix=QUOTIENT_PREFIX)
        _progress(progress_callback, 0.8, "Checking standard angle identities")
        standards = sample_standard_angles(phi, budget)
        report.add(check_standard_independence(phi, standards))
        report.add(check_rotation_identity(phi, standards))
        report.add(check_compatibility(phi, standards, budget))
        report.extend(check_octahedral_identities(phi, standards, budget))
    except CorruptWitnessError as error:
        report.add(AxiomResult(name="fixed_angles_completion")).fail(error.witness, str(error))
    report.notes.append("membership in Φ is a bounded search up to isomorphism")
    failed = [r.name for r in report.results if r.verdict == Verdict.FAIL]
    if failed:
        logger.warning("quotient verification failed on %s", ", ".join(failed))
    _progress(progress_callback, 1.0, "Quotient verification finished")
    return report


def verify_frobenius_quotient(
    angles: AngleClass,
    Z: Subcategory,
    budget: Budget,
    reading: str = EReading.EXACT,
    progress_callback: Optional[ProgressCallback] = None,
) -> AxiomReport:
    """For a Frobenius subcategory Z with injectives I, verify Z/[I]."""
    report = AxiomReport(task=Task.VERIFY_FROBENIUS, budget=budget)
    _progress(progress_callback, 0.0, "Checking Z as an angulated subcategory")
    report.extend(check_angulated_subcategory(angles, Z, budget), prefix="Z:")
    if report.verdict == Verdict.FAIL:
        report.notes.append("Z is not an angulated subcategory; Frobenius data not computed")
        return report
    _progress(progress_callback, 0.3, "Computing Frobenius data")
    data, frobenius = check_frobenius(angles, Z, budget, reading)
    report.extend(frobenius.results)
    report.choices.update(frobenius.choices)
    if frobenius.verdict != Verdict.PASS:
        report.notes.append("Z is not Frobenius within budget; quotient not built")
        return report

    def inner_progress(fraction: float, message: str) -> None:
        _progress(progress_callback, 0.4 + 0.6 * fraction, message)

    inner = verify_quotient_angulation(angles, Z, data.I, budget, inner_progress, task=Task.VERIFY_FROBENIUS)
    report.extend(inner.results)
    report.choices.update(inner.choices)
    report.notes.extend(inner.notes)
    return report
