"""
The quotient Z/[D], the functor T and the standard angles on it.
"""

from .category import QuotientCategory, build_quotient, check_ideal_property, ideal_subspace
from .functor import (
    QuotientFunctor,
    build_T,
    check_completion_independence,
    check_T_functoriality,
    compare_with_suspension,
    completion_space,
    find_quasi_inverse,
    induced_functor,
)
from .standard import PhiAngleClass, StandardAngle, d_monic_extension, sample_standard_angles, standard_angle
from .verification import (
    build_quotient_report,
    check_compatibility,
    check_octahedral_identities,
    check_rotation_identity,
    check_standard_independence,
    obtain_witness,
    verify_frobenius_quotient,
    verify_quotient_angulation,
)

__all__ = [
    'PhiAngleClass',
    'QuotientCategory',
    'QuotientFunctor',
    'StandardAngle',
    'build_T',
    'build_quotient',
    'build_quotient_report',
    'check_T_functoriality',
    'check_compatibility',
    'check_completion_independence',
    'check_ideal_property',
    'check_octahedral_identities',
    'check_rotation_identity',
    'check_standard_independence',
    'compare_with_suspension',
    'completion_space',
    'd_monic_extension',
    'find_quasi_inverse',
    'ideal_subspace',
    'induced_functor',
    'obtain_witness',
    'sample_standard_angles',
    'standard_angle',
    'verify_frobenius_quotient',
    'verify_quotient_angulation',
]
