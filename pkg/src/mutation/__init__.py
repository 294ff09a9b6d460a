"""
Approximations, mutation pairs and Frobenius data.
"""

from .approximations import (
    find_left_approximation,
    find_right_approximation,
    is_D_epic,
    is_D_monic,
    is_left_approximation,
    is_right_approximation,
    stacked_map,
)
from .frobenius import (
    FrobeniusData,
    check_angulated_subcategory,
    check_frobenius,
    compute_e_injectives,
    e_class,
    is_suspension_stable,
)
from .pairs import (
    MutationPairWitness,
    angle_defects,
    certify_witness,
    is_extension_closed,
    search_condition_one,
    validate_mutation_pair,
)

__all__ = [
    'FrobeniusData',
    'MutationPairWitness',
    'angle_defects',
    'certify_witness',
    'check_angulated_subcategory',
    'check_frobenius',
    'compute_e_injectives',
    'e_class',
    'find_left_approximation',
    'find_right_approximation',
    'is_D_epic',
    'is_D_monic',
    'is_extension_closed',
    'is_left_approximation',
    'is_right_approximation',
    'is_suspension_stable',
    'search_condition_one',
    'stacked_map',
    'validate_mutation_pair',
]
