"""
n-Σ-sequences, angle classes and the axiom checkers.
"""

from .axioms import (
    check_hom_exact_screen,
    check_N1,
    check_N2,
    check_N3,
    check_N4,
    check_N4_prime,
    differential_n4,
    run_axiom_suite,
    sample_members,
)
from .classes import AngleClass, ListedAngleClass, RestrictedAngleClass, SplitAngleClass, WrapExactClass
from .exactness import CONTRAVARIANT, COVARIANT, check_hom_exact, is_hom_exact
from .octahedron import OctahedralInstance, OctahedronData, assemble_sequence, search_octahedron
from .opposite import OppositeAngleClass, build_opposite, from_opposite, to_opposite
from .sequences import (
    NSequence,
    SequenceMorphism,
    direct_sum,
    identity_morphism,
    mapping_cone,
    rotate_left,
    rotate_right,
    trivial_angle,
    zero_morphism,
)
from .solving import (
    LinearSystemBuilder,
    complete_morphism,
    sequence_isomorphism,
    solve_sequence_morphism,
)
from .structure import AngulatedStructure

__all__ = [
    'AngleClass',
    'AngulatedStructure',
    'CONTRAVARIANT',
    'COVARIANT',
    'LinearSystemBuilder',
    'ListedAngleClass',
    'NSequence',
    'OctahedralInstance',
    'OctahedronData',
    'OppositeAngleClass',
    'RestrictedAngleClass',
    'SequenceMorphism',
    'SplitAngleClass',
    'WrapExactClass',
    'assemble_sequence',
    'build_opposite',
    'check_N1',
    'check_N2',
    'check_N3',
    'check_N4',
    'check_N4_prime',
    'check_hom_exact',
    'check_hom_exact_screen',
    'complete_morphism',
    'differential_n4',
    'direct_sum',
    'from_opposite',
    'identity_morphism',
    'is_hom_exact',
    'mapping_cone',
    'rotate_left',
    'rotate_right',
    'run_axiom_suite',
    'sample_members',
    'search_octahedron',
    'sequence_isomorphism',
    'solve_sequence_morphism',
    'to_opposite',
    'trivial_angle',
    'zero_morphism',
]
