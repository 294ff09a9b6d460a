"""
Finitely presented additive categories over F_p.
"""

from .functors import (
    EndoFunctor,
    NaturalTransformation,
    Shift,
    SuspensionFunctor,
    apply_suspension,
    find_natural_isomorphism,
)
from .objects import ZERO, ObjectExpr, Subcategory, objects_up_to
from .opposite import op_morphism, opposite_category, opposite_functor, opposite_shift
from .presented import HomLayout, Morphism, PresentedCategory

__all__ = [
    'EndoFunctor',
    'HomLayout',
    'Morphism',
    'NaturalTransformation',
    'ObjectExpr',
    'PresentedCategory',
    'Shift',
    'Subcategory',
    'SuspensionFunctor',
    'ZERO',
    'apply_suspension',
    'find_natural_isomorphism',
    'objects_up_to',
    'op_morphism',
    'opposite_category',
    'opposite_functor',
    'opposite_shift',
]
