"""
D-monic and D-epic morphisms and left/right D-approximations.
"""

import logging
from typing import Iterator

import numpy as np

from ..category import ZERO, Morphism, ObjectExpr, PresentedCategory, Subcategory, op_morphism
from ..ffmat import rank
from ..models import Budget, SearchOutcome

logger = logging.getLogger(__name__)


def is_D_monic(f: Morphism, D: Subcategory) -> bool:
    """Hom(Y, G) -> Hom(X, G), g -> g o f, is onto for every generator G of D."""
    cat = f.category
    for g in D.sorted():
        G = ObjectExpr.of(g)
        target_size = cat.layout(f.domain, G).size
        if target_size and rank(cat.pre_matrix(f, G)) != target_size:
            return False
    return True


def is_D_epic(f: Morphism, D: Subcategory) -> bool:
    """f is D-epic exactly when f^op is D-monic in the opposite category."""
    return is_D_monic(op_morphism(f), D)


def is_left_approximation(f: Morphism, D: Subcategory) -> bool:
    return D.contains(f.codomain) and is_D_monic(f, D)


def is_right_approximation(f: Morphism, D: Subcategory) -> bool:
    return D.contains(f.domain) and is_D_epic(f, D)


def approximation_size(category: PresentedCategory, X: ObjectExpr, D: Subcategory) -> int:
    """Number of summands of the stacked map: sum of dim Hom(X, G) over D."""
    return sum(category.layout(X, ObjectExpr.of(g)).size for g in D.sorted())


def stacked_map(category: PresentedCategory, X: ObjectExpr, D: Subcategory) -> Morphism:
    """X -> ⊕_G G^{dim Hom(X, G)} whose components run through a basis of each Hom(X, G)."""
    summands = []
    coords = []
    for g in D.sorted():
        d = category.layout(X, ObjectExpr.of(g)).size
        summands.extend([g] * d)
        coords.append(np.eye(d, dtype=np.int64).reshape(-1))
    target = ObjectExpr(tuple(summands))
    values = np.concatenate(coords) if coords else np.zeros(0, dtype=np.int64)
    return category.morphism(X, target, values)


def _candidates(category: PresentedCategory, X: ObjectExpr, D: Subcategory, size: int) -> Iterator[Morphism]:
    for target in category.objects(size, D.generators):
        if target.size == size:
            yield from category.hom_elements(X, target)


def find_left_approximation(category: PresentedCategory, X: ObjectExpr, D: Subcategory, budget: Budget) -> SearchOutcome:
    """A D-monic map from X into D.

    Candidates are taken in this order: id_X when X lies in D, the zero
    map when Hom(X, D) vanishes, targets of size 1..m-1 in lexicographic
    order, and last the stacked map of size m. The first D-monic
    candidate wins, so for X in D the result is id_X and never the
    stacked X -> X^m. The stacked map is always D-monic, so an
    approximation is always found.
    """
    if D.contains(X):
        return SearchOutcome(category.identity(X), False, 1)
    m = approximation_size(category, X, D)
    if m == 0:
        return SearchOutcome(category.zero(X, ZERO), False, 1)
    spent = 0
    for size in range(1, m):
        for candidate in _candidates(category, X, D, size):
            if spent >= budget.cap_solutions:
                break
            spent += 1
            if is_D_monic(candidate, D):
                return SearchOutcome(candidate, False, spent)
    logger.debug("falling back to the stacked approximation of size %d after %d candidates", m, spent)
    return SearchOutcome(stacked_map(category, X, D), False, spent + 1)


def find_right_approximation(category: PresentedCategory, X: ObjectExpr, D: Subcategory, budget: Budget) -> SearchOutcome:
    """A D-epic map from D onto X, found as a left approximation in C^op."""
    outcome = find_left_approximation(category.opposite(), X, D, budget)
    if not outcome.found:
        return outcome
    return SearchOutcome(op_morphism(outcome.value), outcome.exhausted, outcome.spent)
