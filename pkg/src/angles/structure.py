"""
An additive category together with its shift and the length n of its angles.
"""

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ..category import Morphism, ObjectExpr, PresentedCategory, Shift


@dataclass
class AngulatedStructure:
    """(C, Σ, n); Σ may be a quasi-invertible shift rather than an automorphism."""
    category: PresentedCategory
    shift: Shift
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")

    @property
    def p(self) -> int:
        return self.category.p

    @property
    def sign(self) -> int:
        """(-1)^n as a residue mod p."""
        return (-1) ** self.n % self.p

    def suspend(self, f: Morphism, power: int = 1) -> Morphism:
        return self.shift.apply(f, power)

    def suspend_object(self, obj: ObjectExpr, power: int = 1) -> ObjectExpr:
        return self.shift.apply_object(obj, power)

    def unit(self, obj: ObjectExpr) -> Morphism:
        """η_X: T'T X -> X."""
        return self.shift.unit.component(obj)

    def counit(self, obj: ObjectExpr) -> Morphism:
        """ε_X: T T' X -> X."""
        return self.shift.counit.component(obj)

    def generator_objects(self) -> Iterator[ObjectExpr]:
        for g in self.category.generators():
            yield ObjectExpr.of(g)

    def objects(self, cap: int, allowed=None):
        return self.category.objects(cap, allowed)

    def random_morphism(self, domain: ObjectExpr, codomain: ObjectExpr, rng: np.random.Generator) -> Morphism:
        return self.category.random_morphism(domain, codomain, rng)
