"""
Objects of the additive closure and generator-subset subcategories.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple


@dataclass(frozen=True)
class ObjectExpr:
    """A formal direct sum of generators, kept in summand order.

    The order matters for block layouts of morphisms; canonical() gives
    the sorted representative of the underlying multiset.
    """
    summands: Tuple[int, ...] = ()

    @classmethod
    def of(cls, *generators: int) -> "ObjectExpr":
        return cls(tuple(generators))

    @property
    def size(self) -> int:
        return len(self.summands)

    @property
    def is_zero(self) -> bool:
        return not self.summands

    def canonical(self) -> "ObjectExpr":
        return ObjectExpr(tuple(sorted(self.summands)))

    def multiset(self) -> Counter:
        return Counter(self.summands)

    def __add__(self, other: "ObjectExpr") -> "ObjectExpr":
        return ObjectExpr(self.summands + other.summands)

    def __iter__(self) -> Iterator[int]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def names(self, generator_names: Sequence[str]) -> List[str]:
        return [generator_names[g] for g in self.summands]


ZERO = ObjectExpr()


def objects_up_to(generator_count: int, cap: int, allowed: Iterable[int] = None) -> List[ObjectExpr]:
    """All canonical objects of total multiplicity at most cap, smallest first."""
    pool = sorted(set(range(generator_count) if allowed is None else allowed))
    found = [ZERO]
    for size in range(1, cap + 1):
        for combo in itertools.combinations_with_replacement(pool, size):
            found.append(ObjectExpr(tuple(combo)))
    return found


@dataclass(frozen=True)
class Subcategory:
    """Full subcategory given by a set of generators.

    Membership of an object means every summand is one of the generators,
    which makes the subcategory closed under sums, summands and isomorphism.
    """
    generators: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, generators: Iterable[int]) -> "Subcategory":
        return cls(frozenset(generators))

    def contains(self, obj: ObjectExpr) -> bool:
        return all(g in self.generators for g in obj.summands)

    def issubset(self, other: "Subcategory") -> bool:
        return self.generators <= other.generators

    def sorted(self) -> List[int]:
        return sorted(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def names(self, generator_names: Sequence[str]) -> List[str]:
        return [generator_names[g] for g in self.sorted()]
