"""
n-Σ-sequences, their morphisms, rotations, sums and mapping cones.
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from ..category import ZERO, Morphism, ObjectExpr
from ..errors import PreconditionError
from .structure import AngulatedStructure


@dataclass(frozen=True)
class NSequence:
    """X₁ -> X₂ -> ... -> X_n -> ΣX₁."""
    structure: AngulatedStructure
    objects: Tuple[ObjectExpr, ...]
    maps: Tuple[Morphism, ...]

    def __post_init__(self):
        n = self.structure.n
        if len(self.objects) != n or len(self.maps) != n:
            raise PreconditionError(f"an n-sequence needs {n} objects and {n} maps")
        for i, f in enumerate(self.maps):
            target = self.objects[i + 1] if i + 1 < n else self.structure.suspend_object(self.objects[0])
            if f.domain != self.objects[i] or f.codomain != target:
                names = self.structure.category.generator_names
                raise PreconditionError(
                    f"map {i + 1} goes {f.domain.names(names)} -> {f.codomain.names(names)}, "
                    f"expected {self.objects[i].names(names)} -> {target.names(names)}"
                )

    @classmethod
    def of(cls, structure: AngulatedStructure, maps: Sequence[Morphism]) -> "NSequence":
        return cls(structure, tuple(f.domain for f in maps), tuple(maps))

    @property
    def n(self) -> int:
        return self.structure.n

    @property
    def first(self) -> Morphism:
        return self.maps[0]

    @property
    def last(self) -> Morphism:
        return self.maps[-1]

    def is_complex(self) -> bool:
        """Every consecutive composite vanishes, including Σf₁ o f_n."""
        for a, b in zip(self.maps, self.maps[1:]):
            if not (b @ a).is_zero():
                return False
        return (self.structure.suspend(self.maps[0]) @ self.maps[-1]).is_zero()

    def key(self) -> Tuple:
        return (self.objects, tuple(m.coords.tobytes() for m in self.maps))

    def multiset(self) -> Tuple[ObjectExpr, ...]:
        return tuple(obj.canonical() for obj in self.objects)

    def max_size(self) -> int:
        return max(obj.size for obj in self.objects)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NSequence):
            return NotImplemented
        return self.objects == other.objects and all(a == b for a, b in zip(self.maps, other.maps))

    def __hash__(self) -> int:
        return hash(self.key())

    def to_payload(self) -> Dict[str, Any]:
        names = self.structure.category.generator_names
        return {
            'objects': [obj.names(names) for obj in self.objects],
            'maps': [m.to_payload() for m in self.maps],
        }


@dataclass(frozen=True)
class SequenceMorphism:
    """Components φ₁..φ_n between two n-sequences."""
    source: NSequence
    target: NSequence
    components: Tuple[Morphism, ...]

    def failing_square(self) -> int:
        """Index of the first non-commuting square, or -1."""
        f, g, phi = self.source.maps, self.target.maps, self.components
        n = self.source.n
        for i in range(n - 1):
            if g[i] @ phi[i] != phi[i + 1] @ f[i]:
                return i
        if g[n - 1] @ phi[n - 1] != self.source.structure.suspend(phi[0]) @ f[n - 1]:
            return n - 1
        return -1

    def is_valid(self) -> bool:
        return self.failing_square() < 0

    def is_isomorphism(self) -> bool:
        cat = self.source.structure.category
        return all(cat.is_isomorphism(c) for c in self.components)

    def to_payload(self) -> Dict[str, Any]:
        return {
            'source': self.source.to_payload(),
            'target': self.target.to_payload(),
            'components': [c.to_payload() for c in self.components],
        }


def rotate_left(seq: NSequence) -> NSequence:
    """X₂ -> ... -> X_n -> ΣX₁ -> ΣX₂ with last map (-1)^n Σf₁."""
    structure = seq.structure
    wrapped = structure.suspend(seq.maps[0]).scale(structure.sign)
    return NSequence.of(structure, seq.maps[1:] + (wrapped,))


def rotate_right(seq: NSequence) -> NSequence:
    """Σ'X_n -> X₁ -> ... -> X_{n-1} -> ΣΣ'X_n, inverse to rotate_left.

    The first map is (-1)^n η o Σ'(f_n); the new last map is ε^{-1} o f_{n-1}.
    """
    structure = seq.structure
    cat = structure.category
    X1, Xn = seq.objects[0], seq.objects[-1]
    first = (structure.unit(X1) @ structure.suspend(seq.maps[-1], -1)).scale(structure.sign)
    counit_inverse = cat.inverse(structure.counit(Xn))
    if counit_inverse is None:
        raise PreconditionError("shift counit is not invertible")
    last = counit_inverse @ seq.maps[-2]
    return NSequence.of(structure, (first,) + seq.maps[:-2] + (last,))


def trivial_angle(structure: AngulatedStructure, X: ObjectExpr) -> NSequence:
    """X -> X -> 0 -> ... -> 0 -> ΣX."""
    cat = structure.category
    maps = [cat.identity(X), cat.zero(X, ZERO)]
    maps += [cat.zero(ZERO, ZERO) for _ in range(structure.n - 3)]
    maps.append(cat.zero(ZERO, structure.suspend_object(X)))
    return NSequence.of(structure, maps)


def direct_sum(a: NSequence, b: NSequence) -> NSequence:
    cat = a.structure.category
    return NSequence.of(a.structure, [cat.direct_sum(f, g) for f, g in zip(a.maps, b.maps)])


def direct_sum_all(parts: Sequence[NSequence]) -> NSequence:
    result = parts[0]
    for part in parts[1:]:
        result = direct_sum(result, part)
    return result


def mapping_cone(phi: SequenceMorphism) -> NSequence:
    """Cone X₂⊕Y₁ -> X₃⊕Y₂ -> ... -> ΣX₁⊕Y_n -> Σ(X₂⊕Y₁).

    Each map has blocks [[-f_{i+1}, 0], [φ_{i+1}, g_i]]; the last one uses
    Σf₁ and Σφ₁.
    """
    if not phi.is_valid():
        raise PreconditionError(f"square {phi.failing_square() + 1} of the sequence morphism does not commute")
    structure = phi.source.structure
    cat = structure.category
    f, g, c = phi.source.maps, phi.target.maps, phi.components
    n = structure.n
    maps = []
    for i in range(n):
        if i < n - 1:
            top, middle = f[i + 1], c[i + 1]
        else:
            top, middle = structure.suspend(f[0]), structure.suspend(c[0])
        sources = [top.domain, g[i].domain]
        targets = [top.codomain, g[i].codomain]
        maps.append(cat.block_matrix(sources, targets, {(0, 0): -top, (1, 0): middle, (1, 1): g[i]}))
    return NSequence.of(structure, maps)


def identity_morphism(seq: NSequence) -> SequenceMorphism:
    cat = seq.structure.category
    return SequenceMorphism(seq, seq, tuple(cat.identity(obj) for obj in seq.objects))


def zero_morphism(source: NSequence, target: NSequence) -> SequenceMorphism:
    cat = source.structure.category
    return SequenceMorphism(source, target, tuple(cat.zero(a, b) for a, b in zip(source.objects, target.objects)))
