"""
Additive endofunctors, natural transformations and the shift data of a structure.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import Config
from ..errors import PresentationError
from ..ffmat import FpMatrix, inverse, kernel_basis, LinearSolution, search_points
from ..models import SearchOutcome
from .objects import ObjectExpr
from .presented import HomLayout, Morphism, PresentedCategory

logger = logging.getLogger(__name__)


def _embedding(small: HomLayout, big: HomLayout, row_offset: int, col_offset: int) -> np.ndarray:
    """Positions in big of every coordinate of small, blocks shifted by the offsets."""
    positions = np.zeros(small.size, dtype=np.int64)
    for (j, i), (start, dim) in small.offsets.items():
        if dim:
            target = big.slice(row_offset + j, col_offset + i)
            positions[start:start + dim] = np.arange(target.start, target.stop)
    return positions


class EndoFunctor:
    """An additive endofunctor given on generators and generator Hom spaces.

    object_map[g] is the image object of generator g; hom_maps[(g, h)] is
    the matrix of Hom(g, h) -> Hom(F g, F h) in layout coordinates.
    """

    def __init__(
        self,
        category: PresentedCategory,
        object_map: Sequence[ObjectExpr],
        hom_maps: Dict[Tuple[int, int], FpMatrix],
        name: str = "F",
    ):
        self.category = category
        self.name = name
        self.object_map: Tuple[ObjectExpr, ...] = tuple(object_map)
        if len(self.object_map) != category.generator_count:
            raise PresentationError(f"functor {name} needs one image per generator")
        self.hom_maps: Dict[Tuple[int, int], FpMatrix] = {}
        for g in category.generators():
            for h in category.generators():
                rows = category.layout(self.object_map[g], self.object_map[h]).size
                matrix = hom_maps.get((g, h))
                if matrix is None:
                    matrix = FpMatrix.zeros(category.p, rows, category.hom_dim(g, h))
                if matrix.shape != (rows, category.hom_dim(g, h)):
                    raise PresentationError(
                        f"functor {name}: Hom map for ({category.generator_names[g]}, "
                        f"{category.generator_names[h]}) has shape {matrix.shape}, expected "
                        f"{(rows, category.hom_dim(g, h))}"
                    )
                self.hom_maps[(g, h)] = matrix
        self._linear: Dict[Tuple[ObjectExpr, ObjectExpr], FpMatrix] = {}

    @classmethod
    def identity(cls, category: PresentedCategory) -> "EndoFunctor":
        object_map = [ObjectExpr.of(g) for g in category.generators()]
        hom_maps = {
            (g, h): FpMatrix.identity(category.p, category.hom_dim(g, h))
            for g in category.generators() for h in category.generators()
        }
        return cls(category, object_map, hom_maps, name="id")

    def apply_object(self, obj: ObjectExpr) -> ObjectExpr:
        summands: Tuple[int, ...] = ()
        for g in obj.summands:
            summands += self.object_map[g].summands
        return ObjectExpr(summands)

    def linear_matrix(self, domain: ObjectExpr, codomain: ObjectExpr) -> FpMatrix:
        """Matrix of Hom(X, Y) -> Hom(F X, F Y)."""
        key = (domain, codomain)
        cached = self._linear.get(key)
        if cached is not None:
            return cached
        cat = self.category
        source = cat.layout(domain, codomain)
        image = cat.layout(self.apply_object(domain), self.apply_object(codomain))
        matrix = np.zeros((image.size, source.size), dtype=np.int64)
        domain_offsets = np.cumsum([0] + [self.object_map[g].size for g in domain.summands])
        codomain_offsets = np.cumsum([0] + [self.object_map[h].size for h in codomain.summands])
        for (j, i), (start, dim) in source.offsets.items():
            if not dim:
                continue
            g, h = domain.summands[i], codomain.summands[j]
            small = cat.layout(self.object_map[g], self.object_map[h])
            rows = _embedding(small, image, int(codomain_offsets[j]), int(domain_offsets[i]))
            matrix[np.ix_(rows, np.arange(start, start + dim))] = self.hom_maps[(g, h)].data
        result = FpMatrix(cat.p, matrix)
        self._linear[key] = result
        return result

    def apply(self, f: Morphism) -> Morphism:
        matrix = self.linear_matrix(f.domain, f.codomain)
        return Morphism(
            self.category,
            self.apply_object(f.domain),
            self.apply_object(f.codomain),
            matrix @ f.coords,
        )

    def compose(self, inner: "EndoFunctor") -> "EndoFunctor":
        """self o inner."""
        cat = self.category
        object_map = [self.apply_object(inner.object_map[g]) for g in cat.generators()]
        hom_maps = {}
        for g in cat.generators():
            for h in cat.generators():
                outer = self.linear_matrix(inner.object_map[g], inner.object_map[h])
                hom_maps[(g, h)] = outer @ inner.hom_maps[(g, h)]
        return EndoFunctor(cat, object_map, hom_maps, name=f"{self.name}{inner.name}")

    def validate(self) -> "EndoFunctor":
        """Functoriality on all basis pairs and preservation of identities."""
        cat = self.category
        names = cat.generator_names
        for g in cat.generators():
            ident = cat.identity(ObjectExpr.of(g))
            if self.apply(ident) != cat.identity(self.object_map[g]):
                raise PresentationError(f"{self.name} functoriality fails: {self.name}(id_{names[g]}) is not an identity")
        for g, h, k in itertools.product(cat.generators(), repeat=3):
            for a in range(cat.hom_dim(g, h)):
                fa = cat.generator_morphism(g, h, np.eye(cat.hom_dim(g, h), dtype=np.int64)[a])
                image_a = self.apply(fa)
                for b in range(cat.hom_dim(h, k)):
                    fb = cat.generator_morphism(h, k, np.eye(cat.hom_dim(h, k), dtype=np.int64)[b])
                    if self.apply(fb @ fa) != self.apply(fb) @ image_a:
                        raise PresentationError(
                            f"{self.name} functoriality fails for pair "
                            f"({cat.basis_label(h, k, b)}, {cat.basis_label(g, h, a)})"
                        )
        return self


class SuspensionFunctor(EndoFunctor):
    """An automorphism permuting generators with invertible Hom maps."""

    def __init__(
        self,
        category: PresentedCategory,
        permutation: Sequence[int],
        hom_maps: Dict[Tuple[int, int], FpMatrix],
        name: str = "Σ",
    ):
        if sorted(permutation) != list(category.generators()):
            raise PresentationError(f"{name} generator map is not a permutation")
        self.permutation: Tuple[int, ...] = tuple(permutation)
        super().__init__(category, [ObjectExpr.of(s) for s in permutation], hom_maps, name=name)
        for (g, h), matrix in self.hom_maps.items():
            if matrix.rows != matrix.cols or (matrix.rows and inverse(matrix) is None):
                raise PresentationError(
                    f"{name} is not invertible on Hom({category.generator_names[g]}, {category.generator_names[h]})"
                )
        self._inverse: Optional["SuspensionFunctor"] = None

    def inverse(self) -> "SuspensionFunctor":
        if self._inverse is None:
            cat = self.category
            back = [0] * cat.generator_count
            for g, s in enumerate(self.permutation):
                back[s] = g
            hom_maps = {}
            for (g, h), matrix in self.hom_maps.items():
                hom_maps[(self.permutation[g], self.permutation[h])] = (
                    inverse(matrix) if matrix.rows else FpMatrix.zeros(cat.p, 0, 0)
                )
            inv = SuspensionFunctor(cat, back, hom_maps, name=f"{self.name}⁻¹")
            inv._inverse = self
            self._inverse = inv
        return self._inverse

    @classmethod
    def identity_on(cls, category: PresentedCategory) -> "SuspensionFunctor":
        hom_maps = {
            (g, h): FpMatrix.identity(category.p, category.hom_dim(g, h))
            for g in category.generators() for h in category.generators()
        }
        return cls(category, list(category.generators()), hom_maps)


def apply_suspension(sigma: SuspensionFunctor, f: Morphism, power: int) -> Morphism:
    """Σ^power(f); negative powers use the inverse data."""
    functor = sigma if power >= 0 else sigma.inverse()
    for _ in range(abs(power)):
        f = functor.apply(f)
    return f


@dataclass
class NaturalTransformation:
    """Components source(g) -> target(g) on generators, extended blockwise."""
    source: EndoFunctor
    target: EndoFunctor
    components: Dict[int, Morphism]

    def component(self, obj: ObjectExpr) -> Morphism:
        cat = self.source.category
        parts_in = [self.source.object_map[g] for g in obj.summands]
        parts_out = [self.target.object_map[g] for g in obj.summands]
        blocks = {(i, i): self.components[g] for i, g in enumerate(obj.summands)}
        return cat.block_matrix(parts_in, parts_out, blocks)

    def to_payload(self) -> Dict[str, dict]:
        names = self.source.category.generator_names
        return {names[g]: m.to_payload() for g, m in sorted(self.components.items())}

    @classmethod
    def identity(cls, functor: EndoFunctor) -> "NaturalTransformation":
        cat = functor.category
        return cls(functor, functor, {g: cat.identity(functor.object_map[g]) for g in cat.generators()})


def find_natural_isomorphism(
    source: EndoFunctor,
    target: EndoFunctor,
    limit: int = Config.ISO_SEARCH_LIMIT,
    seed: int = 0,
) -> SearchOutcome:
    """Search for a natural isomorphism source => target.

    Naturality on basis morphisms is a homogeneous linear system in the
    component coordinates; its solution space is searched for a point
    whose components are all invertible.
    """
    cat = source.category
    gens = list(cat.generators())
    offsets = {}
    position = 0
    for g in gens:
        size = cat.layout(source.object_map[g], target.object_map[g]).size
        offsets[g] = (position, size)
        position += size
    row_blocks: List[np.ndarray] = []
    for g in gens:
        for h in gens:
            width = cat.hom_dim(g, h)
            for a in range(width):
                basis = cat.generator_morphism(g, h, np.eye(width, dtype=np.int64)[a])
                F_a, G_a = source.apply(basis), target.apply(basis)
                rows = cat.layout(source.object_map[g], target.object_map[h]).size
                if rows == 0:
                    continue
                block = np.zeros((rows, position), dtype=np.int64)
                start_g, size_g = offsets[g]
                start_h, size_h = offsets[h]
                if size_g:
                    block[:, start_g:start_g + size_g] += cat.post_matrix(G_a, source.object_map[g]).data
                if size_h:
                    block[:, start_h:start_h + size_h] -= cat.pre_matrix(F_a, target.object_map[h]).data
                row_blocks.append(block)
    system = FpMatrix(cat.p, np.vstack(row_blocks)) if row_blocks else FpMatrix.zeros(cat.p, 0, position)
    solution = LinearSolution(cat.p, np.zeros(position, dtype=np.int64), kernel_basis(system))

    def unpack(vector: np.ndarray) -> Dict[int, Morphism]:
        return {
            g: cat.morphism(source.object_map[g], target.object_map[g], vector[start:start + size])
            for g, (start, size) in offsets.items()
        }

    def accept(vector: np.ndarray) -> bool:
        return all(cat.is_isomorphism(m) for m in unpack(vector).values())

    preferred = []
    matches = [cat.matching_map(source.object_map[g], target.object_map[g]) for g in gens]
    if all(m is not None for m in matches):
        preferred.append(np.concatenate([m.coords for m in matches]) if matches else np.zeros(0, dtype=np.int64))
    if solution.kernel:
        preferred.append(np.sum(solution.kernel, axis=0) % cat.p)
    preferred = [v for v in preferred if not (system @ v).any()]
    point, exhausted, spent = search_points(solution, accept, limit, seed, preferred)
    if point is None:
        logger.debug("no natural isomorphism %s => %s within %d candidates", source.name, target.name, limit)
        return SearchOutcome(None, exhausted, spent)
    return SearchOutcome(NaturalTransformation(source, target, unpack(point)), False, spent)


@dataclass
class Shift:
    """The suspension-like autoequivalence of a structure.

    backward is a quasi-inverse; unit has components backward(forward g) -> g
    and counit has components forward(backward g) -> g, both invertible.
    For an automorphism backward is the inverse and both are identities.
    """
    forward: EndoFunctor
    backward: EndoFunctor
    unit: NaturalTransformation
    counit: NaturalTransformation
    strict: bool = False

    @classmethod
    def from_automorphism(cls, sigma: SuspensionFunctor) -> "Shift":
        back = sigma.inverse()
        round_trip = back.compose(sigma)
        other_trip = sigma.compose(back)
        cat = sigma.category
        unit = NaturalTransformation(round_trip, EndoFunctor.identity(cat), {g: cat.identity(ObjectExpr.of(g)) for g in cat.generators()})
        counit = NaturalTransformation(other_trip, EndoFunctor.identity(cat), {g: cat.identity(ObjectExpr.of(g)) for g in cat.generators()})
        return cls(sigma, back, unit, counit, strict=True)

    @property
    def category(self) -> PresentedCategory:
        return self.forward.category

    def apply(self, f: Morphism, power: int = 1) -> Morphism:
        functor = self.forward if power >= 0 else self.backward
        for _ in range(abs(power)):
            f = functor.apply(f)
        return f

    def apply_object(self, obj: ObjectExpr, power: int = 1) -> ObjectExpr:
        functor = self.forward if power >= 0 else self.backward
        for _ in range(abs(power)):
            obj = functor.apply_object(obj)
        return obj
