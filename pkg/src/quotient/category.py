"""
The quotient Z/[D] as a presented category.

Generators are those of Z. The Hom basis of the quotient is the
lexicographically first set of ambient basis vectors completing the ideal
[D](g, h); composition constants and identities are projected along the
ideal. Generators of D, and any generator whose identity factors
through D, become zero objects.
"""

import itertools
import logging
from typing import Dict, List, Tuple

import numpy as np

from ..category import Morphism, ObjectExpr, PresentedCategory, Subcategory
from ..errors import InputError, PreconditionError
from ..ffmat import FpMatrix, in_span, inverse, lexicographic_complement, span_basis
from ..models import AxiomResult

logger = logging.getLogger(__name__)


def ideal_subspace(category: PresentedCategory, g: int, h: int, D: Subcategory) -> List[np.ndarray]:
    """Basis of [D](g, h): span of all composites g -> G -> h with G in D."""
    dim = category.hom_dim(g, h)
    if dim == 0:
        return []
    vectors = []
    for G in D.sorted():
        tensor = category.comp_tensor(g, G, h)
        for b, a in itertools.product(range(tensor.shape[0]), range(tensor.shape[1])):
            vectors.append(tensor[b, a])
    return span_basis(category.p, vectors, dim)


def _projection(p: int, ideal: List[np.ndarray], kept: List[int], dim: int) -> FpMatrix:
    """Coordinates along the kept basis vectors in the splitting ideal ⊕ span(kept)."""
    if dim == 0:
        return FpMatrix.zeros(p, 0, 0)
    columns = list(ideal)
    for k in kept:
        e = np.zeros(dim, dtype=np.int64)
        e[k] = 1
        columns.append(e)
    change = inverse(FpMatrix.from_columns(p, columns, dim))
    return FpMatrix(p, change.data[len(ideal):])


class QuotientCategory(PresentedCategory):
    """Z/[D] with maps to and from the ambient category."""

    def __init__(self, ambient: PresentedCategory, Z: Subcategory, D: Subcategory):
        if not D.issubset(Z):
            raise InputError("D must be a subset of Z")
        p = ambient.p
        self.ambient = ambient
        self.Z = Z
        self.D = D
        self.ambient_index: Tuple[int, ...] = tuple(Z.sorted())
        self._local_index = {g: q for q, g in enumerate(self.ambient_index)}
        self.ideals: Dict[Tuple[int, int], List[np.ndarray]] = {}
        self.kept: Dict[Tuple[int, int], List[int]] = {}
        self.projections: Dict[Tuple[int, int], FpMatrix] = {}
        basis_names = {}
        pairs = list(itertools.product(range(len(self.ambient_index)), repeat=2))
        for q, r in pairs:
            g, h = self.ambient_index[q], self.ambient_index[r]
            dim = ambient.hom_dim(g, h)
            ideal = ideal_subspace(ambient, g, h, D)
            kept = lexicographic_complement(p, ideal, dim)
            self.ideals[(q, r)] = ideal
            self.kept[(q, r)] = kept
            self.projections[(q, r)] = _projection(p, ideal, kept, dim)
            basis_names[(q, r)] = [ambient.basis_label(g, h, k) for k in kept]
        composition = {}
        for q, r, s in itertools.product(range(len(self.ambient_index)), repeat=3):
            first, second, total = self.kept[(q, r)], self.kept[(r, s)], self.kept[(q, s)]
            if not (first and second and total):
                continue
            g, h, k = (self.ambient_index[i] for i in (q, r, s))
            ambient_tensor = ambient.comp_tensor(g, h, k)
            tensor = np.zeros((len(second), len(first), len(total)), dtype=np.int64)
            for b, a in itertools.product(range(len(second)), range(len(first))):
                tensor[b, a] = self.projections[(q, s)] @ ambient_tensor[second[b], first[a]]
            composition[(q, r, s)] = tensor
        identities = {
            q: self.projections[(q, q)] @ ambient.identities[g] for q, g in enumerate(self.ambient_index)
        }
        names = [ambient.generator_names[g] for g in self.ambient_index]
        label = ",".join(D.names(ambient.generator_names))
        super().__init__(p, names, basis_names, composition, identities, name=f"{ambient.name}/[{label}]")
        logger.info("built quotient %s with %d zero generators", self.name,
                    sum(1 for q in self.generators() if self.is_zero_generator(q)))

    # -- objects -----------------------------------------------------------

    def from_ambient_object(self, obj: ObjectExpr) -> ObjectExpr:
        try:
            return ObjectExpr(tuple(self._local_index[g] for g in obj.summands))
        except KeyError:
            names = obj.names(self.ambient.generator_names)
            raise PreconditionError(f"object {names} does not lie in Z") from None

    def to_ambient_object(self, obj: ObjectExpr) -> ObjectExpr:
        return ObjectExpr(tuple(self.ambient_index[q] for q in obj.summands))

    def strip(self, obj: ObjectExpr) -> ObjectExpr:
        """Drop the zero summands."""
        return ObjectExpr(tuple(q for q in obj.summands if not self.is_zero_generator(q)))

    # -- morphisms ---------------------------------------------------------

    def project(self, f: Morphism) -> Morphism:
        """The class of an ambient morphism between objects of Z."""
        domain, codomain = self.from_ambient_object(f.domain), self.from_ambient_object(f.codomain)
        layout = self.layout(domain, codomain)
        ambient_layout = self.ambient.layout(f.domain, f.codomain)
        coords = np.zeros(layout.size, dtype=np.int64)
        for (j, i), (start, dim) in layout.offsets.items():
            if dim:
                block = f.coords[ambient_layout.slice(j, i)]
                coords[start:start + dim] = self.projections[(domain.summands[i], codomain.summands[j])] @ block
        return Morphism(self, domain, codomain, coords)

    def lift(self, f: Morphism) -> Morphism:
        """The representative supported on the kept basis vectors."""
        domain, codomain = self.to_ambient_object(f.domain), self.to_ambient_object(f.codomain)
        ambient_layout = self.ambient.layout(domain, codomain)
        layout = self.layout(f.domain, f.codomain)
        coords = np.zeros(ambient_layout.size, dtype=np.int64)
        for (j, i), (start, dim) in layout.offsets.items():
            if dim:
                target = ambient_layout.slice(j, i)
                kept = self.kept[(f.domain.summands[i], f.codomain.summands[j])]
                block = np.zeros(target.stop - target.start, dtype=np.int64)
                block[kept] = f.coords[start:start + dim]
                coords[target] = block
        return Morphism(self.ambient, domain, codomain, coords)

    def in_ideal(self, f: Morphism) -> bool:
        """f factors through an object of D."""
        return self.project(f).is_zero()

    def transfer(self, f: Morphism, domain: ObjectExpr, codomain: ObjectExpr) -> Morphism:
        """Move f between objects agreeing after strip, keeping the nonzero summand order."""
        if self.strip(domain) != self.strip(f.domain) or self.strip(codomain) != self.strip(f.codomain):
            raise PreconditionError("objects differ by more than zero summands")
        return self.retarget(f, domain, codomain)


def build_quotient(ambient: PresentedCategory, Z: Subcategory, D: Subcategory) -> QuotientCategory:
    return QuotientCategory(ambient, Z, D)


def check_ideal_property(quotient: QuotientCategory) -> AxiomResult:
    """Composites of ideal basis vectors with basis morphisms stay in the ideal."""
    result = AxiomResult(name="ideal_property")
    ambient = quotient.ambient
    p = ambient.p
    gens = list(range(len(quotient.ambient_index)))
    names = ambient.generator_names
    for q, r, s in itertools.product(gens, repeat=3):
        g, h, k = (quotient.ambient_index[i] for i in (q, r, s))
        tensor = ambient.comp_tensor(g, h, k)
        target = quotient.ideals[(q, s)]
        for vector in quotient.ideals[(q, r)]:
            for b in range(ambient.hom_dim(h, k)):
                result.instances += 1
                image = np.einsum('a,ak->k', vector, tensor[b]) % p
                if not in_span(p, target, image):
                    result.fail({'pair': [names[g], names[h], names[k]], 'coords': [int(v) for v in image]},
                                "post-composition leaves the ideal")
                    return result
        for vector in quotient.ideals[(r, s)]:
            for a in range(ambient.hom_dim(g, h)):
                result.instances += 1
                image = np.einsum('b,bk->k', vector, tensor[:, a]) % p
                if not in_span(p, target, image):
                    result.fail({'pair': [names[g], names[h], names[k]], 'coords': [int(v) for v in image]},
                                "pre-composition leaves the ideal")
                    return result
    return result
