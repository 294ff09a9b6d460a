"""
Opposite categories, opposite functors and coordinate transport.
"""

import numpy as np

from ..ffmat import FpMatrix
from .functors import EndoFunctor, NaturalTransformation, Shift, SuspensionFunctor
from .presented import Morphism, PresentedCategory


def opposite_category(category: PresentedCategory) -> PresentedCategory:
    """C^op with Hom_op(g, h) = Hom(h, g) and reversed composition."""
    gens = list(category.generators())
    basis_names = {(g, h): category.basis_names[(h, g)] for g in gens for h in gens}
    composition = {}
    for (g, h, k), tensor in category.composition_table().items():
        composition[(k, h, g)] = np.transpose(tensor, (1, 0, 2))
    identities = {g: category.identities[g] for g in gens}
    name = category.name[:-3] if category.name.endswith("^op") else f"{category.name}^op"
    return PresentedCategory(category.p, category.generator_names, basis_names, composition, identities, name=name)


def op_morphism(f: Morphism) -> Morphism:
    """The same arrow read in the opposite category, blocks transposed."""
    op = f.category.opposite()
    layout = f.category.layout(f.domain, f.codomain)
    op_layout = op.layout(f.codomain, f.domain)
    coords = np.zeros(op_layout.size, dtype=np.int64)
    for (j, i), (start, dim) in layout.offsets.items():
        if dim:
            coords[op_layout.slice(i, j)] = f.coords[start:start + dim]
    return Morphism(op, f.codomain, f.domain, coords)


def opposite_functor(functor: EndoFunctor) -> EndoFunctor:
    """F^op on C^op: same object map, Hom maps transported through op_morphism."""
    cat = functor.category
    op = cat.opposite()
    hom_maps = {}
    for g in cat.generators():
        for h in cat.generators():
            dim = cat.hom_dim(h, g)
            columns = []
            for a in range(dim):
                basis = cat.generator_morphism(h, g, np.eye(dim, dtype=np.int64)[a])
                columns.append(op_morphism(functor.apply(basis)).coords)
            rows = op.layout(functor.object_map[g], functor.object_map[h]).size
            hom_maps[(g, h)] = FpMatrix.from_columns(cat.p, columns, rows)
    if isinstance(functor, SuspensionFunctor):
        return SuspensionFunctor(op, functor.permutation, hom_maps, name=functor.name)
    return EndoFunctor(op, functor.object_map, hom_maps, name=functor.name)


def opposite_shift(shift: Shift) -> Shift:
    """Shift of C^op: forward is the opposite of the old backward functor.

    The new unit is built from the inverted counit and vice versa, since
    arrows reverse.
    """
    cat = shift.category
    forward = opposite_functor(shift.backward)
    backward = opposite_functor(shift.forward)
    identity = EndoFunctor.identity(cat.opposite())

    def transport(nat: NaturalTransformation, source: EndoFunctor) -> NaturalTransformation:
        components = {}
        for g, component in nat.components.items():
            components[g] = op_morphism(cat.inverse(component))
        return NaturalTransformation(source, identity, components)

    unit = transport(shift.counit, backward.compose(forward))
    counit = transport(shift.unit, forward.compose(backward))
    return Shift(forward, backward, unit, counit, strict=shift.strict)

