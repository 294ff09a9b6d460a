"""
Canonical serialization of category files.

The output contains no comments or `rel` lines and lists declarations in
a fixed order, so parsing and serializing again reproduces it exactly.
"""

import itertools
from typing import Dict, List, Optional, Sequence

import numpy as np

from ..angles import AngleClass, AngulatedStructure, ListedAngleClass, NSequence, SplitAngleClass, WrapExactClass
from ..category import ObjectExpr, PresentedCategory, Subcategory, SuspensionFunctor
from ..config import AngleOracle
from ..errors import PresentationError
from .parser import CategoryFile


def _combination(coords: Sequence[int], names: Sequence[str]) -> str:
    terms = []
    for value, name in zip(coords, names):
        value = int(value)
        if value:
            terms.append(name if value == 1 else f"{value}*{name}")
    return " + ".join(terms) if terms else "0"


def _object(obj: ObjectExpr, names: Sequence[str]) -> str:
    return "+".join(obj.names(names)) if not obj.is_zero else "0"


def format_sequence(seq: NSequence) -> str:
    """`obj|obj|... : coords ; ...` as used by seq, fixed and cofixed lines."""
    names = seq.structure.category.generator_names
    objects = "|".join(_object(obj, names) for obj in seq.objects)
    maps = " ; ".join(" ".join(str(int(v)) for v in f.coords) or "-" for f in seq.maps)
    return f"{objects} : {maps}"


def _check_names(category: PresentedCategory) -> None:
    seen = set()
    for names in category.basis_names.values():
        for name in names:
            if name in seen:
                raise PresentationError(f"basis name {name} is not unique; the file format needs unique names")
            seen.add(name)


def _oracle(angles: AngleClass) -> str:
    if isinstance(angles, ListedAngleClass):
        return AngleOracle.LIST
    if isinstance(angles, SplitAngleClass):
        return AngleOracle.SPLIT
    if isinstance(angles, WrapExactClass):
        return AngleOracle.WRAP_EXACT
    raise PresentationError(f"angle class '{angles.name}' has no file representation")


def serialize_structure(
    structure: AngulatedStructure,
    angles: AngleClass,
    Z: Optional[Subcategory] = None,
    D: Optional[Subcategory] = None,
    fixed: Optional[Dict[int, NSequence]] = None,
    cofixed: Optional[Dict[int, NSequence]] = None,
    name: Optional[str] = None,
) -> str:
    category = structure.category
    sigma = structure.shift.forward
    if not isinstance(sigma, SuspensionFunctor):
        raise PresentationError("only automorphism shifts can be written to a category file")
    _check_names(category)
    gens = list(category.generators())
    names = category.generator_names
    name = category.name if name is None else name

    lines: List[str] = [f"field p={category.p}", f"n={structure.n}"]
    if name:
        lines.append(f"name {name}")
    lines.extend(f"gen {g}" for g in names)
    for g, h in itertools.product(gens, repeat=2):
        basis = category.basis_names[(g, h)]
        if basis:
            lines.append(f"hom {names[g]} {names[h]} dim={len(basis)} basis={','.join(basis)}")
    for g, h, k in itertools.product(gens, repeat=3):
        tensor = category.comp_tensor(g, h, k)
        for b, a in itertools.product(range(tensor.shape[0]), range(tensor.shape[1])):
            values = tensor[b, a]
            if np.any(values):
                lines.append(
                    f"comp {category.basis_label(h, k, b)} {category.basis_label(g, h, a)} = "
                    f"{_combination(values, category.basis_names[(g, k)])}"
                )
    for g in gens:
        if category.hom_dim(g, g):
            lines.append(f"id {names[g]} = {_combination(category.identities[g], category.basis_names[(g, g)])}")
    for g in gens:
        lines.append(f"sigma gen {names[g]} -> {names[sigma.permutation[g]]}")
    for g, h in itertools.product(gens, repeat=2):
        matrix = sigma.hom_maps[(g, h)]
        target = category.basis_names[(sigma.permutation[g], sigma.permutation[h])]
        for a, label in enumerate(category.basis_names[(g, h)]):
            lines.append(f"sigma hom {label} -> {_combination(matrix.column(a), target)}")

    lines.append(f"angles {_oracle(angles)}")
    Z = Subcategory.of(gens) if Z is None else Z
    D = Subcategory() if D is None else D
    lines.append(f"sub Z = {', '.join(Z.names(names))}".rstrip())
    lines.append(f"sub D = {', '.join(D.names(names))}".rstrip())
    if isinstance(angles, ListedAngleClass):
        lines.extend(f"seq {format_sequence(member)}" for member in angles.members)
    for label, table in (("fixed", fixed or {}), ("cofixed", cofixed or {})):
        for g in sorted(table):
            lines.append(f"{label} {names[g]} : {format_sequence(table[g])}")
    return "\n".join(lines) + "\n"


def serialize(document: CategoryFile) -> str:
    return serialize_structure(
        document.structure,
        document.angles,
        document.Z,
        document.D,
        document.fixed,
        document.cofixed,
        document.name,
    )


def write_category_file(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(text)
