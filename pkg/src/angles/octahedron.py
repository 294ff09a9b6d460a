"""
Witness search for the higher octahedral axiom.

Given an angle X₁ -> X₂ -> ... -> ΣX₁, a map φ₂: X₂ -> Y₂, an angle
X₁ -g₁-> Y₂ -> ... -> ΣX₁ with g₁ = φ₂f₁ and an angle X₂ -φ₂-> Y₂ -h₂-> Z₃
-> ... -> ΣX₂, look for φ_i: X_i -> Y_i, ψ_j: Y_j -> Z_j, ϕ_k: X_k -> Z_{k-1}
such that (1, φ₂, φ₃, ...) is a morphism of angles, h_nψ_n = Σf₁ g_n, and
the assembled sequence

    X₃ -> X₄⊕Y₃ -> X₅⊕Y₄⊕Z₃ -> ... -> Y_n⊕Z_{n-1} -> Z_n -> ΣX₃

is an angle. Once the φ's are fixed every remaining condition short of
membership is linear in the ψ's and ϕ's.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple, Union

from ..category import Morphism, ObjectExpr
from ..config import Membership
from ..errors import PreconditionError
from ..models import Budget, SearchOutcome
from .classes import AngleClass
from .sequences import NSequence, SequenceMorphism
from .solving import LinearSystemBuilder, solve_sequence_morphism

logger = logging.getLogger(__name__)

Label = Tuple[str, int]
Entry = Tuple[int, Union[Morphism, str]]


@dataclass
class OctahedralInstance:
    """The three input angles; column.maps[0] is φ₂."""
    x_row: NSequence
    y_row: NSequence
    column: NSequence

    def __post_init__(self):
        f1, g1 = self.x_row.maps[0], self.y_row.maps[0]
        phi2 = self.column.maps[0]
        if self.x_row.objects[0] != self.y_row.objects[0]:
            raise PreconditionError("the two rows must start at the same object")
        if phi2.domain != self.x_row.objects[1] or phi2.codomain != self.y_row.objects[1]:
            raise PreconditionError("the column must start with a map X₂ -> Y₂")
        if g1 != phi2 @ f1:
            raise PreconditionError("g₁ must equal φ₂f₁")

    @property
    def n(self) -> int:
        return self.x_row.n

    @property
    def phi2(self) -> Morphism:
        return self.column.maps[0]

    def obj(self, label: Label) -> ObjectExpr:
        kind, i = label
        if kind == "X":
            return self.x_row.objects[i - 1]
        if kind == "Y":
            return self.y_row.objects[i - 1]
        return self.column.objects[i - 1]

    def f(self, i: int) -> Morphism:
        return self.x_row.maps[i - 1]

    def g(self, i: int) -> Morphism:
        return self.y_row.maps[i - 1]

    def h(self, i: int) -> Morphism:
        return self.column.maps[i - 1]

    def to_payload(self) -> dict:
        return {
            'x_row': self.x_row.to_payload(),
            'y_row': self.y_row.to_payload(),
            'column': self.column.to_payload(),
        }


@dataclass
class OctahedronData:
    instance: OctahedralInstance
    phis: Tuple[Morphism, ...]
    psis: Tuple[Morphism, ...]
    varphis: Tuple[Morphism, ...]
    sequence: NSequence

    def sequence_morphism(self) -> SequenceMorphism:
        inst = self.instance
        cat = inst.x_row.structure.category
        components = (cat.identity(inst.x_row.objects[0]), inst.phi2) + self.phis
        return SequenceMorphism(inst.x_row, inst.y_row, components)

    def psi(self, j: int) -> Morphism:
        return self.psis[j - 3]

    def varphi(self, k: int) -> Morphism:
        return self.varphis[k - 4]

    def phi(self, i: int) -> Morphism:
        return self.instance.phi2 if i == 2 else self.phis[i - 3]

    def is_valid(self) -> bool:
        inst = self.instance
        structure = inst.x_row.structure
        n = inst.n
        if not self.sequence_morphism().is_valid():
            return False
        return inst.h(n) @ self.psi(n) == structure.suspend(inst.f(1)) @ inst.g(n)

    def to_payload(self) -> dict:
        return {
            'instance': self.instance.to_payload(),
            'phi': [m.to_payload() for m in self.phis],
            'psi': [m.to_payload() for m in self.psis],
            'varphi': [m.to_payload() for m in self.varphis],
            'sequence': self.sequence.to_payload(),
        }


def term_parts(n: int, k: int) -> List[Label]:
    """Summands of the k-th term of the assembled sequence, 1 <= k <= n."""
    parts: List[Label] = []
    if k + 2 <= n:
        parts.append(("X", k + 2))
    if 2 <= k and k + 1 <= n:
        parts.append(("Y", k + 1))
    if 3 <= k <= n:
        parts.append(("Z", k))
    return parts


def differential_entries(
    inst: OctahedralInstance,
    k: int,
    lookup: Callable[[str, int], Union[Morphism, str]],
) -> Dict[Tuple[Label, Label], Entry]:
    """Blocks (target, source) -> (sign, entry) of the map from term k to term k+1, k < n.

    lookup("phi"|"psi"|"varphi", index) returns a morphism or an unknown's name.
    """
    n = inst.n
    entries: Dict[Tuple[Label, Label], Entry] = {}
    if k + 3 <= n:
        entries[(("X", k + 3), ("X", k + 2))] = (1 if k == 1 else -1, inst.f(k + 2))
    if k + 2 <= n:
        entries[(("Y", k + 2), ("X", k + 2))] = (1 if k == 1 else (-1) ** k, lookup("phi", k + 2))
    if k >= 2 and k + 2 <= n:
        entries[(("Z", k + 1), ("X", k + 2))] = (1, lookup("varphi", k + 2))
        entries[(("Y", k + 2), ("Y", k + 1))] = (-1, inst.g(k + 1))
    if k >= 2 and k + 1 <= n:
        entries[(("Z", k + 1), ("Y", k + 1))] = (1, lookup("psi", k + 1))
    if k >= 3 and k + 1 <= n:
        entries[(("Z", k + 1), ("Z", k))] = (1, inst.h(k))
    return entries


def assemble_sequence(inst: OctahedralInstance, phis, psis, varphis) -> NSequence:
    """The assembled n-sequence from known φ, ψ, ϕ."""
    structure = inst.x_row.structure
    cat = structure.category
    n = inst.n
    values = {"phi": {i + 3: m for i, m in enumerate(phis)},
              "psi": {j + 3: m for j, m in enumerate(psis)},
              "varphi": {k + 4: m for k, m in enumerate(varphis)}}

    def lookup(kind: str, index: int) -> Morphism:
        return values[kind][index]

    maps = []
    for k in range(1, n):
        sources = term_parts(n, k)
        targets = term_parts(n, k + 1)
        blocks = {}
        for (target, source), (sign, m) in differential_entries(inst, k, lookup).items():
            blocks[(targets.index(target), sources.index(source))] = m.scale(sign)
        maps.append(cat.block_matrix(
            [inst.obj(s) for s in sources], [inst.obj(t) for t in targets], blocks,
        ))
    maps.append(structure.suspend(inst.f(2)) @ inst.h(n))
    return NSequence.of(structure, maps)


def _psi_system(inst: OctahedralInstance, phis: Tuple[Morphism, ...]) -> LinearSystemBuilder:
    """Consecutive composites vanish and h_nψ_n = Σf₁g_n, as equations in ψ and ϕ."""
    structure = inst.x_row.structure
    cat = structure.category
    n = inst.n
    builder = LinearSystemBuilder(cat)
    for j in range(3, n + 1):
        builder.unknown(f"psi{j}", inst.obj(("Y", j)), inst.obj(("Z", j)))
    for k in range(4, n + 1):
        builder.unknown(f"varphi{k}", inst.obj(("X", k)), inst.obj(("Z", k - 1)))
    known_phi = {i + 3: m for i, m in enumerate(phis)}

    def lookup(kind: str, index: int) -> Union[Morphism, str]:
        return known_phi[index] if kind == "phi" else f"{kind}{index}"

    for k in range(1, n - 1):
        first = differential_entries(inst, k, lookup)
        second = differential_entries(inst, k + 1, lookup)
        for target in term_parts(n, k + 2):
            for source in term_parts(n, k):
                rows = cat.layout(inst.obj(source), inst.obj(target)).size
                if rows == 0:
                    continue
                terms, constant = [], None
                for middle in term_parts(n, k + 1):
                    left = second.get((target, middle))
                    right = first.get((middle, source))
                    if left is None or right is None:
                        continue
                    scalar = left[0] * right[0]
                    a, b = left[1], right[1]
                    if isinstance(a, str) and isinstance(b, str):
                        raise PreconditionError("octahedral differentials are not linear")
                    if isinstance(a, str):
                        terms.append((a, builder.pre(a, b).scale(scalar)))
                    elif isinstance(b, str):
                        terms.append((b, builder.post(a, b).scale(scalar)))
                    else:
                        value = (a @ b).coords * scalar
                        constant = value if constant is None else constant + value
                builder.equation(terms, constant, rows=rows)
    # d_n d_{n-1} vanishes once h_nψ_n = Σf₁g_n; Σd₁ d_n vanishes for every choice
    last = structure.suspend(inst.f(1)) @ inst.g(n)
    builder.equation([(f"psi{n}", builder.post(inst.h(n), f"psi{n}"))], -last.coords)
    return builder


def search_octahedron(angles: AngleClass, inst: OctahedralInstance, budget: Budget) -> SearchOutcome:
    """Bounded search for octahedral data; at most cap_solutions membership tests."""
    structure = inst.x_row.structure
    cat = structure.category
    n = inst.n
    fixed = {0: cat.identity(inst.x_row.objects[0]), 1: inst.phi2}
    phi_space = solve_sequence_morphism(inst.x_row, inst.y_row, fixed)
    if phi_space is None:
        return SearchOutcome(None, False, 0)
    limit = budget.cap_solutions
    spent = 0
    exhausted = not phi_space.exhausted_by(limit)
    for morphism in phi_space.iter_morphisms(limit):
        phis = morphism.components[2:]
        builder = _psi_system(inst, phis)
        space = builder.solve()
        if space is None:
            continue
        remaining = limit - spent
        if remaining <= 0:
            exhausted = True
            break
        if not space.exhausted_by(remaining):
            exhausted = True
        for values in space.iter_solutions(remaining):
            psis = tuple(values[f"psi{j}"] for j in range(3, n + 1))
            varphis = tuple(values[f"varphi{k}"] for k in range(4, n + 1))
            seq = assemble_sequence(inst, phis, psis, varphis)
            spent += 1
            verdict = angles.membership(seq, budget)
            if verdict == Membership.IN:
                return SearchOutcome(OctahedronData(inst, phis, psis, varphis, seq), False, spent)
            if verdict == Membership.INCONCLUSIVE:
                exhausted = True
    logger.debug("octahedral search spent %d membership tests without a witness", spent)
    return SearchOutcome(None, exhausted, spent)
