"""
Linear systems whose unknowns are morphisms.

Every commutation constraint used by the checkers (completing squares,
sequence isomorphisms, the functor T, octahedral witnesses) is linear in
the unknown morphism coordinates, so each is assembled into one system
over F_p and solved at once.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..category import ZERO, Morphism, ObjectExpr, PresentedCategory
from ..config import Config
from ..errors import PreconditionError
from ..ffmat import FpMatrix, LinearSolution, search_points, solve_linear
from ..models import SearchOutcome
from .sequences import NSequence, SequenceMorphism

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Unknown:
    name: str
    domain: ObjectExpr
    codomain: ObjectExpr
    offset: int
    size: int


class LinearSystemBuilder:
    """Collects equations sum_k M_k x_k + c = 0 between Hom spaces."""

    def __init__(self, category: PresentedCategory):
        self.category = category
        self.unknowns: Dict[str, Unknown] = {}
        self._order: List[str] = []
        self._rows: List[Tuple[Dict[str, FpMatrix], np.ndarray]] = []
        self.width = 0

    def unknown(self, name: str, domain: ObjectExpr, codomain: ObjectExpr) -> Unknown:
        if name in self.unknowns:
            raise PreconditionError(f"unknown {name} declared twice")
        size = self.category.layout(domain, codomain).size
        var = Unknown(name, domain, codomain, self.width, size)
        self.unknowns[name] = var
        self._order.append(name)
        self.width += size
        return var

    # term helpers: each returns the matrix applied to the unknown's coordinates

    def post(self, g: Morphism, name: str) -> FpMatrix:
        """Matrix of x -> g o x."""
        return self.category.post_matrix(g, self.unknowns[name].domain)

    def pre(self, name: str, f: Morphism) -> FpMatrix:
        """Matrix of x -> x o f."""
        return self.category.pre_matrix(f, self.unknowns[name].codomain)

    def identity(self, name: str) -> FpMatrix:
        return FpMatrix.identity(self.category.p, self.unknowns[name].size)

    def equation(self, terms: Sequence[Tuple[str, FpMatrix]], constant: Optional[np.ndarray] = None, rows: Optional[int] = None) -> None:
        """Add sum M x + constant = 0; terms may repeat an unknown."""
        merged: Dict[str, FpMatrix] = {}
        height = rows
        for name, matrix in terms:
            if name not in self.unknowns:
                raise PreconditionError(f"undeclared unknown {name}")
            if matrix.cols != self.unknowns[name].size:
                raise PreconditionError(f"term for {name} has {matrix.cols} columns, expected {self.unknowns[name].size}")
            height = matrix.rows if height is None else height
            if matrix.rows != height:
                raise PreconditionError("equation terms live in different Hom spaces")
            merged[name] = merged[name] + matrix if name in merged else matrix
        if height is None:
            height = 0 if constant is None else len(constant)
        const = np.zeros(height, dtype=np.int64) if constant is None else np.asarray(constant, dtype=np.int64).reshape(-1)
        if height:
            self._rows.append((merged, const))

    def fix(self, name: str, value: Morphism) -> None:
        var = self.unknowns[name]
        if value.domain != var.domain or value.codomain != var.codomain:
            raise PreconditionError(f"fixed value for {name} has the wrong objects")
        self.equation([(name, self.identity(name))], -value.coords)

    def matrix(self) -> Tuple[FpMatrix, np.ndarray]:
        p = self.category.p
        blocks, rhs = [], []
        for terms, const in self._rows:
            row = np.zeros((len(const), self.width), dtype=np.int64)
            for name, matrix in terms.items():
                var = self.unknowns[name]
                row[:, var.offset:var.offset + var.size] += matrix.data
            blocks.append(row)
            rhs.append(-const)
        if not blocks:
            return FpMatrix.zeros(p, 0, self.width), np.zeros(0, dtype=np.int64)
        return FpMatrix(p, np.vstack(blocks)), np.concatenate(rhs) % p

    def solve(self) -> Optional["SolutionSpace"]:
        A, b = self.matrix()
        solution = solve_linear(A, b)
        if solution is None:
            return None
        return SolutionSpace(self, solution)


class SolutionSpace:
    """Affine space of morphism tuples solving a builder's system."""

    def __init__(self, builder: LinearSystemBuilder, solution: LinearSolution):
        self.builder = builder
        self.solution = solution

    @property
    def dimension(self) -> int:
        return self.solution.dimension

    @property
    def size(self) -> int:
        return self.solution.size

    def morphisms(self, vector: np.ndarray) -> Dict[str, Morphism]:
        cat = self.builder.category
        return {
            name: cat.morphism(var.domain, var.codomain, vector[var.offset:var.offset + var.size])
            for name, var in self.builder.unknowns.items()
        }

    def particular(self) -> Dict[str, Morphism]:
        return self.morphisms(self.solution.particular)

    def kernel_morphisms(self) -> Iterator[Dict[str, Morphism]]:
        for vector in self.solution.kernel:
            yield self.morphisms(vector)

    def iter_solutions(self, limit: Optional[int] = None) -> Iterator[Dict[str, Morphism]]:
        """Solutions in lexicographic kernel-coefficient order, zero first."""
        for point in self.solution.iter_points(limit):
            yield self.morphisms(point)

    def exhausted_by(self, limit: int) -> bool:
        return self.solution.exhausted_by(limit)

    def sample(self, rng: np.random.Generator, count: int) -> Iterator[Dict[str, Morphism]]:
        for point in self.solution.sample_points(rng, count):
            yield self.morphisms(point)


def _phi(i: int) -> str:
    return f"phi{i + 1}"


class SequenceMorphismSpace(SolutionSpace):
    """Solutions of the commuting squares between two fixed sequences."""

    def __init__(self, builder: LinearSystemBuilder, solution: LinearSolution, source: NSequence, target: NSequence):
        super().__init__(builder, solution)
        self.source = source
        self.target = target

    def to_morphism(self, values: Mapping[str, Morphism]) -> SequenceMorphism:
        return SequenceMorphism(self.source, self.target, tuple(values[_phi(i)] for i in range(self.source.n)))

    def particular_morphism(self) -> SequenceMorphism:
        return self.to_morphism(self.particular())

    def iter_morphisms(self, limit: Optional[int] = None) -> Iterator[SequenceMorphism]:
        for values in self.iter_solutions(limit):
            yield self.to_morphism(values)

    def kernel_components(self, index: int) -> List[Morphism]:
        """Component index of every kernel basis vector."""
        return [values[_phi(index)] for values in self.kernel_morphisms()]


def sequence_morphism_builder(source: NSequence, target: NSequence) -> LinearSystemBuilder:
    """Unknowns phi1..phin and all n commuting squares."""
    structure = source.structure
    cat = structure.category
    n = structure.n
    builder = LinearSystemBuilder(cat)
    for i in range(n):
        builder.unknown(_phi(i), source.objects[i], target.objects[i])
    f, g = source.maps, target.maps
    for i in range(n - 1):
        builder.equation([
            (_phi(i), builder.post(g[i], _phi(i))),
            (_phi(i + 1), -builder.pre(_phi(i + 1), f[i])),
        ])
    X1, Y1 = source.objects[0], target.objects[0]
    suspend_matrix = structure.shift.forward.linear_matrix(X1, Y1)
    builder.equation([
        (_phi(n - 1), builder.post(g[n - 1], _phi(n - 1))),
        (_phi(0), -(cat.pre_matrix(f[n - 1], structure.suspend_object(Y1)) @ suspend_matrix)),
    ])
    return builder


def solve_sequence_morphism(
    source: NSequence,
    target: NSequence,
    fixed: Optional[Mapping[int, Morphism]] = None,
) -> Optional[SequenceMorphismSpace]:
    """All sequence morphisms source -> target with the given components fixed."""
    builder = sequence_morphism_builder(source, target)
    for index, value in (fixed or {}).items():
        builder.fix(_phi(index), value)
    A, b = builder.matrix()
    solution = solve_linear(A, b)
    if solution is None:
        return None
    return SequenceMorphismSpace(builder, solution, source, target)


def complete_morphism(phi1: Morphism, phi2: Morphism, source: NSequence, target: NSequence) -> Optional[SequenceMorphismSpace]:
    """Solve for φ₃..φ_n given a commuting first square."""
    if target.maps[0] @ phi1 != phi2 @ source.maps[0]:
        raise PreconditionError("the first square does not commute: g₁φ₁ != φ₂f₁")
    return solve_sequence_morphism(source, target, {0: phi1, 1: phi2})


def sequence_isomorphism(
    source: NSequence,
    target: NSequence,
    limit: int = Config.ISO_SEARCH_LIMIT,
    seed: int = 0,
) -> SearchOutcome:
    """Search for an isomorphism of sequences source -> target."""
    cat = source.structure.category
    for a, b in zip(source.objects, target.objects):
        if cat.hom_signature(a) != cat.hom_signature(b):
            return SearchOutcome(None, False, 0)
    space = solve_sequence_morphism(source, target)
    if space is None:
        return SearchOutcome(None, False, 0)
    preferred = []
    matches = [cat.matching_map(a, b) for a, b in zip(source.objects, target.objects)]
    if all(m is not None for m in matches):
        candidate = np.concatenate([m.coords for m in matches])
        if space.to_morphism(space.morphisms(candidate)).is_valid():
            preferred.append(candidate)

    def accept(vector: np.ndarray) -> bool:
        return all(cat.is_isomorphism(m) for m in space.morphisms(vector).values())

    point, exhausted, spent = search_points(space.solution, accept, limit, seed, preferred)
    if point is None:
        return SearchOutcome(None, exhausted, spent)
    return SearchOutcome(space.to_morphism(space.morphisms(point)), False, spent)


def transport_first_map(seq: NSequence, f: Morphism, limit: int, seed: int = 0) -> SearchOutcome:
    """Rewrite seq along isomorphisms so that its first map becomes f.

    Looks for isomorphisms a: X -> X₁, b: Y -> X₂ with f₁ a = b f and
    returns the isomorphic sequence X -> Y -> X₃ -> ... -> ΣX.
    """
    structure = seq.structure
    cat = structure.category
    X, Y = f.domain, f.codomain
    if X.canonical() != seq.objects[0].canonical() or Y.canonical() != seq.objects[1].canonical():
        return SearchOutcome(None, False, 0)
    builder = LinearSystemBuilder(cat)
    builder.unknown("a", X, seq.objects[0])
    builder.unknown("b", Y, seq.objects[1])
    builder.equation([("a", builder.post(seq.maps[0], "a")), ("b", -builder.pre("b", f))])
    space = builder.solve()
    if space is None:
        return SearchOutcome(None, False, 0)

    def accept(vector: np.ndarray) -> bool:
        values = space.morphisms(vector)
        return cat.is_isomorphism(values["a"]) and cat.is_isomorphism(values["b"])

    preferred = []
    a0, b0 = cat.matching_map(X, seq.objects[0]), cat.matching_map(Y, seq.objects[1])
    if a0 is not None and b0 is not None and seq.maps[0] @ a0 == b0 @ f:
        preferred.append(np.concatenate([a0.coords, b0.coords]))
    point, exhausted, spent = search_points(space.solution, accept, limit, seed, preferred)
    if point is None:
        return SearchOutcome(None, exhausted, spent)
    values = space.morphisms(point)
    a, b = values["a"], values["b"]
    a_inverse = cat.inverse(a)
    maps = list(seq.maps)
    maps[0] = f
    maps[1] = seq.maps[1] @ b
    maps[-1] = structure.suspend(a_inverse) @ seq.maps[-1]
    return SearchOutcome(NSequence.of(structure, maps), False, spent)


def coordinate_inclusion(cat: PresentedCategory, obj: ObjectExpr, positions: Sequence[int]) -> Morphism:
    """Inclusion of the summands at the given positions of obj."""
    part = ObjectExpr(tuple(obj.summands[k] for k in positions))
    layout = cat.layout(part, obj)
    coords = np.zeros(layout.size, dtype=np.int64)
    for t, k in enumerate(positions):
        coords[layout.slice(k, t)] = cat.identities[obj.summands[k]]
    return cat.morphism(part, obj, coords)


def coordinate_projection(cat: PresentedCategory, obj: ObjectExpr, positions: Sequence[int]) -> Morphism:
    """Projection of obj onto the summands at the given positions."""
    part = ObjectExpr(tuple(obj.summands[k] for k in positions))
    layout = cat.layout(obj, part)
    coords = np.zeros(layout.size, dtype=np.int64)
    for t, k in enumerate(positions):
        coords[layout.slice(t, k)] = cat.identities[obj.summands[k]]
    return cat.morphism(obj, part, coords)


def split_idempotent(e: Morphism, limit: int) -> Optional[Tuple[Morphism, Morphism]]:
    """s: A -> X and r: X -> A with r s = id_A and s r = e.

    A runs over the sub-multisets of X, smallest first. The coordinate
    inclusion is tried before solving (1 - e) s = 0 for s and then
    r s = id_A, r (1 - e) = 0 for r.
    """
    cat = e.category
    X = e.domain
    if e.is_zero():
        return cat.zero(ZERO, X), cat.zero(X, ZERO)
    if e == cat.identity(X):
        return cat.identity(X), cat.identity(X)
    complement = cat.identity(X) - e
    searched = set()
    for size in range(1, X.size):
        for positions in itertools.combinations(range(X.size), size):
            s = coordinate_inclusion(cat, X, positions)
            r = coordinate_projection(cat, X, positions)
            if s @ r == e:
                return s, r
            A = s.domain
            if A.canonical() in searched:
                continue
            searched.add(A.canonical())
            builder = LinearSystemBuilder(cat)
            builder.unknown("s", A, X)
            builder.equation([("s", builder.post(complement, "s"))])
            space = builder.solve()
            for values in space.iter_solutions(limit):
                s = values["s"]
                retraction = LinearSystemBuilder(cat)
                retraction.unknown("r", X, A)
                retraction.equation([("r", retraction.pre("r", s))], -cat.identity(A).coords)
                retraction.equation([("r", retraction.pre("r", complement))])
                solved = retraction.solve()
                if solved is None:
                    continue
                r = solved.particular()["r"]
                if s @ r == e:
                    return s, r
    return None
