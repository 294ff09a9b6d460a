"""
Finitely presented additive categories over F_p.

A category is given by generators, Hom bases and composition structure
constants. Morphisms between formal direct sums are flat coordinate
vectors laid out block by block (target summand major, source summand
minor), each block holding coordinates in the Hom basis of the two
generators involved.
"""

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config import Config
from ..errors import FieldError, PreconditionError, PresentationError
from ..ffmat import FpMatrix, check_modulus, solve_vector
from ..models import SearchOutcome
from .objects import ObjectExpr, objects_up_to

logger = logging.getLogger(__name__)


class HomLayout:
    """Block offsets of Hom(X, Y) coordinates."""

    __slots__ = ("domain", "codomain", "offsets", "size")

    def __init__(self, category: "PresentedCategory", domain: ObjectExpr, codomain: ObjectExpr):
        self.domain = domain
        self.codomain = codomain
        self.offsets: Dict[Tuple[int, int], Tuple[int, int]] = {}
        position = 0
        for j, h in enumerate(codomain.summands):
            for i, g in enumerate(domain.summands):
                dim = category.hom_dim(g, h)
                self.offsets[(j, i)] = (position, dim)
                position += dim
        self.size = position

    def slice(self, j: int, i: int) -> slice:
        start, dim = self.offsets[(j, i)]
        return slice(start, start + dim)


class Morphism:
    """A morphism between formal direct sums, stored as block coordinates."""

    __slots__ = ("category", "domain", "codomain", "coords")

    def __init__(self, category: "PresentedCategory", domain: ObjectExpr, codomain: ObjectExpr, coords):
        values = np.asarray(coords, dtype=np.int64).reshape(-1) % category.p
        expected = category.layout(domain, codomain).size
        if values.shape[0] != expected:
            raise FieldError(
                f"morphism needs {expected} coordinates for "
                f"{domain.names(category.generator_names)} -> {codomain.names(category.generator_names)}, "
                f"got {values.shape[0]}"
            )
        values.setflags(write=False)
        self.category = category
        self.domain = domain
        self.codomain = codomain
        self.coords = values

    def __matmul__(self, other: "Morphism") -> "Morphism":
        return self.category.compose(self, other)

    def _check_parallel(self, other: "Morphism") -> None:
        if self.domain != other.domain or self.codomain != other.codomain:
            raise PreconditionError("morphisms are not parallel")

    def __add__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        return Morphism(self.category, self.domain, self.codomain, self.coords + other.coords)

    def __sub__(self, other: "Morphism") -> "Morphism":
        self._check_parallel(other)
        return Morphism(self.category, self.domain, self.codomain, self.coords - other.coords)

    def __neg__(self) -> "Morphism":
        return Morphism(self.category, self.domain, self.codomain, -self.coords)

    def scale(self, scalar: int) -> "Morphism":
        return Morphism(self.category, self.domain, self.codomain, self.coords * int(scalar))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def block(self, j: int, i: int) -> np.ndarray:
        return self.coords[self.category.layout(self.domain, self.codomain).slice(j, i)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.category is other.category
            and self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self.coords.tobytes()))

    def __repr__(self) -> str:
        names = self.category.generator_names
        return f"Morphism({self.domain.names(names)} -> {self.codomain.names(names)}, {self.coords.tolist()})"

    def to_payload(self) -> dict:
        names = self.category.generator_names
        return {
            'domain': self.domain.names(names),
            'codomain': self.codomain.names(names),
            'coords': [int(v) for v in self.coords],
        }


class PresentedCategory:
    """A finite additive category presented by structure constants.

    composition[(g, h, k)] has shape (dim Hom(h,k), dim Hom(g,h), dim Hom(g,k)):
    entry [b, a, :] holds the coordinates of basis_b o basis_a.
    """

    def __init__(
        self,
        p: int,
        generator_names: Sequence[str],
        basis_names: Dict[Tuple[int, int], Sequence[str]],
        composition: Dict[Tuple[int, int, int], np.ndarray],
        identities: Dict[int, Sequence[int]],
        name: str = "",
    ):
        self.p = check_modulus(p)
        self.name = name
        self.generator_names: Tuple[str, ...] = tuple(generator_names)
        m = len(self.generator_names)
        self.basis_names: Dict[Tuple[int, int], Tuple[str, ...]] = {
            (g, h): tuple(basis_names.get((g, h), ())) for g in range(m) for h in range(m)
        }
        self._composition: Dict[Tuple[int, int, int], np.ndarray] = {}
        for key, tensor in composition.items():
            g, h, k = key
            expected = (self.hom_dim(h, k), self.hom_dim(g, h), self.hom_dim(g, k))
            array = np.asarray(tensor, dtype=np.int64).reshape(expected) % p
            array.setflags(write=False)
            self._composition[key] = array
        self.identities: Dict[int, np.ndarray] = {}
        for g in range(m):
            values = np.asarray(identities.get(g, [0] * self.hom_dim(g, g)), dtype=np.int64).reshape(-1) % p
            if values.shape[0] != self.hom_dim(g, g):
                raise PresentationError(f"identity of {self.generator_names[g]} has the wrong length")
            values.setflags(write=False)
            self.identities[g] = values
        self._layouts: Dict[Tuple[ObjectExpr, ObjectExpr], HomLayout] = {}
        self._opposite: Optional["PresentedCategory"] = None

    # -- presentation data -------------------------------------------------

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def generators(self) -> range:
        return range(self.generator_count)

    def hom_dim(self, g: int, h: int) -> int:
        return len(self.basis_names[(g, h)])

    def comp_tensor(self, g: int, h: int, k: int) -> np.ndarray:
        tensor = self._composition.get((g, h, k))
        if tensor is None:
            return np.zeros((self.hom_dim(h, k), self.hom_dim(g, h), self.hom_dim(g, k)), dtype=np.int64)
        return tensor

    def composition_table(self) -> Dict[Tuple[int, int, int], np.ndarray]:
        return dict(self._composition)

    def generator_index(self, name: str) -> int:
        try:
            return self.generator_names.index(name)
        except ValueError:
            raise PresentationError(f"unknown generator {name}") from None

    def is_zero_generator(self, g: int) -> bool:
        """A generator whose identity vanishes is a zero object."""
        return not self.identities[g].any()

    def object_of(self, *names: str) -> ObjectExpr:
        return ObjectExpr(tuple(self.generator_index(n) for n in names))

    def objects(self, cap: int, allowed=None) -> List[ObjectExpr]:
        return objects_up_to(self.generator_count, cap, allowed)

    # -- morphisms ---------------------------------------------------------

    def layout(self, domain: ObjectExpr, codomain: ObjectExpr) -> HomLayout:
        key = (domain, codomain)
        layout = self._layouts.get(key)
        if layout is None:
            layout = HomLayout(self, domain, codomain)
            self._layouts[key] = layout
        return layout

    def morphism(self, domain: ObjectExpr, codomain: ObjectExpr, coords) -> Morphism:
        return Morphism(self, domain, codomain, coords)

    def zero(self, domain: ObjectExpr, codomain: ObjectExpr) -> Morphism:
        return Morphism(self, domain, codomain, np.zeros(self.layout(domain, codomain).size, dtype=np.int64))

    def identity(self, obj: ObjectExpr) -> Morphism:
        layout = self.layout(obj, obj)
        coords = np.zeros(layout.size, dtype=np.int64)
        for i, g in enumerate(obj.summands):
            coords[layout.slice(i, i)] = self.identities[g]
        return Morphism(self, obj, obj, coords)

    def generator_morphism(self, g: int, h: int, coords) -> Morphism:
        return Morphism(self, ObjectExpr.of(g), ObjectExpr.of(h), coords)

    def retarget(self, f: Morphism, domain: ObjectExpr, codomain: ObjectExpr) -> Morphism:
        """Reinterpret coordinates over objects differing only by zero generators."""
        return Morphism(self, domain, codomain, f.coords)

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g o f."""
        if f.codomain != g.domain:
            raise PreconditionError(
                f"cannot compose: codomain {f.codomain.names(self.generator_names)} "
                f"!= domain {g.domain.names(self.generator_names)}"
            )
        X, Y, W = f.domain, f.codomain, g.codomain
        out_layout = self.layout(X, W)
        f_layout = self.layout(X, Y)
        g_layout = self.layout(Y, W)
        out = np.zeros(out_layout.size, dtype=np.int64)
        for w_idx, w in enumerate(W.summands):
            for x_idx, x in enumerate(X.summands):
                start, dim = out_layout.offsets[(w_idx, x_idx)]
                if dim == 0:
                    continue
                acc = np.zeros(dim, dtype=np.int64)
                for y_idx, y in enumerate(Y.summands):
                    g_block = g.coords[g_layout.slice(w_idx, y_idx)]
                    f_block = f.coords[f_layout.slice(y_idx, x_idx)]
                    if g_block.size == 0 or f_block.size == 0:
                        continue
                    acc += np.einsum('b,a,bak->k', g_block, f_block, self.comp_tensor(x, y, w))
                out[start:start + dim] = acc
        return Morphism(self, X, W, out)

    def post_matrix(self, g: Morphism, source: ObjectExpr) -> FpMatrix:
        """Matrix of Hom(source, dom g) -> Hom(source, cod g), f -> g o f."""
        Y, W = g.domain, g.codomain
        out_layout = self.layout(source, W)
        in_layout = self.layout(source, Y)
        g_layout = self.layout(Y, W)
        matrix = np.zeros((out_layout.size, in_layout.size), dtype=np.int64)
        for w_idx, w in enumerate(W.summands):
            for x_idx, x in enumerate(source.summands):
                rows = out_layout.slice(w_idx, x_idx)
                if rows.stop == rows.start:
                    continue
                for y_idx, y in enumerate(Y.summands):
                    g_block = g.coords[g_layout.slice(w_idx, y_idx)]
                    cols = in_layout.slice(y_idx, x_idx)
                    if g_block.size == 0 or cols.stop == cols.start:
                        continue
                    matrix[rows, cols] += np.einsum('b,bak->ka', g_block, self.comp_tensor(x, y, w))
        return FpMatrix(self.p, matrix)

    def pre_matrix(self, f: Morphism, target: ObjectExpr) -> FpMatrix:
        """Matrix of Hom(cod f, target) -> Hom(dom f, target), g -> g o f."""
        X, Y = f.domain, f.codomain
        out_layout = self.layout(X, target)
        in_layout = self.layout(Y, target)
        f_layout = self.layout(X, Y)
        matrix = np.zeros((out_layout.size, in_layout.size), dtype=np.int64)
        for w_idx, w in enumerate(target.summands):
            for x_idx, x in enumerate(X.summands):
                rows = out_layout.slice(w_idx, x_idx)
                if rows.stop == rows.start:
                    continue
                for y_idx, y in enumerate(Y.summands):
                    f_block = f.coords[f_layout.slice(y_idx, x_idx)]
                    cols = in_layout.slice(w_idx, y_idx)
                    if f_block.size == 0 or cols.stop == cols.start:
                        continue
                    matrix[rows, cols] += np.einsum('a,bak->kb', f_block, self.comp_tensor(x, y, w))
        return FpMatrix(self.p, matrix)

    def block_matrix(
        self,
        sources: Sequence[ObjectExpr],
        targets: Sequence[ObjectExpr],
        blocks: Dict[Tuple[int, int], Morphism],
    ) -> Morphism:
        """Assemble a morphism between sums from its (target, source) blocks."""
        domain = ObjectExpr(sum((s.summands for s in sources), ()))
        codomain = ObjectExpr(sum((t.summands for t in targets), ()))
        layout = self.layout(domain, codomain)
        coords = np.zeros(layout.size, dtype=np.int64)
        source_offsets = np.cumsum([0] + [s.size for s in sources])
        target_offsets = np.cumsum([0] + [t.size for t in targets])
        for (b, a), m in blocks.items():
            if m.domain != sources[a] or m.codomain != targets[b]:
                raise PreconditionError(f"block ({b}, {a}) has the wrong objects")
            sub_layout = self.layout(m.domain, m.codomain)
            for (j, i), (start, dim) in sub_layout.offsets.items():
                if dim:
                    coords[layout.slice(int(target_offsets[b]) + j, int(source_offsets[a]) + i)] = m.coords[start:start + dim]
        return Morphism(self, domain, codomain, coords)

    def direct_sum(self, f: Morphism, g: Morphism) -> Morphism:
        """Block-diagonal sum f + g."""
        return self.block_matrix([f.domain, g.domain], [f.codomain, g.codomain], {(0, 0): f, (1, 1): g})

    def inclusion(self, parts: Sequence[ObjectExpr], index: int) -> Morphism:
        return self.block_matrix([parts[index]], parts, {(index, 0): self.identity(parts[index])})

    def projection(self, parts: Sequence[ObjectExpr], index: int) -> Morphism:
        return self.block_matrix(parts, [parts[index]], {(0, index): self.identity(parts[index])})

    # -- isomorphisms ------------------------------------------------------

    def inverse(self, f: Morphism) -> Optional[Morphism]:
        """Two-sided inverse by solving f u = id and v f = id."""
        X, Y = f.domain, f.codomain
        right = solve_vector(self.post_matrix(f, Y), self.identity(Y).coords)
        if right is None:
            return None
        left = solve_vector(self.pre_matrix(f, X), self.identity(X).coords)
        if left is None:
            return None
        return Morphism(self, Y, X, right)

    def is_isomorphism(self, f: Morphism) -> bool:
        return self.inverse(f) is not None

    def hom_signature(self, obj: ObjectExpr) -> Tuple[int, ...]:
        """Hom dimensions from and to every generator, an isomorphism invariant."""
        into = [self.layout(ObjectExpr.of(g), obj).size for g in self.generators()]
        out_of = [self.layout(obj, ObjectExpr.of(g)).size for g in self.generators()]
        return tuple(into + out_of)

    def hom_elements(self, domain: ObjectExpr, codomain: ObjectExpr, limit: Optional[int] = None) -> Iterator[Morphism]:
        """Hom(domain, codomain) in lexicographic coordinate order."""
        size = self.layout(domain, codomain).size
        combos = itertools.product(range(self.p), repeat=size)
        if limit is not None:
            combos = itertools.islice(combos, limit)
        for combo in combos:
            yield Morphism(self, domain, codomain, combo)

    def hom_size(self, domain: ObjectExpr, codomain: ObjectExpr) -> int:
        return self.p ** self.layout(domain, codomain).size

    def matching_map(self, domain: ObjectExpr, codomain: ObjectExpr) -> Optional[Morphism]:
        """Identity blocks pairing equal generators, when the multisets agree."""
        if domain.canonical() != codomain.canonical():
            return None
        layout = self.layout(domain, codomain)
        coords = np.zeros(layout.size, dtype=np.int64)
        used = set()
        for i, g in enumerate(domain.summands):
            j = next(j for j, h in enumerate(codomain.summands) if h == g and j not in used)
            used.add(j)
            coords[layout.slice(j, i)] = self.identities[g]
        return Morphism(self, domain, codomain, coords)

    def iso_search(self, domain: ObjectExpr, codomain: ObjectExpr, limit: int = Config.ISO_SEARCH_LIMIT) -> SearchOutcome:
        """Search Hom(domain, codomain) for an isomorphism within limit candidates."""
        if self.hom_signature(domain) != self.hom_signature(codomain):
            return SearchOutcome(None, exhausted=False, spent=0)
        matching = self.matching_map(domain, codomain)
        if matching is not None and self.is_isomorphism(matching):
            return SearchOutcome(matching, exhausted=False, spent=1)
        spent = 0
        for candidate in self.hom_elements(domain, codomain, limit):
            spent += 1
            if self.is_isomorphism(candidate):
                return SearchOutcome(candidate, exhausted=False, spent=spent)
        return SearchOutcome(None, exhausted=self.hom_size(domain, codomain) > limit, spent=spent)

    def random_morphism(self, domain: ObjectExpr, codomain: ObjectExpr, rng: np.random.Generator) -> Morphism:
        size = self.layout(domain, codomain).size
        return Morphism(self, domain, codomain, rng.integers(0, self.p, size=size))

    # -- validation --------------------------------------------------------

    def basis_label(self, g: int, h: int, index: int) -> str:
        return self.basis_names[(g, h)][index]

    def validate(self) -> "PresentedCategory":
        """Check unit and associativity laws on all basis elements."""
        gens = list(self.generators())
        for g in gens:
            for h in gens:
                d = self.hom_dim(g, h)
                if d == 0:
                    continue
                basis = np.eye(d, dtype=np.int64)
                left = np.einsum('b,bak->ak', self.identities[h], self.comp_tensor(g, h, h)) % self.p
                right = np.einsum('a,bak->bk', self.identities[g], self.comp_tensor(g, g, h)) % self.p
                for a in range(d):
                    if not np.array_equal(left[a], basis[a]):
                        raise PresentationError(
                            "associativity/unit consistency: unit law fails for pair "
                            f"(id_{self.generator_names[h]}, {self.basis_label(g, h, a)})"
                        )
                    if not np.array_equal(right[a], basis[a]):
                        raise PresentationError(
                            "associativity/unit consistency: unit law fails for pair "
                            f"({self.basis_label(g, h, a)}, id_{self.generator_names[g]})"
                        )
        for g, h, k, l in itertools.product(gens, repeat=4):
            if not (self.hom_dim(g, h) and self.hom_dim(h, k) and self.hom_dim(k, l)):
                continue
            lhs = np.einsum('cbm,mak->cbak', self.comp_tensor(h, k, l), self.comp_tensor(g, h, l)) % self.p
            rhs = np.einsum('bax,cxk->cbak', self.comp_tensor(g, h, k), self.comp_tensor(g, k, l)) % self.p
            bad = np.argwhere((lhs != rhs).any(axis=3))
            if bad.size:
                c, b, a = (int(v) for v in bad[0])
                raise PresentationError(
                    "associativity/unit consistency: associativity fails for triple "
                    f"({self.basis_label(k, l, c)}, {self.basis_label(h, k, b)}, {self.basis_label(g, h, a)})"
                )
        logger.debug("validated category %s with %d generators", self.name, self.generator_count)
        return self

    def same_tables(self, other: "PresentedCategory") -> bool:
        """Equality of all presentation data."""
        if self.p != other.p or self.generator_names != other.generator_names:
            return False
        if self.basis_names != other.basis_names:
            return False
        gens = list(self.generators())
        for key in itertools.product(gens, repeat=3):
            if not np.array_equal(self.comp_tensor(*key), other.comp_tensor(*key)):
                return False
        return all(np.array_equal(self.identities[g], other.identities[g]) for g in gens)

    def opposite(self) -> "PresentedCategory":
        if self._opposite is None:
            from .opposite import opposite_category
            self._opposite = opposite_category(self)
            self._opposite._opposite = self
        return self._opposite
