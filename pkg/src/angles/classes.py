"""
Classes of n-angles: membership oracles, completions and bounded enumeration.
"""

import logging
from abc import ABC, abstractmethod
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..category import ZERO, Morphism, ObjectExpr, Subcategory
from ..config import Config, Membership
from ..errors import PresentationError
from ..ffmat import FpMatrix, kernel_basis
from ..models import Budget, SearchOutcome
from .exactness import COVARIANT, exact_at, is_hom_exact
from .sequences import NSequence, rotate_left
from .solving import sequence_isomorphism, transport_first_map
from .structure import AngulatedStructure

logger = logging.getLogger(__name__)


class AngleClass(ABC):
    """A class Θ of n-sequences given by an oracle.

    Subclasses answer membership and complete a morphism to a member; the
    default enumeration completes every morphism between objects within
    the cap and adds the left rotations of the results.
    """

    name = "angles"

    def __init__(self, structure: AngulatedStructure):
        self.structure = structure

    @abstractmethod
    def membership(self, seq: NSequence, budget: Budget) -> str:
        """Membership.IN, OUT or INCONCLUSIVE."""
        pass

    @abstractmethod
    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        """A member whose first map is f."""
        pass

    def objects(self, cap: int) -> List[ObjectExpr]:
        """Objects the checkers range over."""
        return self.structure.objects(cap)

    def generator_objects(self) -> List[ObjectExpr]:
        return list(self.structure.generator_objects())

    def contains(self, seq: NSequence, budget: Budget) -> bool:
        return self.membership(seq, budget) == Membership.IN

    def enumerate(self, budget: Budget) -> Iterator[NSequence]:
        cat = self.structure.category
        cap = budget.cap_objects
        seen = set()
        objects = self.objects(cap)
        for X in objects:
            for Y in objects:
                for f in cat.hom_elements(X, Y, budget.cap_solutions):
                    outcome = self.complete(f, budget)
                    if not outcome.found:
                        continue
                    for candidate in (outcome.value, rotate_left(outcome.value)):
                        if candidate.max_size() <= cap and candidate.key() not in seen:
                            seen.add(candidate.key())
                            yield candidate

    def describe(self) -> str:
        return self.name


def _isotype_positions(obj: ObjectExpr, g: int) -> List[int]:
    return [i for i, h in enumerate(obj.summands) if h == g]


class SplitAngleClass(AngleClass):
    """Contractible sequences on a semisimple presentation.

    Every Hom(g, g) is one-dimensional and cross Homs vanish, so a
    sequence is a sum of rotated trivial angles exactly when Hom(G, -)
    turns it into an exact sequence for every generator G.
    """

    name = "split"

    def __init__(self, structure: AngulatedStructure):
        super().__init__(structure)
        cat = structure.category
        for g in cat.generators():
            for h in cat.generators():
                expected = 1 if g == h else 0
                if cat.hom_dim(g, h) != expected:
                    raise PresentationError(
                        f"split angles need a semisimple presentation; dim Hom("
                        f"{cat.generator_names[g]}, {cat.generator_names[h]}) = {cat.hom_dim(g, h)}"
                    )
            if cat.is_zero_generator(g):
                raise PresentationError(f"split angles need nonzero identities; {cat.generator_names[g]} has none")

    def membership(self, seq: NSequence, budget: Budget) -> str:
        if not seq.is_complex():
            return Membership.OUT
        return Membership.IN if is_hom_exact(seq, COVARIANT) else Membership.OUT

    def scalar_block(self, f: Morphism, g: int) -> FpMatrix:
        """Matrix of f restricted to the g-isotypic summands, in units of id_g."""
        cat = self.structure.category
        rows = _isotype_positions(f.codomain, g)
        cols = _isotype_positions(f.domain, g)
        unit_inverse = pow(int(cat.identities[g][0]), -1, cat.p)
        data = np.zeros((len(rows), len(cols)), dtype=np.int64)
        for r, j in enumerate(rows):
            for c, i in enumerate(cols):
                data[r, c] = int(f.block(j, i)[0]) * unit_inverse
        return FpMatrix(cat.p, data)

    def _from_scalars(self, domain: ObjectExpr, codomain: ObjectExpr, blocks) -> Morphism:
        """Morphism with scalar multiples of identities; blocks[(j, i)] = scalar."""
        cat = self.structure.category
        layout = cat.layout(domain, codomain)
        coords = np.zeros(layout.size, dtype=np.int64)
        for (j, i), scalar in blocks.items():
            coords[layout.slice(j, i)] = int(scalar) * cat.identities[domain.summands[i]]
        return cat.morphism(domain, codomain, coords)

    def kernel_and_cokernel(self, f: Morphism) -> Tuple[Morphism, Morphism]:
        """ι: K -> X and c: Y -> Q with K, Q sorted by generator."""
        cat = self.structure.category
        X, Y = f.domain, f.codomain
        kernel_parts, cokernel_parts = [], []
        for g in cat.generators():
            M = self.scalar_block(f, g)
            kernel_parts.append((g, kernel_basis(M)))
            cokernel_parts.append((g, kernel_basis(M.T)))
        K = ObjectExpr(tuple(g for g, vectors in kernel_parts for _ in vectors))
        Q = ObjectExpr(tuple(g for g, vectors in cokernel_parts for _ in vectors))
        iota_blocks, c_blocks = {}, {}
        index = 0
        for g, vectors in kernel_parts:
            positions = _isotype_positions(X, g)
            for v in vectors:
                for s, j in enumerate(positions):
                    if v[s]:
                        iota_blocks[(j, index)] = v[s]
                index += 1
        index = 0
        for g, vectors in cokernel_parts:
            positions = _isotype_positions(Y, g)
            for w in vectors:
                for s, i in enumerate(positions):
                    if w[s]:
                        c_blocks[(index, i)] = w[s]
                index += 1
        return self._from_scalars(K, X, iota_blocks), self._from_scalars(Y, Q, c_blocks)

    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        structure = self.structure
        cat = structure.category
        n = structure.n
        iota, c = self.kernel_and_cokernel(f)
        K, Q = iota.domain, c.codomain
        SK = structure.suspend_object(K)
        SX = structure.suspend_object(f.domain)
        wrap = structure.suspend(iota).scale(structure.sign)
        if n == 3:
            second = cat.block_matrix([f.codomain], [Q, SK], {(0, 0): c})
            last = cat.block_matrix([Q, SK], [SX], {(0, 1): wrap})
            return SearchOutcome(NSequence.of(structure, [f, second, last]), False, 1)
        objects = [f.domain, f.codomain, Q] + [ZERO] * (n - 4) + [SK]
        maps = [f, c]
        for i in range(2, n - 1):
            maps.append(cat.zero(objects[i], objects[i + 1]))
        maps.append(wrap)
        return SearchOutcome(NSequence.of(structure, maps), False, 1)


class WrapExactClass(AngleClass):
    """Sequences whose wrapped-around Hom(G, -) sequences are exact.

    Completion is a depth-first search over objects within the cap and
    morphisms in lexicographic order, pruned by exactness at each new
    position. A completion may need larger objects than the cap allows,
    so a failed search is only definite when the budget is declared
    exhaustive.
    """

    name = "wrap-exact"

    def membership(self, seq: NSequence, budget: Budget) -> str:
        return Membership.IN if is_hom_exact(seq, COVARIANT) else Membership.OUT

    def _exact_everywhere(self, a: Morphism, b: Morphism, probes: Sequence[ObjectExpr]) -> bool:
        return all(exact_at(a, b, probe) for probe in probes)

    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        structure = self.structure
        cat = structure.category
        n = structure.n
        probes = list(structure.generator_objects())
        candidates = structure.objects(budget.cap_objects)
        final = structure.suspend_object(f.domain)
        limit = max(Config.WRAP_DFS_NODE_LIMIT, budget.cap_solutions)
        state = {'nodes': 0, 'truncated': False}

        def extend(maps: List[Morphism]) -> Optional[NSequence]:
            current = maps[-1].codomain
            targets = [final] if len(maps) == n - 1 else candidates
            for obj in targets:
                for h in cat.hom_elements(current, obj):
                    state['nodes'] += 1
                    if state['nodes'] > limit:
                        state['truncated'] = True
                        return None
                    if not self._exact_everywhere(maps[-1], h, probes):
                        continue
                    if len(maps) == n - 1:
                        seq = NSequence.of(structure, maps + [h])
                        if is_hom_exact(seq, COVARIANT, probes):
                            return seq
                        continue
                    found = extend(maps + [h])
                    if found is not None or state['truncated']:
                        return found
            return None

        seq = extend([f])
        if seq is None:
            logger.debug("no wrap-exact completion found after %d nodes", state['nodes'])
        capped = state['truncated'] or not budget.exhaustive
        return SearchOutcome(seq, seq is None and capped, state['nodes'])


class ListedAngleClass(AngleClass):
    """Sequences isomorphic to one of a listed set of members."""

    name = "list"

    def __init__(self, structure: AngulatedStructure, members: Sequence[NSequence]):
        super().__init__(structure)
        self.members: Tuple[NSequence, ...] = tuple(members)

    def membership(self, seq: NSequence, budget: Budget) -> str:
        undecided = False
        for member in self.members:
            if member.multiset() != seq.multiset():
                continue
            outcome = sequence_isomorphism(seq, member, budget.cap_solutions, budget.seed)
            if outcome.found:
                return Membership.IN
            undecided = undecided or outcome.exhausted
        return Membership.INCONCLUSIVE if undecided else Membership.OUT

    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        exhausted, spent = False, 0
        for member in self.members:
            outcome = transport_first_map(member, f, budget.cap_solutions, budget.seed)
            spent += outcome.spent
            if outcome.found:
                return SearchOutcome(outcome.value, False, spent)
            exhausted = exhausted or outcome.exhausted
        return SearchOutcome(None, exhausted, spent)

    def enumerate(self, budget: Budget) -> Iterator[NSequence]:
        for member in self.members:
            if member.max_size() <= budget.cap_objects:
                yield member


class RestrictedAngleClass(AngleClass):
    """Members of a base class with every term in Z.

    With require_zero_connecting only members whose connecting map f_n
    vanishes are admitted.
    """

    def __init__(self, base: AngleClass, subcategory: Subcategory, require_zero_connecting: bool = False):
        super().__init__(base.structure)
        self.base = base
        self.subcategory = subcategory
        self.require_zero_connecting = require_zero_connecting
        self.name = f"{base.name}|Z" + ("|f_n=0" if require_zero_connecting else "")

    def objects(self, cap: int) -> List[ObjectExpr]:
        return self.structure.objects(cap, self.subcategory.generators)

    def generator_objects(self) -> List[ObjectExpr]:
        return [ObjectExpr.of(g) for g in self.subcategory.sorted()]

    def admits(self, seq: NSequence) -> bool:
        if not all(self.subcategory.contains(obj) for obj in seq.objects):
            return False
        return not self.require_zero_connecting or seq.last.is_zero()

    def membership(self, seq: NSequence, budget: Budget) -> str:
        if not self.admits(seq):
            return Membership.OUT
        return self.base.membership(seq, budget)

    def complete(self, f: Morphism, budget: Budget) -> SearchOutcome:
        if not (self.subcategory.contains(f.domain) and self.subcategory.contains(f.codomain)):
            return SearchOutcome(None, False, 0)
        outcome = self.base.complete(f, budget)
        if outcome.found and not self.admits(outcome.value):
            return SearchOutcome(None, True, outcome.spent)
        return outcome

    def enumerate(self, budget: Budget) -> Iterator[NSequence]:
        for seq in super().enumerate(budget):
            if self.admits(seq):
                yield seq
