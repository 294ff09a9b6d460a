"""
Parser for the line-oriented category file format.

    field p=2
    n=4
    name dual-numbers
    gen P
    hom P P dim=2 basis=id,x
    comp id id = id
    comp x id = x
    comp id x = x
    id P = id
    rel x x = 0
    sigma gen P -> P
    sigma hom id -> id
    sigma hom x -> x
    angles wrap-exact
    sub Z = P
    sub D =

`comp b1 b2 = c` gives the composite b1 o b2; omitted composites are 0.
Identities may be omitted and are then solved from the unit laws. `rel`
lines are checked against the composition table. With `angles list` the
members follow as `seq` lines, one sequence per line:

    seq s0|s0|0|s0 : 1 ; - ; - ; -

objects are `+`-joined generator names (`0` for the zero object) and
each map is its coordinate list, `-` when empty. `fixed <gen> : ...` and
`cofixed <gen> : ...` lines supply mutation pair witness angles.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..angles import AngleClass, AngulatedStructure, ListedAngleClass, NSequence, SplitAngleClass, WrapExactClass
from ..category import ObjectExpr, PresentedCategory, Shift, Subcategory, SuspensionFunctor
from ..config import AngleOracle, Config, parse_generator_list
from ..errors import CategoryFileError, PreconditionError, PresentationError
from ..ffmat import FpMatrix, solve_vector
from ..mutation import MutationPairWitness

logger = logging.getLogger(__name__)

_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?([A-Za-z_][\w']*)$")


@dataclass
class Line:
    number: int
    text: str

    def error(self, message: str, token: Optional[str] = None) -> CategoryFileError:
        column = self.text.find(token) + 1 if token and token in self.text else None
        return CategoryFileError(message, self.number, column)


@dataclass
class CategoryFile:
    """A parsed and validated category file."""
    structure: AngulatedStructure
    angles: AngleClass
    oracle: str
    Z: Subcategory
    D: Subcategory
    name: str = ""
    fixed: Dict[int, NSequence] = field(default_factory=dict)
    cofixed: Dict[int, NSequence] = field(default_factory=dict)
    relations: List[Tuple[str, str, str]] = field(default_factory=list)

    @property
    def category(self) -> PresentedCategory:
        return self.structure.category

    @property
    def suspension(self):
        return self.structure.shift.forward

    def witness(self) -> Optional[MutationPairWitness]:
        """The supplied witness angles, if any were given."""
        if not self.fixed and not self.cofixed:
            return None
        return MutationPairWitness(self.structure, self.Z, self.D, dict(self.fixed), dict(self.cofixed))


class _Builder:
    """Collects declarations before the category can be assembled."""

    def __init__(self):
        self.p: Optional[int] = None
        self.n: Optional[int] = None
        self.name = ""
        self.generators: List[str] = []
        self.homs: Dict[Tuple[int, int], List[str]] = {}
        self.basis_owner: Dict[str, Tuple[int, int, int]] = {}
        self.comp_lines: List[Tuple[Line, str, str, str]] = []
        self.id_lines: List[Tuple[Line, str, str]] = []
        self.rel_lines: List[Tuple[Line, str, str, str]] = []
        self.sigma_gens: Dict[int, Tuple[Line, int]] = {}
        self.sigma_homs: Dict[str, Tuple[Line, str]] = {}
        self.oracle: Optional[str] = None
        self.subs: Dict[str, Tuple[Line, List[str]]] = {}
        self.seq_lines: List[Tuple[Line, str]] = []
        self.witness_lines: List[Tuple[Line, str, str, str]] = []

    def generator(self, line: Line, name: str) -> int:
        try:
            return self.generators.index(name)
        except ValueError:
            raise line.error(f"unknown generator {name}", name) from None

    def basis(self, line: Line, name: str) -> Tuple[int, int, int]:
        owner = self.basis_owner.get(name)
        if owner is None:
            raise line.error(f"unknown basis morphism {name}", name)
        return owner


def _combination(line: Line, text: str, builder: _Builder, hom: Tuple[int, int], p: int) -> np.ndarray:
    """Coordinates of a linear combination such as `id + 2 x` in Hom(g, h)."""
    dim = len(builder.homs.get(hom, []))
    coords = np.zeros(dim, dtype=np.int64)
    text = text.strip()
    if text in ("", "0"):
        return coords
    for sign, term in re.findall(r"([+-]?)\s*([^+-]+)", text):
        term = term.strip()
        match = _TERM.match(term)
        if not match:
            raise line.error(f"malformed term '{term}'", term)
        scalar = int(match.group(1)) if match.group(1) else 1
        name = match.group(2)
        g, h, index = builder.basis(line, name)
        if (g, h) != hom:
            source, target = builder.generators[hom[0]], builder.generators[hom[1]]
            raise line.error(f"{name} is not a basis morphism of Hom({source}, {target})", name)
        coords[index] += -scalar if sign == "-" else scalar
    return coords % p


def _object(line: Line, text: str, builder: _Builder) -> ObjectExpr:
    text = text.strip()
    if text == "0":
        return ObjectExpr()
    return ObjectExpr(tuple(builder.generator(line, part.strip()) for part in text.split("+")))


def _sequence(line: Line, body: str, builder: _Builder, structure: AngulatedStructure) -> NSequence:
    """`obj|obj|... : coords ; coords ; ...` as an n-sequence."""
    if ":" not in body:
        raise line.error("expected '<objects> : <maps>'")
    objects_text, maps_text = body.split(":", 1)
    objects = [_object(line, part, builder) for part in objects_text.split("|")]
    n = structure.n
    if len(objects) != n:
        raise line.error(f"a sequence needs {n} objects, got {len(objects)}")
    parts = [part.strip() for part in maps_text.split(";")]
    if len(parts) != n:
        raise line.error(f"a sequence needs {n} maps, got {len(parts)}")
    cat = structure.category
    targets = objects[1:] + [structure.suspend_object(objects[0])]
    maps = []
    for source, target, part in zip(objects, targets, parts):
        values = [] if part == "-" else part.split()
        size = cat.layout(source, target).size
        if len(values) != size:
            raise line.error(f"map needs {size} coordinates, got {len(values)}", part or None)
        try:
            maps.append(cat.morphism(source, target, [int(v) for v in values]))
        except ValueError:
            raise line.error(f"coordinates must be integers: '{part}'", part) from None
    try:
        return NSequence(structure, tuple(objects), tuple(maps))
    except PreconditionError as error:
        raise line.error(str(error)) from None


def _key_value(line: Line, token: str, key: str) -> str:
    if not token.startswith(f"{key}="):
        raise line.error(f"expected {key}=...", token)
    return token[len(key) + 1:]


def _read_declarations(text: str) -> _Builder:
    builder = _Builder()
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        line = Line(number, raw)
        keyword, _, rest = stripped.partition(" ")
        rest = rest.strip()
        if keyword == "field":
            value = _key_value(line, rest, "p")
            if not value.isdigit() or int(value) not in Config.SUPPORTED_PRIMES:
                raise line.error(f"p must be one of {Config.SUPPORTED_PRIMES}", value or None)
            builder.p = int(value)
        elif keyword.startswith("n="):
            value = keyword[2:]
            if not value.isdigit() or int(value) < Config.MIN_N:
                raise line.error(f"n must be an integer >= {Config.MIN_N}", keyword)
            builder.n = int(value)
        elif keyword == "name":
            builder.name = rest
        elif keyword == "gen":
            if not re.fullmatch(r"[A-Za-z_][\w']*", rest):
                raise line.error(f"invalid generator name '{rest}'", rest or None)
            if rest in builder.generators:
                raise line.error(f"generator {rest} declared twice", rest)
            builder.generators.append(rest)
        elif keyword == "hom":
            tokens = rest.split()
            if len(tokens) not in (3, 4):
                raise line.error("expected 'hom <g> <h> dim=<d> basis=<names>'")
            g, h = builder.generator(line, tokens[0]), builder.generator(line, tokens[1])
            dim_text = _key_value(line, tokens[2], "dim")
            if not dim_text.isdigit():
                raise line.error("dim must be a non-negative integer", tokens[2])
            names = parse_generator_list(_key_value(line, tokens[3], "basis")) if len(tokens) == 4 else []
            if len(names) != int(dim_text):
                raise line.error(f"dim={dim_text} but {len(names)} basis names given", tokens[-1])
            if (g, h) in builder.homs:
                raise line.error(f"Hom({tokens[0]}, {tokens[1]}) declared twice", tokens[0])
            for index, name in enumerate(names):
                if name in builder.basis_owner:
                    raise line.error(f"basis name {name} used twice", name)
                builder.basis_owner[name] = (g, h, index)
            builder.homs[(g, h)] = names
        elif keyword in ("comp", "rel"):
            left, sep, right = rest.partition("=")
            names = left.split()
            if not sep or len(names) != 2:
                raise line.error(f"expected '{keyword} <b1> <b2> = <combination>'")
            target = builder.comp_lines if keyword == "comp" else builder.rel_lines
            target.append((line, names[0], names[1], right))
        elif keyword == "id":
            left, sep, right = rest.partition("=")
            if not sep:
                raise line.error("expected 'id <g> = <combination>'")
            builder.id_lines.append((line, left.strip(), right))
        elif keyword == "sigma":
            kind, _, mapping = rest.partition(" ")
            source, arrow, target = mapping.partition("->")
            if not arrow:
                raise line.error("expected 'sigma gen|hom <source> -> <target>'")
            if kind == "gen":
                g = builder.generator(line, source.strip())
                if g in builder.sigma_gens:
                    raise line.error(f"Σ image of {source.strip()} declared twice", source.strip())
                builder.sigma_gens[g] = (line, builder.generator(line, target.strip()))
            elif kind == "hom":
                builder.sigma_homs[source.strip()] = (line, target)
            else:
                raise line.error(f"unknown sigma kind '{kind}'", kind or None)
        elif keyword == "angles":
            oracle = rest.split()[0] if rest else ""
            if oracle not in (AngleOracle.SPLIT, AngleOracle.WRAP_EXACT, AngleOracle.LIST):
                raise line.error(f"unknown angle oracle '{oracle}'", oracle or None)
            builder.oracle = oracle
        elif keyword == "sub":
            left, sep, right = rest.partition("=")
            label = left.strip()
            if not sep or label not in ("Z", "D"):
                raise line.error("expected 'sub Z = <gens>' or 'sub D = <gens>'")
            builder.subs[label] = (line, parse_generator_list(right))
        elif keyword == "seq":
            builder.seq_lines.append((line, rest))
        elif keyword in ("fixed", "cofixed"):
            head, sep, body = rest.partition(":")
            if not sep:
                raise line.error(f"expected '{keyword} <gen> : <sequence>'")
            builder.witness_lines.append((line, keyword, head.strip(), body))
        else:
            raise line.error(f"unknown keyword '{keyword}'", keyword)
    return builder


def _composition(builder: _Builder, p: int) -> Dict[Tuple[int, int, int], np.ndarray]:
    m = len(builder.generators)

    def dim(g: int, h: int) -> int:
        return len(builder.homs.get((g, h), []))

    tensors = {}
    for g, h, k in itertools.product(range(m), repeat=3):
        if dim(g, h) and dim(h, k) and dim(g, k):
            tensors[(g, h, k)] = np.zeros((dim(h, k), dim(g, h), dim(g, k)), dtype=np.int64)
    for line, left, right, combination in builder.comp_lines:
        h, k, b = builder.basis(line, left)
        g, h2, a = builder.basis(line, right)
        if h != h2:
            raise line.error(f"{left} and {right} are not composable", left)
        values = _combination(line, combination, builder, (g, k), p)
        if (g, h, k) in tensors:
            tensors[(g, h, k)][b, a] = values
        elif values.any():
            raise line.error(f"{left} o {right} lands in a zero Hom space", left)
    return tensors


def _infer_identity(builder: _Builder, g: int, composition, p: int) -> np.ndarray:
    """Solve e o a = a and b o e = b for every basis morphism a into and b out of g."""
    m = len(builder.generators)
    d = len(builder.homs.get((g, g), []))
    rows, rhs = [], []
    for h in range(m):
        tensor = composition.get((h, g, g))
        if tensor is not None:
            for a in range(tensor.shape[1]):
                rows.append(tensor[:, a, :].T)
                rhs.append(np.eye(tensor.shape[2], dtype=np.int64)[a])
        tensor = composition.get((g, g, h))
        if tensor is not None:
            for b in range(tensor.shape[0]):
                rows.append(tensor[b, :, :].T)
                rhs.append(np.eye(tensor.shape[2], dtype=np.int64)[b])
    if not rows:
        return np.zeros(d, dtype=np.int64)
    solution = solve_vector(FpMatrix(p, np.vstack(rows)), np.concatenate(rhs))
    if solution is None:
        raise CategoryFileError(f"no identity morphism exists for {builder.generators[g]}")
    return solution


def _identities(builder: _Builder, composition, p: int) -> Dict[int, np.ndarray]:
    given = {}
    for line, name, combination in builder.id_lines:
        g = builder.generator(line, name)
        given[g] = _combination(line, combination, builder, (g, g), p)
    return {
        g: given[g] if g in given else _infer_identity(builder, g, composition, p)
        for g in range(len(builder.generators))
    }


def _check_relations(builder: _Builder, category: PresentedCategory, p: int) -> List[Tuple[str, str, str]]:
    relations = []
    for line, left, right, combination in builder.rel_lines:
        h, k, b = builder.basis(line, left)
        g, h2, a = builder.basis(line, right)
        if h != h2:
            raise line.error(f"{left} and {right} are not composable", left)
        expected = _combination(line, combination, builder, (g, k), p)
        actual = category.comp_tensor(g, h, k)[b, a] if category.hom_dim(g, k) else np.zeros(0, dtype=np.int64)
        if not np.array_equal(actual % p, expected):
            raise line.error(
                f"associativity/unit consistency: declared relation {left} o {right} = {combination.strip()} "
                f"conflicts with the composition table",
                left,
            )
        relations.append((left, right, combination.strip()))
    return relations


def _suspension(builder: _Builder, category: PresentedCategory, p: int) -> SuspensionFunctor:
    m = len(builder.generators)
    if not builder.sigma_gens and not builder.sigma_homs:
        return SuspensionFunctor.identity_on(category)
    missing = [builder.generators[g] for g in range(m) if g not in builder.sigma_gens]
    if missing:
        raise CategoryFileError(f"Σ image missing for generators {', '.join(missing)}")
    for name, (line, _) in builder.sigma_homs.items():
        builder.basis(line, name)
    permutation = [builder.sigma_gens[g][1] for g in range(m)]
    hom_maps = {}
    for g, h in itertools.product(range(m), repeat=2):
        names = builder.homs.get((g, h), [])
        target = (permutation[g], permutation[h])
        columns = []
        for name in names:
            if name not in builder.sigma_homs:
                raise CategoryFileError(f"Σ image missing for basis morphism {name}")
            line, combination = builder.sigma_homs[name]
            columns.append(_combination(line, combination, builder, target, p))
        hom_maps[(g, h)] = FpMatrix.from_columns(p, columns, len(builder.homs.get(target, [])))
    try:
        return SuspensionFunctor(category, permutation, hom_maps).validate()
    except PresentationError as error:
        line = next(iter(builder.sigma_gens.values()))[0]
        raise CategoryFileError(str(error), line.number) from None


def _subcategory(builder: _Builder, label: str, default: Sequence[int]) -> Subcategory:
    if label not in builder.subs:
        return Subcategory.of(default)
    line, names = builder.subs[label]
    return Subcategory.of(builder.generator(line, name) for name in names)


def _angle_class(builder: _Builder, structure: AngulatedStructure) -> AngleClass:
    oracle = builder.oracle
    if oracle == AngleOracle.LIST:
        members = [_sequence(line, body, builder, structure) for line, body in builder.seq_lines]
        return ListedAngleClass(structure, members)
    if builder.seq_lines:
        raise builder.seq_lines[0][0].error("seq lines need 'angles list'")
    if oracle == AngleOracle.SPLIT:
        try:
            return SplitAngleClass(structure)
        except PresentationError as error:
            raise CategoryFileError(str(error)) from None
    return WrapExactClass(structure)


def parse_category_file(text: str, n: Optional[int] = None) -> CategoryFile:
    """Parse and validate a category file; n overrides the file's n= line."""
    builder = _read_declarations(text)
    if builder.p is None:
        raise CategoryFileError("missing 'field p=<prime>' header")
    n = n if n is not None else builder.n
    if n is None:
        raise CategoryFileError("missing 'n=<int>' header")
    if n < Config.MIN_N:
        raise CategoryFileError(f"n must be at least {Config.MIN_N}")
    if builder.oracle is None:
        raise CategoryFileError("missing 'angles <oracle>' line")
    p = builder.p
    composition = _composition(builder, p)
    identities = _identities(builder, composition, p)
    basis_names = {key: names for key, names in builder.homs.items()}
    category = PresentedCategory(p, builder.generators, basis_names, composition, identities, name=builder.name)
    try:
        category.validate()
    except PresentationError as error:
        raise CategoryFileError(str(error)) from None
    relations = _check_relations(builder, category, p)
    sigma = _suspension(builder, category, p)
    structure = AngulatedStructure(category, Shift.from_automorphism(sigma), n)
    angles = _angle_class(builder, structure)
    everything = list(category.generators())
    Z = _subcategory(builder, "Z", everything)
    D = _subcategory(builder, "D", [])
    parsed = CategoryFile(structure, angles, builder.oracle, Z, D, builder.name, relations=relations)
    for line, kind, name, body in builder.witness_lines:
        g = builder.generator(line, name)
        table = parsed.fixed if kind == "fixed" else parsed.cofixed
        table[g] = _sequence(line, body, builder, structure)
    logger.info("parsed category %s: %d generators, p=%d, n=%d, angles %s",
                builder.name or "<unnamed>", len(builder.generators), p, n, builder.oracle)
    return parsed


def read_category_file(path: str, n: Optional[int] = None) -> CategoryFile:
    with open(path, encoding="utf-8") as handle:
        return parse_category_file(handle.read(), n)

