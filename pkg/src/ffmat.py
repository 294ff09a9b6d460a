"""
Exact linear algebra over small prime fields F_p.

Hom spaces are tiny, so everything is dense numpy integer arithmetic
reduced mod p after each step.
"""

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .config import Config
from .errors import FieldError


def check_modulus(p: int) -> int:
    """Reject moduli outside the supported primes."""
    if p not in Config.SUPPORTED_PRIMES:
        raise FieldError(f"unsupported modulus {p}; expected one of {Config.SUPPORTED_PRIMES}")
    return p


class FpMatrix:
    """Dense matrix over F_p with residues in [0, p), row-major."""

    __slots__ = ("p", "data")

    def __init__(self, p: int, data):
        check_modulus(p)
        array = np.array(data, dtype=np.int64)
        if array.ndim != 2:
            raise FieldError(f"FpMatrix needs 2-D data, got shape {array.shape}")
        array = array % p
        array.setflags(write=False)
        self.p = p
        self.data = array

    @classmethod
    def zeros(cls, p: int, rows: int, cols: int) -> "FpMatrix":
        return cls(p, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, p: int, size: int) -> "FpMatrix":
        return cls(p, np.eye(size, dtype=np.int64))

    @classmethod
    def from_columns(cls, p: int, columns: Sequence[np.ndarray], rows: int) -> "FpMatrix":
        if not columns:
            return cls.zeros(p, rows, 0)
        return cls(p, np.stack([np.asarray(c, dtype=np.int64).reshape(rows) for c in columns], axis=1))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix(self.p, self.data.T)

    def entries(self) -> List[int]:
        """Row-major entry list."""
        return [int(v) for v in self.data.reshape(-1)]

    def to_rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.data]

    def column(self, j: int) -> np.ndarray:
        return self.data[:, j].copy()

    def is_zero(self) -> bool:
        return not self.data.any()

    def _same_field(self, other: "FpMatrix") -> None:
        if self.p != other.p:
            raise FieldError(f"modulus mismatch: {self.p} vs {other.p}")

    def __matmul__(self, other):
        if isinstance(other, FpMatrix):
            self._same_field(other)
            if self.cols != other.rows:
                raise FieldError(f"shape mismatch: {self.shape} @ {other.shape}")
            return FpMatrix(self.p, self.data @ other.data)
        vec = np.asarray(other, dtype=np.int64).reshape(-1)
        if vec.shape[0] != self.cols:
            raise FieldError(f"shape mismatch: {self.shape} @ vector of length {vec.shape[0]}")
        return (self.data @ vec) % self.p

    def __add__(self, other: "FpMatrix") -> "FpMatrix":
        self._same_field(other)
        if self.shape != other.shape:
            raise FieldError(f"shape mismatch: {self.shape} + {other.shape}")
        return FpMatrix(self.p, self.data + other.data)

    def __sub__(self, other: "FpMatrix") -> "FpMatrix":
        return self + (-other)

    def __neg__(self) -> "FpMatrix":
        return FpMatrix(self.p, -self.data)

    def scale(self, scalar: int) -> "FpMatrix":
        return FpMatrix(self.p, self.data * int(scalar))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.p, self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"FpMatrix(p={self.p}, rows={self.to_rows()})"

    @staticmethod
    def hstack(p: int, blocks: Sequence["FpMatrix"], rows: int) -> "FpMatrix":
        if not blocks:
            return FpMatrix.zeros(p, rows, 0)
        return FpMatrix(p, np.hstack([b.data for b in blocks]))

    @staticmethod
    def vstack(p: int, blocks: Sequence["FpMatrix"], cols: int) -> "FpMatrix":
        if not blocks:
            return FpMatrix.zeros(p, 0, cols)
        return FpMatrix(p, np.vstack([b.data for b in blocks]))


def _row_reduce(data: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = np.array(data, dtype=np.int64) % p
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(m[r:, c])[0]
        if nonzero.size == 0:
            continue
        pivot = r + int(nonzero[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % p
        pivots.append(c)
        r += 1
    return m, pivots


def _kernel_from_rref(reduced: np.ndarray, pivots: List[int], cols: int, p: int) -> List[np.ndarray]:
    pivot_set = set(pivots)
    basis = []
    for free in range(cols):
        if free in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[free] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-reduced[row, free]) % p
        basis.append(v)
    return basis


def rank(A: FpMatrix) -> int:
    """Rank by Gaussian elimination."""
    return len(_row_reduce(A.data, A.p)[1])


def kernel_basis(A: FpMatrix) -> List[np.ndarray]:
    """Basis of ker(A), ordered by free column."""
    reduced, pivots = _row_reduce(A.data, A.p)
    return _kernel_from_rref(reduced, pivots, A.cols, A.p)


def image_basis(A: FpMatrix) -> List[np.ndarray]:
    """Basis of the column space: the pivot columns of A."""
    _, pivots = _row_reduce(A.data, A.p)
    return [A.column(c) for c in pivots]


@dataclass
class LinearSolution:
    """Affine solution set particular + span(kernel) of a linear system."""
    p: int
    particular: np.ndarray
    kernel: List[np.ndarray] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.kernel)

    @property
    def size(self) -> int:
        return self.p ** len(self.kernel)

    def point(self, coefficients: Sequence[int]) -> np.ndarray:
        x = self.particular.copy()
        for c, v in zip(coefficients, self.kernel):
            if c:
                x = x + int(c) * v
        return x % self.p

    def iter_coefficients(self, limit: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        """Kernel coefficients in lexicographic order, zero vector first."""
        combos = itertools.product(range(self.p), repeat=len(self.kernel))
        return itertools.islice(combos, limit) if limit is not None else combos

    def iter_points(self, limit: Optional[int] = None) -> Iterator[np.ndarray]:
        for coefficients in self.iter_coefficients(limit):
            yield self.point(coefficients)

    def exhausted_by(self, limit: int) -> bool:
        """True when limit points cover the whole solution set."""
        return self.size <= limit

    def sample_points(self, rng: np.random.Generator, count: int) -> Iterator[np.ndarray]:
        for _ in range(count):
            coefficients = rng.integers(0, self.p, size=len(self.kernel))
            yield self.point(coefficients)


def solve_linear(A: FpMatrix, b) -> Optional[LinearSolution]:
    """Solve A x = b; None when the system is infeasible."""
    rhs = np.asarray(b, dtype=np.int64).reshape(-1)
    if rhs.shape[0] != A.rows:
        raise FieldError(f"shape mismatch: {A.rows} rows vs right-hand side of length {rhs.shape[0]}")
    augmented = np.hstack([A.data, rhs.reshape(-1, 1)]) if A.rows else np.zeros((0, A.cols + 1), dtype=np.int64)
    reduced, pivots = _row_reduce(augmented, A.p)
    if pivots and pivots[-1] == A.cols:
        return None
    particular = np.zeros(A.cols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        particular[pc] = reduced[row, A.cols]
    kernel = _kernel_from_rref(reduced[:, :A.cols], pivots, A.cols, A.p)
    return LinearSolution(A.p, particular % A.p, kernel)


def solve_vector(A: FpMatrix, b) -> Optional[np.ndarray]:
    """One particular solution of A x = b, or None."""
    solution = solve_linear(A, b)
    return None if solution is None else solution.particular


def inverse(A: FpMatrix) -> Optional[FpMatrix]:
    """Two-sided inverse of a square matrix, or None."""
    if A.rows != A.cols:
        return None
    columns = []
    for j in range(A.rows):
        e = np.zeros(A.rows, dtype=np.int64)
        e[j] = 1
        x = solve_vector(A, e)
        if x is None:
            return None
        columns.append(x)
    return FpMatrix.from_columns(A.p, columns, A.rows)


def in_span(p: int, basis: Sequence[np.ndarray], v: np.ndarray) -> bool:
    """Membership of v in span(basis)."""
    vec = np.asarray(v, dtype=np.int64).reshape(-1) % p
    if not vec.any():
        return True
    if not basis:
        return False
    return solve_linear(FpMatrix.from_columns(p, basis, vec.shape[0]), vec) is not None


def span_basis(p: int, vectors: Sequence[np.ndarray], dim: int) -> List[np.ndarray]:
    """A basis of span(vectors) inside F_p^dim."""
    if not vectors:
        return []
    return image_basis(FpMatrix.from_columns(p, vectors, dim))


def lexicographic_complement(p: int, basis: Sequence[np.ndarray], dim: int) -> List[int]:
    """Indices of the first standard basis vectors completing span(basis) to F_p^dim."""
    current = list(span_basis(p, basis, dim))
    chosen = []
    for k in range(dim):
        e = np.zeros(dim, dtype=np.int64)
        e[k] = 1
        if not in_span(p, current, e):
            current.append(e)
            chosen.append(k)
    return chosen


def search_points(
    solution: LinearSolution,
    accept: Callable[[np.ndarray], bool],
    limit: int,
    seed: int = 0,
    preferred: Sequence[np.ndarray] = (),
) -> Tuple[Optional[np.ndarray], bool, int]:
    """Look for a point of the solution set passing accept.

    Preferred candidates are tried first. Small solution sets are covered
    lexicographically; larger ones are sampled with a seeded generator.
    Returns (point, exhausted, spent) where exhausted means the set was
    not fully covered.
    """
    spent = 0
    for candidate in preferred:
        spent += 1
        if accept(candidate):
            return candidate, False, spent
    if solution.exhausted_by(limit):
        for point in solution.iter_points():
            spent += 1
            if accept(point):
                return point, False, spent
        return None, False, spent
    rng = np.random.default_rng(seed)
    for point in itertools.chain(solution.iter_points(min(limit, solution.p + 1)), solution.sample_points(rng, limit)):
        spent += 1
        if accept(point):
            return point, True, spent
    return None, True, spent
