import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.errors import FieldError
from src.ffmat import (
    FpMatrix,
    in_span,
    inverse,
    kernel_basis,
    lexicographic_complement,
    rank,
    search_points,
    solve_linear,
)


def square_matrices(p, size):
    return st.lists(
        st.lists(st.integers(min_value=0, max_value=p - 1), min_size=size, max_size=size),
        min_size=size,
        max_size=size,
    )


def test_unsupported_modulus_is_rejected():
    with pytest.raises(FieldError):
        FpMatrix(4, [[1]])


def test_entries_are_reduced():
    A = FpMatrix(3, [[4, -1], [6, 2]])
    assert A.to_rows() == [[1, 2], [0, 2]]


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(FpMatrix(2, rows)) == 1
    assert rank(FpMatrix(3, rows)) == 2


def test_kernel_vectors_are_annihilated():
    A = FpMatrix(2, [[1, 1, 0], [0, 1, 1]])
    kernel = kernel_basis(A)
    assert len(kernel) == 1
    for v in kernel:
        assert not (A @ v).any()


def test_infeasible_system_has_no_solution():
    A = FpMatrix(5, [[1, 0], [0, 0]])
    assert solve_linear(A, [0, 1]) is None


def test_solution_set_size():
    A = FpMatrix(3, [[1, 1, 0]])
    solution = solve_linear(A, [2])
    assert solution is not None
    assert solution.dimension == 2
    assert solution.size == 9
    assert all((A @ point)[0] == 2 for point in solution.iter_points())


@settings(max_examples=60)
@given(rows=square_matrices(3, 3))
def test_inverse_is_two_sided(rows):
    A = FpMatrix(3, rows)
    inv = inverse(A)
    if rank(A) < 3:
        assert inv is None
    else:
        assert A @ inv == FpMatrix.identity(3, 3)
        assert inv @ A == FpMatrix.identity(3, 3)


def test_in_span_and_complement():
    basis = [np.array([1, 1, 0])]
    assert in_span(2, basis, np.array([1, 1, 0]))
    assert not in_span(2, basis, np.array([1, 0, 0]))
    assert lexicographic_complement(2, basis, 3) == [0, 2]


def test_search_points_covers_small_sets_exhaustively():
    A = FpMatrix(2, [[1, 1]])
    solution = solve_linear(A, [0])
    point, exhausted, spent = search_points(solution, lambda v: bool(v[0]), limit=16)
    assert point is not None and list(point) == [1, 1]
    assert not exhausted

    point, exhausted, _ = search_points(solution, lambda v: False, limit=16)
    assert point is None
    assert not exhausted


def test_search_points_reports_truncation():
    A = FpMatrix.zeros(2, 1, 6)
    solution = solve_linear(A, [0])
    point, exhausted, spent = search_points(solution, lambda v: False, limit=4, seed=1)
    assert point is None
    assert exhausted
    assert spent > 0
