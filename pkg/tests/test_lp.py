from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfx.lp import Unbounded, simplex_max, vertex_enumeration_max


def test_textbook_lp():
    # max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3
    val, w = simplex_max([3, 2], [[1, 1], [1, 3], [1, 0]], [4, 6, 3])
    assert val == 11 and w == [3, 1]


def test_fractional_optimum():
    # three pairwise-overlapping blocks on three coordinates
    A = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    val, w = simplex_max([1, 1, 1], A, [1, 1, 1])
    assert val == Fraction(3, 2)
    assert w == [Fraction(1, 2)] * 3


def test_unbounded_and_bad_rhs():
    with pytest.raises(Unbounded):
        simplex_max([1, 1], [[1, -1]], [1])
    with pytest.raises(ValueError):
        simplex_max([1], [[1]], [-1])


@st.composite
def packing_lps(draw):
    m = draw(st.integers(1, 4))
    n = draw(st.integers(1, 4))
    A = [[draw(st.integers(0, 3)) for _ in range(n)] for _ in range(m)]
    # every column needs a positive entry for boundedness
    for j in range(n):
        if not any(A[r][j] for r in range(m)):
            A[0][j] = 1
    b = [draw(st.integers(0, 5)) for _ in range(m)]
    c = [draw(st.integers(0, 4)) for _ in range(n)]
    return c, A, b


@settings(max_examples=200, deadline=None)
@given(packing_lps())
def test_simplex_matches_vertex_enumeration(lp):
    c, A, b = lp
    val, w = simplex_max(c, A, b)
    assert val == vertex_enumeration_max(c, A, b)
    assert all(x >= 0 for x in w)
    assert all(sum(a * x for a, x in zip(row, w)) <= r for row, r in zip(A, b))
    assert sum(ci * x for ci, x in zip(c, w)) == val
