from bfx import Subcube, and_, xor
from bfx.trees import CubeQuery, ParityQuery, Query, leaf, rank, run, size, to_dict, to_truth_table, depth


def caterpillar(n: int):
    """The AND_n tree that reads x_1, x_2, ... and stops at the first 0."""
    node = leaf(1)
    for i in range(n, 0, -1):
        node = Query(i, leaf(0), node)
    return node


def test_caterpillar_and():
    t = caterpillar(4)
    assert to_truth_table(t, 4) == and_(4)
    assert depth(t) == 4 and rank(t) == 1 and size(t) == 9
    assert run(t, (1, 1, 0, 1)) == (0, 3)


def test_complete_tree_rank_equals_depth():
    def full(i, n, parity):
        if i > n:
            return leaf(parity)
        return Query(i, full(i + 1, n, parity), full(i + 1, n, parity ^ 1))

    t = full(1, 3, 0)
    assert to_truth_table(t, 3) == xor(3)
    assert rank(t) == depth(t) == 3


def test_cube_and_parity_nodes():
    c = CubeQuery(Subcube(4, {1: 1, 2: 1, 3: 1, 4: 1}), leaf(0), leaf(1))
    assert to_truth_table(c, 4) == and_(4)
    p = ParityQuery((1, 2, 3), leaf(0), leaf(1))
    assert to_truth_table(p, 3) == xor(3)
    assert to_dict(c) == {"cube": {"1": 1, "2": 1, "3": 1, "4": 1}, "out": {"leaf": 0}, "in": {"leaf": 1}}
    assert to_dict(p)["parity"] == [1, 2, 3]


def test_leaf_tree():
    assert depth(leaf(1)) == 0 and rank(leaf(1)) == 0 and run(leaf(1), 0) == (1, 0)
