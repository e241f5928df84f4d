import itertools

import pytest

import oracles
from bfx import Subcube, TruthTable, and_, compose, ind, or_, xor
from bfx import measures as M
from bfx.lifting import (
    Bipartition,
    bs_fbs_lifting_check,
    compose_with_indexing,
    deg_composition_check,
    dt_as_subcube_tree,
    rank_to_subcube_tree,
    simulate_lifted_dt,
    simulate_protocol,
    subcube_tree_to_ranked_dt,
)
from bfx.trees import CubeQuery, Query, depth, leaf, rank, to_truth_table

IDENT = TruthTable(1, 0b10)


def caterpillar(n):
    node = leaf(1)
    for i in range(n, 0, -1):
        node = Query(i, leaf(0), node)
    return node


def test_compose_with_indexing_examples():
    F, bp = compose_with_indexing(xor(2), 1)
    assert F.arity == 6 and bp.alice == (1, 4) and bp.bob == (2, 3, 5, 6)
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        assert F((0, a, b, 0, c, d)) == a ^ c
    F, _ = compose_with_indexing(IDENT, 1)
    assert F == ind(1)
    assert M.degree(compose_with_indexing(xor(2), 1)[0]) == 4


def test_bipartition_validation():
    with pytest.raises(ValueError):
        Bipartition((1, 2), (2, 3))
    with pytest.raises(ValueError):
        Bipartition((1,), (3,))
    assert Bipartition.from_alice(4, [3, 1]).bob == (2, 4)


@pytest.mark.parametrize("f, bound", [(xor(2), 4), (or_(2), 4)])
def test_bs_lifting_examples(f, bound):
    v = bs_fbs_lifting_check(f, 1)
    assert v.ok and v.bs_F <= bound == 2 * M.fractional_block_sensitivity(f)


def test_bs_lifting_constant():
    v = bs_fbs_lifting_check(TruthTable.constant(2, 1), 1)
    assert v.bs_F == 0 and v.ok


def test_bs_of_lifted_or_by_oracle():
    F, _ = compose_with_indexing(or_(2), 1)
    vals = oracles.values(F)

    def packing(blocks):
        for r in range(len(blocks), 0, -1):
            for combo in itertools.combinations(blocks, r):
                if all(not (a & b) for a, b in itertools.combinations(combo, 2)):
                    return r
        return 0

    ref = max(packing(oracles.minimal_blocks(vals, 6, p)) for p in range(64))
    assert bs_fbs_lifting_check(or_(2), 1).bs_F == ref == M.block_sensitivity(F)


@pytest.mark.parametrize("f, g, d", [(xor(2), xor(3), 6), (and_(2), or_(2), 4), (and_(3), IDENT, 3)])
def test_degree_composition_examples(f, g, d):
    v = deg_composition_check(f, g)
    assert v.ok and v.deg_fg == d
    assert v.deg_fg == oracles.degree(oracles.values(compose(f, g)), f.arity * g.arity)


def test_degree_of_indexing():
    assert M.degree(ind(1)) == 2 and M.degree(ind(2)) == 3


def test_rank_to_subcube_examples():
    st_ = rank_to_subcube_tree(caterpillar(4), 4)
    assert to_truth_table(st_, 4) == and_(4) and depth(st_) <= 1 * 3
    assert depth(rank_to_subcube_tree(leaf(0), 3)) == 0
    d, t = M.decision_tree_depth(xor(3))
    st_ = rank_to_subcube_tree(t, 3)
    assert to_truth_table(st_, 3) == xor(3) and depth(st_) <= 3 * 2


def test_rank_to_subcube_all_n3():
    for t in range(256):
        f = TruthTable(3, t)
        tree = M.min_rank_tree(f)
        st_ = rank_to_subcube_tree(tree, 3)
        assert to_truth_table(st_, 3) == f
        # floor(log2 d) + 1 == d.bit_length() for d >= 1
        assert depth(st_) <= rank(tree) * max(1, depth(tree).bit_length())


def test_subcube_to_ranked_examples():
    one = CubeQuery(Subcube(4, {1: 1, 2: 1, 3: 1, 4: 1}), leaf(0), leaf(1))
    dt = subcube_tree_to_ranked_dt(one)
    assert to_truth_table(dt, 4) == and_(4) and rank(dt) == 1
    assert rank(subcube_tree_to_ranked_dt(leaf(1))) == 0
    d, st_ = M.optimal_subcube_tree(xor(2))
    dt = subcube_tree_to_ranked_dt(st_)
    assert d == 2 and to_truth_table(dt, 2) == xor(2) and rank(dt) <= 2


def test_protocol_examples():
    st_ = CubeQuery(Subcube(4, {1: 1, 2: 1, 3: 1, 4: 1}), leaf(0), leaf(1))
    bp = Bipartition((1, 2), (3, 4))
    tr = simulate_protocol(st_, bp, (1, 1, 1, 1))
    assert tr.cost == 2 and tr.output == 1
    assert simulate_protocol(leaf(0), bp, 0).cost == 0
    d, st_ = M.optimal_subcube_tree(xor(3))
    bp = Bipartition.from_alice(3, [2])
    for p in range(8):
        tr = simulate_protocol(st_, bp, p)
        assert tr.output == xor(3).at(p) and tr.cost <= 2 * d


def test_lifted_dt_protocol():
    f = xor(2)
    F, _ = compose_with_indexing(f, 2)
    d, tree = M.decision_tree_depth(f)
    for x in range(1 << F.arity):
        tr = simulate_lifted_dt(tree, 2, x)
        assert tr.output == F.at(x) and tr.cost <= tr.budget == 3 * d


def test_dt_as_subcube_tree():
    d, tree = M.decision_tree_depth(and_(3))
    st_ = dt_as_subcube_tree(tree, 3)
    assert to_truth_table(st_, 3) == and_(3) and depth(st_) == d
