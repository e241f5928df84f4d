import pytest

import oracles
from bfx import TruthTable, and_, or_, xor
from bfx.core import index_point
from bfx.zebra import (
    NotZebra,
    enumerate_zebra,
    is_zebra,
    stripe_extremes,
    stripes,
    threshold_function,
    verify_zebra_facts,
    zebra_bound_checks,
)

# f(00)=0, f(10)=1, f(01)=0, f(11)=0: the two paths alternate 2 and 0 times
LOPSIDED = TruthTable(2, 0b0010)


def weight_points(n, w):
    return tuple(p for p in range(1 << n) if bin(p).count("1") == w)


def test_is_zebra_examples():
    for t in range(256):
        f = TruthTable(3, t)
        if f.is_monotone():
            assert is_zebra(f)
    for n in range(1, 6):
        assert is_zebra(xor(n))
    assert not is_zebra(LOPSIDED)
    assert sorted(oracles.path_alternations(oracles.values(LOPSIDED), 2)) == [0, 2]


def test_stripe_examples():
    sd = stripes(xor(3))
    assert sd.k == 3
    assert sd.stripes == tuple(weight_points(3, w) for w in range(4))
    sd = stripes(or_(3))
    assert sd.stripes == ((0,), tuple(range(1, 8)))
    sd = stripes(TruthTable.constant(3, 1))
    assert sd.stripes == (tuple(range(8)),) and sd.values == (1,)
    with pytest.raises(NotZebra):
        stripes(LOPSIDED)


def test_stripe_extreme_examples():
    assert stripe_extremes(xor(3), 1) == (weight_points(3, 1), weight_points(3, 1))
    assert stripe_extremes(or_(3), 1) == (weight_points(3, 1), (7,))
    with pytest.raises(ValueError):
        stripe_extremes(or_(3), 2)


def test_threshold_examples():
    assert threshold_function(xor(3), 0) == TruthTable.constant(3, 1)
    assert threshold_function(xor(2), 2) == and_(2)
    assert threshold_function(or_(3), 1) == or_(3)


def test_facts_examples():
    assert all(ok for _, ok in verify_zebra_facts(xor(4)))
    assert len(verify_zebra_facts(xor(4))) == 6
    assert verify_zebra_facts(LOPSIDED) == [("zebra", False)]


def test_monotone_n4_all_pass():
    count = 0
    for t in range(1 << 16):
        f = TruthTable(4, t)
        if f.is_monotone():
            count += 1
            assert all(ok for _, ok in verify_zebra_facts(f)), f
            assert all(ok for _, ok in zebra_bound_checks(f)), f
    assert count == 168  # Dedekind number M(4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_path_oracle(n):
    got = list(enumerate_zebra(n))
    expected = [t for t in range(1 << (1 << n)) if oracles.is_zebra(oracles.values(TruthTable(n, t)), n)]
    assert [f.bits for f in got] == expected
    assert all(is_zebra(f) for f in got)
    if n == 1:
        assert len(got) == 4


def test_parity_identity_by_oracle():
    # with f(0)=0, f(x) is the parity of the alternation up to x
    for f in enumerate_zebra(3):
        if f.at(0):
            continue
        v = oracles.values(f)
        for p in range(8):
            x = index_point(p, 3)
            sub_alt = _alt_to(v, 3, p)
            assert f(x) == sub_alt % 2


def _alt_to(v, n, target):
    """Alternation along one monotone path from 0^n to ``target``."""
    p, a = 0, 0
    for i in range(n):
        if target >> i & 1:
            q = p | (1 << i)
            a += v[p] != v[q]
            p = q
    return a
