"""Exact complexity measures of explicit truth tables.

Per-point quantities (sensitivity, block sensitivity, fractional block
sensitivity, certificate complexity) are all read off the *sensitivity set*
of a point ``x``: the coordinate masks ``B`` with ``f(x ^ B) != f(x)``. That
set is a table over ``{0,1}^n`` obtained by translating ``f`` by ``x``, so
points of different functions that look alike share one cached computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import csv
import io
import json
import math
from typing import Sequence

import numpy as np

from . import _bits, lp
from .core import (
    CapExceeded,
    Subcube,
    TruthTable,
    alt_bits,
    check_cap,
    degree_of,
    index_point,
    point_index,
)
from .trees import CubeQuery, Leaf, ParityQuery, Query, leaf

# hard arity caps; exceeding one raises CapExceeded
CAP_POINTWISE = 12
CAP_D = 13
CAP_RANK = 10
CAP_CMINSTAR = 10
CAP_SUBCUBE_DT = 4
CAP_PARITY_DT = 5


def _idx(x) -> int:
    return x if isinstance(x, (int, np.integer)) else point_index(x)


def sensitivity_set(f: TruthTable, x) -> int:
    """Bit ``B`` is set iff flipping the coordinates in mask ``B`` changes ``f(x)``."""
    n, t, p = f.arity, f.bits, _idx(x)
    g = _bits.translate(t, n, p)
    if (t >> p) & 1:
        g ^= _bits.full_mask(n)
    return g


@dataclass(frozen=True)
class PointData:
    s: int
    bs: int
    fbs: Fraction
    c: int
    minimal: int  # minimal sensitive blocks, as a set of coordinate masks


@lru_cache(maxsize=1 << 17)
def _point_data(sens: int, n: int) -> PointData:
    minimal = sens & ~_bits.strict_up(sens, n)
    s = _bits.popcount(sens & _bits.weight_masks(n)[1]) if n else 0
    free = _bits.full_mask(n) & ~_bits.up_closure(sens, n)
    c = n - _bits.max_weight_in(free, n)
    bs = len(_packing(minimal))
    return PointData(s, bs, _fbs_lp(minimal), c, minimal)


@lru_cache(maxsize=1 << 14)
def _packing(minimal: int) -> tuple[int, ...]:
    """A maximum family of pairwise disjoint blocks (masks) among ``minimal``."""
    blocks = list(_bits.iter_bits(minimal))
    if not blocks:
        return ()
    universe = 0
    for b in blocks:
        universe |= b
    memo: dict[int, tuple[int, ...]] = {}

    def best(avail: int) -> tuple[int, ...]:
        if avail in memo:
            return memo[avail]
        usable = [b for b in blocks if b & avail == b]
        if not usable:
            memo[avail] = ()
            return ()
        cover = 0
        for b in usable:
            cover |= b
        low = cover & -cover
        # either no block uses the element ``low`` ...
        out = best(avail & ~low)
        # ... or exactly one block containing it does
        for b in usable:
            if b & low:
                cand = (b,) + best(avail & ~b)
                if len(cand) > len(out):
                    out = cand
        memo[avail] = out
        return out

    return tuple(sorted(best(universe)))


def _block_lp(minimal: int) -> tuple[list[int], list[list[int]], list[int]]:
    blocks = list(_bits.iter_bits(minimal))
    universe = 0
    for b in blocks:
        universe |= b
    coords = list(_bits.iter_bits(universe))
    A = [[(b >> i) & 1 for b in blocks] for i in coords]
    return [1] * len(blocks), A, [1] * len(coords)


@lru_cache(maxsize=1 << 14)
def _fbs_lp(minimal: int) -> Fraction:
    if not minimal:
        return Fraction(0)
    c, A, b = _block_lp(minimal)
    return lp.simplex_max(c, A, b)[0]


def fbs_by_vertices(minimal: int) -> Fraction:
    """Fractional block sensitivity LP solved by basic-solution enumeration."""
    if not minimal:
        return Fraction(0)
    return lp.vertex_enumeration_max(*_block_lp(minimal))


def point_data(f: TruthTable, x) -> PointData:
    check_cap("pointwise measures", f.arity, CAP_POINTWISE)
    return _point_data(sensitivity_set(f, x), f.arity)


@dataclass(frozen=True)
class Summary:
    s: int
    bs: int
    bs0: int
    bs1: int
    fbs: Fraction
    c: int
    c0: int
    c1: int
    cmin: int
    pointwise_chain: bool  # s <= bs <= fbs <= C at every point


def _iter_point_data(t: int, n: int):
    """``(index, PointData)`` for every point, walking a Gray code."""
    full = _bits.full_mask(n)
    g = t
    prev = 0
    for k in range(1 << n):
        x = k ^ (k >> 1)
        diff = x ^ prev
        if diff:
            g = _bits.flip(g, n, diff.bit_length() - 1)
        prev = x
        sens = g ^ full if (t >> x) & 1 else g
        yield x, _point_data(sens, n)


@lru_cache(maxsize=1 << 17)
def _summary(t: int, n: int) -> Summary:
    s = bs = c = 0
    bsb = [0, 0]
    cb = [0, 0]
    fbs = Fraction(0)
    cmin = n
    chain = True
    for x, d in _iter_point_data(t, n):
        b = (t >> x) & 1
        s = max(s, d.s)
        bs = max(bs, d.bs)
        bsb[b] = max(bsb[b], d.bs)
        cb[b] = max(cb[b], d.c)
        c = max(c, d.c)
        fbs = max(fbs, d.fbs)
        cmin = min(cmin, d.c)
        chain = chain and d.s <= d.bs <= d.fbs <= d.c
    return Summary(s, bs, bsb[0], bsb[1], fbs, c, cb[0], cb[1], cmin, chain)


def summary(f: TruthTable) -> Summary:
    check_cap("pointwise measures", f.arity, CAP_POINTWISE)
    return _summary(f.bits, f.arity)


# --- public per-measure API --------------------------------------------------

def sensitivity(f: TruthTable, x=None) -> int:
    if x is not None:
        return point_data(f, x).s
    return summary(f).s


@dataclass(frozen=True)
class SensitiveBlockSet:
    point: tuple[int, ...]
    blocks: tuple[frozenset[int], ...]  # 1-based coordinates


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in _bits.iter_bits(mask))


def minimal_sensitive_blocks(f: TruthTable, x) -> SensitiveBlockSet:
    d = point_data(f, x)
    masks = sorted(_bits.iter_bits(d.minimal), key=lambda m: (_bits.popcount(m), sorted(_mask_to_set(m))))
    return SensitiveBlockSet(index_point(_idx(x), f.arity), tuple(_mask_to_set(m) for m in masks))


def disjoint_block_packing(f: TruthTable, x) -> tuple[frozenset[int], ...]:
    """A maximum family of disjoint minimal sensitive blocks of ``x``."""
    return tuple(_mask_to_set(m) for m in _packing(point_data(f, x).minimal))


def block_sensitivity(f: TruthTable, x=None, side: int | None = None) -> int:
    if x is not None:
        return point_data(f, x).bs
    sm = summary(f)
    if side is None:
        return sm.bs
    return sm.bs1 if side else sm.bs0


def fractional_block_sensitivity(f: TruthTable, x=None) -> Fraction:
    if x is not None:
        return point_data(f, x).fbs
    return summary(f).fbs


def certificate_complexity(f: TruthTable, x=None, side: int | None = None) -> int:
    if x is not None:
        return point_data(f, x).c
    sm = summary(f)
    if side is None:
        return sm.c
    return sm.c1 if side else sm.c0


def certificate(f: TruthTable, x) -> Subcube:
    """A smallest certificate containing ``x`` (fewest fixed coordinates,
    then the lexicographically smallest index set)."""
    n, p = f.arity, _idx(x)
    check_cap("certificate", n, CAP_POINTWISE)
    up = _bits.up_closure(sensitivity_set(f, p), n)
    free_ok = _bits.full_mask(n) & ~up
    w = _bits.max_weight_in(free_ok, n)
    cands = _bits.weight_masks(n)[w] & free_ok
    # largest free set among candidates == smallest fixed set; pick by fixed-index order
    best = min(_bits.iter_bits(cands), key=lambda fr: [i for i in range(n) if not fr >> i & 1])
    fixed = [(i + 1, (p >> i) & 1) for i in range(n) if not best >> i & 1]
    return Subcube(n, tuple(fixed))


@lru_cache(maxsize=1 << 17)
def _min_certificate(t: int, n: int) -> tuple[int, int]:
    """First monochromatic subcube in (codim, index set, assignment) order,
    as ``(fixed_vars, fixed_vals)``."""
    for fv, vals, mask in _bits.subcube_point_masks(n):
        part = t & mask
        if part == 0 or part == mask:
            return fv, vals
    raise AssertionError("a single point is always monochromatic")


def min_certificate(f: TruthTable) -> Subcube:
    fv, vals = _min_certificate(f.bits, f.arity)
    return Subcube.from_masks(f.arity, fv, vals)


def cmin(f: TruthTable) -> int:
    return _bits.popcount(_min_certificate(f.bits, f.arity)[0])


@lru_cache(maxsize=1 << 17)
def _cminstar(t: int, n: int) -> int:
    vals = np.array(_unpack_list(t, n), dtype=np.int8)
    mono = vals.reshape((2,) * n) if n else vals.reshape(())
    # ternary layout: digit 0/1 fixes a coordinate, digit 2 leaves it free
    for axis in range(n):
        a0 = np.take(mono, 0, axis=axis)
        a1 = np.take(mono, 1, axis=axis)
        both = np.where((a0 == a1) & (a0 != 2), a0, 2).astype(np.int8)
        mono = np.stack([a0, a1, both], axis=axis)
    free = np.zeros(mono.shape, dtype=np.int64)
    for axis in range(n):
        shape = [1] * n
        shape[axis] = 3
        free = free + (np.arange(3) == 2).reshape(shape)
    codim = n - free
    big = n + 1
    best = np.where(mono != 2, codim, big)
    for axis in range(n):
        b0 = np.take(best, 0, axis=axis)
        b1 = np.take(best, 1, axis=axis)
        b2 = np.minimum(np.take(best, 2, axis=axis), np.minimum(b0, b1))
        best = np.stack([b0, b1, b2], axis=axis)
    return int((best - codim).max())


def _unpack_list(t: int, n: int) -> list[int]:
    return [(t >> p) & 1 for p in range(1 << n)]


def cminstar(f: TruthTable) -> int:
    check_cap("cminstar", f.arity, CAP_CMINSTAR)
    return _cminstar(f.bits, f.arity)


def degree(f: TruthTable) -> int:
    return degree_of(f)


@lru_cache(maxsize=1 << 18)
def degree_bits(t: int, n: int) -> int:
    return degree_of(TruthTable(n, t))


# --- decision trees -----------------------------------------------------------

@lru_cache(maxsize=1 << 20)
def _dt(t: int, n: int) -> tuple[int, int]:
    """``(D, best variable)`` with variable -1 for constants."""
    if t == 0 or t == _bits.full_mask(n):
        return 0, -1
    best, arg = n + 1, -1
    for i in range(n):
        d0 = _dt(_bits.compress(t, n, i, 0), n - 1)[0]
        if 1 + d0 >= best:
            continue
        d1 = _dt(_bits.compress(t, n, i, 1), n - 1)[0]
        d = 1 + max(d0, d1)
        if d < best:
            best, arg = d, i
            if best == 1:
                break
    return best, arg


@lru_cache(maxsize=1 << 20)
def _rank(t: int, n: int) -> tuple[int, int]:
    if t == 0 or t == _bits.full_mask(n):
        return 0, -1
    best, arg = n + 1, -1
    for i in range(n):
        r0 = _rank(_bits.compress(t, n, i, 0), n - 1)[0]
        r1 = _rank(_bits.compress(t, n, i, 1), n - 1)[0]
        r = r0 + 1 if r0 == r1 else max(r0, r1)
        if r < best:
            best, arg = r, i
            if best == 1:
                break
    return best, arg


def _build_tree(table_fn, t: int, n: int, coords: tuple[int, ...]):
    """Rebuild the optimal tree stored in a memoized recursion."""
    _, i = table_fn(t, n)
    if i < 0:
        return leaf(t & 1)
    rest = coords[:i] + coords[i + 1:]
    return Query(
        coords[i],
        _build_tree(table_fn, _bits.compress(t, n, i, 0), n - 1, rest),
        _build_tree(table_fn, _bits.compress(t, n, i, 1), n - 1, rest),
    )


def decision_tree_depth(f: TruthTable):
    """``(D(f), an optimal decision tree)``."""
    check_cap("decision tree depth", f.arity, CAP_D)
    d = _dt(f.bits, f.arity)[0]
    return d, _build_tree(_dt, f.bits, f.arity, tuple(range(1, f.arity + 1)))


def dt_depth(f: TruthTable) -> int:
    check_cap("decision tree depth", f.arity, CAP_D)
    return _dt(f.bits, f.arity)[0]


def decision_tree_rank(f: TruthTable) -> int:
    check_cap("decision tree rank", f.arity, CAP_RANK)
    return _rank(f.bits, f.arity)[0]


def min_rank_tree(f: TruthTable):
    check_cap("decision tree rank", f.arity, CAP_RANK)
    return _build_tree(_rank, f.bits, f.arity, tuple(range(1, f.arity + 1)))


def naive_dt_depth(t: int, n: int) -> int:
    """Unmemoized minimax over all query orders (reference for small n)."""
    if t == 0 or t == _bits.full_mask(n):
        return 0
    return min(
        1 + max(naive_dt_depth(_bits.compress(t, n, i, 0), n - 1),
                naive_dt_depth(_bits.compress(t, n, i, 1), n - 1))
        for i in range(n)
    )


# --- subcube and parity decision trees --------------------------------------

def _span(pts: int, n: int) -> tuple[int, int, int]:
    """Smallest subcube containing ``pts``: ``(fixed_vars, fixed_vals, mask)``."""
    fv = vals = 0
    mask = _bits.full_mask(n)
    for i in range(n):
        m = _bits.var_mask(n, i)
        if not pts & m:
            fv |= 1 << i
            mask &= ~m
        elif not pts & ~m:
            fv |= 1 << i
            vals |= 1 << i
            mask &= m
    return fv, vals, mask


class _SubcubeSearch:
    def __init__(self, n: int):
        self.n = n
        self.cubes = [(Subcube.from_masks(n, fv, vals), mask)
                      for fv, vals, mask in _bits.subcube_point_masks(n) if fv]
        self.memo: dict[tuple[int, int, int], object] = {}
        self.memo1: dict[tuple[int, int], object] = {}

    def depth1(self, dom: int, ones: int):
        key = (dom, ones)
        if key in self.memo1:
            return self.memo1[key]
        n = self.n
        zeros = dom & ~ones
        found = None
        for pos, neg, b in ((ones, zeros, 1), (zeros, ones, 0)):
            fv, vals, mask = _span(pos, n)
            if fv and not mask & neg:
                found = CubeQuery(Subcube.from_masks(n, fv, vals), leaf(1 - b), leaf(b))
                break
        self.memo1[key] = found
        return found

    def solve(self, dom: int, ones: int, d: int):
        if ones == 0:
            return leaf(0)
        if ones == dom:
            return leaf(1)
        if d == 0:
            return None
        if d == 1:
            return self.depth1(dom, ones)
        key = (dom, ones, d)
        if key in self.memo:
            return self.memo[key]
        found = self.depth1(dom, ones)
        if found is None:
            for cube, mask in self.cubes:
                a = dom & mask
                b = dom & ~mask
                if not a or not b:
                    continue
                t_in = self.solve(a, ones & a, d - 1)
                if t_in is None:
                    continue
                t_out = self.solve(b, ones & b, d - 1)
                if t_out is None:
                    continue
                found = CubeQuery(cube, t_out, t_in)
                break
        self.memo[key] = found
        return found


_SEARCHERS: dict[tuple[str, int], object] = {}


def _searcher(kind: str, n: int):
    key = (kind, n)
    if key not in _SEARCHERS:
        _SEARCHERS[key] = _SubcubeSearch(n) if kind == "cube" else _ParitySearch(n)
    return _SEARCHERS[key]


def optimal_subcube_tree(f: TruthTable):
    """``(depth, tree)`` of a minimum-depth subcube decision tree."""
    check_cap("subcube decision tree", f.arity, CAP_SUBCUBE_DT)
    s = _searcher("cube", f.arity)
    full = _bits.full_mask(f.arity)
    for d in range(f.arity + 1):
        tree = s.solve(full, f.bits, d)
        if tree is not None:
            return d, tree
    raise AssertionError("a depth-n subcube tree always exists")


def subcube_dt_depth(f: TruthTable) -> int:
    return optimal_subcube_tree(f)[0]


class _ParitySearch:
    def __init__(self, n: int):
        self.n = n
        self.parities = []
        for s in range(1, 1 << n):
            odd = 0
            for i in range(n):
                if s >> i & 1:
                    odd ^= _bits.var_mask(n, i)
            self.parities.append((tuple(i + 1 for i in range(n) if s >> i & 1), odd))
        self.memo: dict[tuple[int, int, int], object] = {}

    def solve(self, dom: int, ones: int, d: int):
        if ones == 0:
            return leaf(0)
        if ones == dom:
            return leaf(1)
        if d == 0:
            return None
        key = (dom, ones, d)
        if key in self.memo:
            return self.memo[key]
        found = None
        for subset, odd in self.parities:
            a = dom & odd
            b = dom & ~odd
            if not a or not b:
                continue
            if d == 1:
                oa, ob = ones & a, ones & b
                if oa in (0, a) and ob in (0, b):
                    found = ParityQuery(subset, leaf(ob and 1), leaf(oa and 1))
                    break
                continue
            t_odd = self.solve(a, ones & a, d - 1)
            if t_odd is None:
                continue
            t_even = self.solve(b, ones & b, d - 1)
            if t_even is None:
                continue
            found = ParityQuery(subset, t_even, t_odd)
            break
        self.memo[key] = found
        return found


def optimal_parity_tree(f: TruthTable):
    check_cap("parity decision tree", f.arity, CAP_PARITY_DT)
    s = _searcher("parity", f.arity)
    full = _bits.full_mask(f.arity)
    for d in range(f.arity + 1):
        tree = s.solve(full, f.bits, d)
        if tree is not None:
            return d, tree
    raise AssertionError("a depth-n parity tree always exists")


def parity_dt_depth(f: TruthTable) -> int:
    return optimal_parity_tree(f)[0]


# --- consolidated report -----------------------------------------------------

REPORT_FIELDS = ("n", "s", "bs", "bs0", "bs1", "fbs_num", "fbs_den", "c", "c0", "c1",
                 "cmin", "cminstar", "deg", "d", "rank", "alt", "zebra",
                 "subcube_dt", "parity_dt", "checks")
REPORT_CAP = min(CAP_RANK, CAP_CMINSTAR)


@dataclass
class MeasureReport:
    n: int
    s: int
    bs: int
    bs0: int
    bs1: int
    fbs: Fraction
    c: int
    c0: int
    c1: int
    cmin: int
    cminstar: int
    deg: int
    d: int
    rank: int
    alt: int
    zebra: bool
    subcube_dt: int | None = None
    parity_dt: int | None = None
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v for _, v in self.checks)

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.checks if not v]

    def as_dict(self) -> dict:
        row = {
            "n": self.n, "s": self.s, "bs": self.bs, "bs0": self.bs0, "bs1": self.bs1,
            "fbs_num": self.fbs.numerator, "fbs_den": self.fbs.denominator,
            "c": self.c, "c0": self.c0, "c1": self.c1, "cmin": self.cmin,
            "cminstar": self.cminstar, "deg": self.deg, "d": self.d, "rank": self.rank,
            "alt": self.alt, "zebra": self.zebra,
            "subcube_dt": self.subcube_dt, "parity_dt": self.parity_dt,
            "checks": [{"name": k, "ok": v} for k, v in self.checks],
        }
        return row

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    def csv_row(self) -> list:
        d = self.as_dict()
        row = []
        for k in REPORT_FIELDS:
            v = d[k]
            if k == "checks":
                v = ";".join(f"{c['name']}={int(c['ok'])}" for c in v)
            elif isinstance(v, bool):
                v = int(v)
            elif v is None:
                v = ""
            row.append(v)
        return row

    def to_csv(self, header: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(REPORT_FIELDS)
        w.writerow(self.csv_row())
        return buf.getvalue()


def log_factor(n: int) -> int:
    """``floor(log2 n) + 1`` (1 for n <= 1)."""
    return n.bit_length() if n >= 1 else 1


def inequality_checks(r: MeasureReport, *, pointwise: bool, monotone: bool, symmetric: bool,
                      constant: bool) -> list[tuple[str, bool]]:
    checks = [
        ("pointwise s<=bs<=fbs<=C", pointwise),
        ("s<=bs", r.s <= r.bs),
        ("bs<=fbs", r.bs <= r.fbs),
        ("fbs<=C", r.fbs <= r.c),
        ("C<=D", r.c <= r.d),
        ("deg<=D", r.deg <= r.d),
        ("rank<=D", r.rank <= r.d),
        ("cmin<=alt*bs", r.cmin <= r.alt * r.bs),
        ("cmin<=alt*deg", r.cmin <= r.alt * r.deg),
        ("cminstar<=alt*bs", r.cminstar <= r.alt * r.bs),
        ("cminstar<=alt*deg", r.cminstar <= r.alt * r.deg),
        ("D<=cminstar*(bs0+bs1)", r.d <= r.cminstar * (r.bs0 + r.bs1)),
        ("D<=cminstar*deg", r.d <= r.cminstar * r.deg),
    ]
    if r.subcube_dt is not None:
        checks.append(("rank<=subcube_dt", r.rank <= r.subcube_dt))
        checks.append(("subcube_dt<=rank*(floor(log2 n)+1)",
                       r.subcube_dt <= r.rank * log_factor(r.n)))
    if r.parity_dt is not None:
        checks.append(("parity_dt<=D", r.parity_dt <= r.d))
    if r.zebra:
        checks.append(("zebra: cminstar<=bs", r.cminstar <= r.bs))
    if monotone:
        checks.append(("monotone: C=bs", r.c == r.bs))
    if symmetric and not constant:
        checks.append(("symmetric: bs=s>=ceil((n+1)/2)",
                       r.bs == r.s and r.s >= math.ceil((r.n + 1) / 2)))
    return checks


def measure_report(f: TruthTable, *, subcube_dt=None, parity_dt=None, cminstar=None) -> MeasureReport:
    """All measures of ``f`` plus inequality verdicts.

    Subcube and parity tree depths are computed when the arity is within their
    caps; callers that already know them (e.g. from a symmetric copy) may pass
    them in (likewise ``cminstar``).
    """
    n, t = f.arity, f.bits
    check_cap("measure report", n, REPORT_CAP)
    sm = _summary(t, n)
    lo, hi = alt_bits(t, n)
    if subcube_dt is None and n <= CAP_SUBCUBE_DT:
        subcube_dt = subcube_dt_depth(f)
    if parity_dt is None and n <= CAP_PARITY_DT:
        parity_dt = parity_dt_depth(f)
    r = MeasureReport(
        n=n, s=sm.s, bs=sm.bs, bs0=sm.bs0, bs1=sm.bs1, fbs=sm.fbs,
        c=sm.c, c0=sm.c0, c1=sm.c1, cmin=sm.cmin,
        cminstar=_cminstar(t, n) if cminstar is None else cminstar,
        deg=degree_bits(t, n), d=_dt(t, n)[0], rank=_rank(t, n)[0],
        alt=hi, zebra=lo == hi, subcube_dt=subcube_dt, parity_dt=parity_dt,
    )
    r.checks = inequality_checks(r, pointwise=sm.pointwise_chain, monotone=f.is_monotone(), symmetric=f.is_symmetric(),
                                 constant=f.is_constant())
    return r
