"""Certificate-building procedures driven by alternation, and the greedy
least-co-dimension certificate decision tree.

Tie-breaks (where several choices are allowed): among minimum-weight points,
the one whose sorted set of 1-coordinates is lexicographically smallest; among
maximal monomials, the lexicographically smallest index set; among
least-co-dimension certificates, the first in (index set, assignment) order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import _bits
from .core import Subcube, TruthTable, alt_bits, check_cap, index_point, mobius_polynomial, restrict_bits
from .measures import CAP_CMINSTAR, _cminstar, _min_certificate, _summary, degree_bits
from .trees import DecisionTree, Query, leaf, run


def _ones(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in _bits.iter_bits(mask))


def _pick(cands: int) -> int:
    return min(_bits.iter_bits(cands), key=lambda p: (_bits.popcount(p), _ones(p)))


@dataclass(frozen=True)
class CertTrace:
    arity: int
    points: tuple[int, ...]  # x^(1), ..., x^(l) as point indices
    monomials: tuple[int, ...] = ()  # chosen maximal monomial per iteration (degree variant)
    searches_nonempty: bool = True

    @property
    def iterations(self) -> int:
        return len(self.points)

    @property
    def sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_ones(p) for p in self.points)

    @property
    def cubes(self) -> tuple[Subcube, ...]:
        return tuple(Subcube(self.arity, tuple((i, 1) for i in s)) for s in self.sets)

    @property
    def certificate(self) -> Subcube:
        return self.cubes[-1] if self.points else Subcube(self.arity)

    @property
    def codim(self) -> int:
        return _bits.popcount(self.points[-1]) if self.points else 0

    def as_dict(self) -> dict:
        n = self.arity
        out = {
            "iterations": self.iterations,
            "points": ["".join(str(b) for b in index_point(p, n)) for p in self.points],
            "codims": [_bits.popcount(p) for p in self.points],
            "certificate": {str(i): b for i, b in self.certificate.fixed},
        }
        if self.monomials:
            out["monomials"] = [list(_ones(m)) for m in self.monomials]
        return out


def _up_cube(n: int, s: int) -> int:
    return Subcube.from_masks(n, s, s).point_mask()


def cert_via_bs(f: TruthTable) -> CertTrace:
    """Climb from ``0^n`` through minimum-weight value changes until the
    upward subcube of the current point is monochromatic."""
    n, t = f.arity, f.bits
    x = 0
    pts: list[int] = []
    ok = True
    while True:
        cube = _up_cube(n, x)
        if t & cube in (0, cube):
            break
        other = cube & (~t if (t >> x) & 1 else t) & ~(1 << x)
        if not other:
            ok = False
            break
        wm = _bits.weight_masks(n)
        w = next(w for w in range(n + 1) if other & wm[w])
        x = _pick(other & wm[w])
        pts.append(x)
    return CertTrace(n, tuple(pts), (), ok)


def cert_via_degree(f: TruthTable) -> CertTrace:
    """As :func:`cert_via_bs`, but new 1-coordinates are drawn from a maximal
    monomial of the polynomial of the current restriction."""
    n, t = f.arity, f.bits
    x = 0
    pts: list[int] = []
    mons: list[int] = []
    ok = True
    while True:
        cube = _up_cube(n, x)
        if t & cube in (0, cube):
            break
        free = [i for i in range(n) if not x >> i & 1]
        g = TruthTable(len(free), restrict_bits(t, n, [(i, 1) for i in range(n) if x >> i & 1]))
        local = mobius_polynomial(g).maximal_monomials()[0]
        m = sum(1 << free[j] for j in _bits.iter_bits(local))
        allowed = m | x
        other = cube & (~t if (t >> x) & 1 else t) & ~(1 << x)
        other &= _down_cube(n, allowed)
        if not other:
            ok = False
            break
        wm = _bits.weight_masks(n)
        w = next(w for w in range(n + 1) if other & wm[w])
        x = _pick(other & wm[w])
        pts.append(x)
        mons.append(m)
    return CertTrace(n, tuple(pts), tuple(mons), ok)


def _down_cube(n: int, allowed: int) -> int:
    """Points whose support lies inside ``allowed``."""
    outside = _bits.full_mask(n) & ~allowed
    return Subcube.from_masks(n, outside, 0).point_mask()


def trace_checks(f: TruthTable, tr: CertTrace, per_step: int, label: str) -> list[tuple[str, bool]]:
    """Trace postconditions: strict growth, bounded growth per step, the
    iteration count against alternation and the certificate property."""
    n, t = f.arity, f.bits
    a = alt_bits(t, n)[1]
    grow = True
    prev = 0
    for p in tr.points:
        grow &= p != prev and p & prev == prev
        grow &= _bits.popcount(p) <= _bits.popcount(prev) + per_step
        prev = p
    cube = tr.certificate.point_mask()
    return [
        (f"{label}: search nonempty", tr.searches_nonempty),
        (f"{label}: increasing, <= {per_step} new ones per step", grow),
        (f"{label}: iterations<=alt", tr.iterations <= a),
        (f"{label}: codim<=iterations*{per_step}", tr.codim <= tr.iterations * per_step),
        (f"{label}: constant on result", t & cube in (0, cube)),
    ]


def verify_alternation_bounds(f: TruthTable, *, sweep_subcubes: bool = False) -> list[tuple[str, bool]]:
    """Cmin and Cminstar against alternation times bs and times deg, plus
    both certificate traces."""
    n, t = f.arity, f.bits
    check_cap("alternation bounds", n, CAP_CMINSTAR)
    sm = _summary(t, n)
    a = alt_bits(t, n)[1]
    deg = degree_bits(t, n)
    cms = _cminstar(t, n)
    checks = [
        ("cmin<=alt*bs", sm.cmin <= a * sm.bs),
        ("cmin<=alt*deg", sm.cmin <= a * deg),
        ("cminstar<=alt*bs", cms <= a * sm.bs),
        ("cminstar<=alt*deg", cms <= a * deg),
    ]
    if t not in (0, _bits.full_mask(n)):
        t1 = cert_via_bs(f)
        t2 = cert_via_degree(f)
        checks += trace_checks(f, t1, sm.s, "bs trace")
        checks += trace_checks(f, t2, deg, "degree trace")
        checks.append(("cmin<=trace codims", sm.cmin <= min(t1.codim, t2.codim)))
    if sweep_subcubes:
        ok = True
        for fv, vals, _ in _bits.subcube_point_masks(n):
            sub = restrict_bits(t, n, [(i, vals >> i & 1) for i in _bits.iter_bits(fv)])
            k = n - _bits.popcount(fv)
            ssub = _summary(sub, k)
            asub = alt_bits(sub, k)[1]
            ok &= asub <= a and ssub.cmin <= asub * ssub.bs <= a * sm.bs
        checks.append(("every restriction: cmin<=alt*bs", ok))
    return checks


def certificates_hit_top_monomials(f: TruthTable) -> bool:
    """Every monochromatic subcube fixes a coordinate of every
    maximum-degree monomial."""
    n, t = f.arity, f.bits
    if t in (0, _bits.full_mask(n)):
        return True
    poly = mobius_polynomial(f)
    d = poly.degree
    top = [s for s in poly.coefficients if _bits.popcount(s) == d]
    for fv, _, mask in _bits.subcube_point_masks(n):
        if t & mask in (0, mask) and any(not fv & s for s in top):
            return False
    return True


# --- greedy certificate decision tree ---------------------------------------

@lru_cache(maxsize=1 << 18)
def _greedy_node(t: int, n: int):
    """``None`` for constants, else ``(fixed_vars, fixed_vals, children)``
    where ``children[a]`` is the restricted table for the answer pattern
    ``a`` on the certificate's coordinates (read in ascending order)."""
    if t in (0, _bits.full_mask(n)):
        return None
    fv, vals = _min_certificate(t, n)
    idx = list(_bits.iter_bits(fv))
    kids = []
    for a in range(1 << len(idx)):
        kids.append(restrict_bits(t, n, [(i, a >> j & 1) for j, i in enumerate(idx)]))
    return fv, vals, tuple(kids)


@lru_cache(maxsize=1 << 18)
def _greedy_stats(t: int, n: int) -> tuple[int, bool]:
    """``(worst-case queries, restricted degree strictly drops every round)``."""
    node = _greedy_node(t, n)
    if node is None:
        return 0, True
    fv, _, kids = node
    k = _bits.popcount(fv)
    d = degree_bits(t, n)
    worst, drops = 0, True
    for c in kids:
        q, ok = _greedy_stats(c, n - k)
        worst = max(worst, q)
        drops = drops and ok and degree_bits(c, n - k) < d
    return k + worst, drops


@dataclass(frozen=True)
class GreedyStep:
    certificate: Subcube  # in original coordinates
    restriction_cmin: int
    outcomes: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class GreedyDtTrace:
    arity: int
    tree: DecisionTree
    queries: tuple[int, ...]  # per input index
    outputs: tuple[int, ...]
    degree_drops: bool
    table: int = field(repr=False, default=0)

    @property
    def max_queries(self) -> int:
        return max(self.queries, default=0)

    @property
    def correct(self) -> bool:
        return all(((self.table >> p) & 1) == o for p, o in enumerate(self.outputs))

    def steps(self, x) -> tuple[list[GreedyStep], int]:
        """Replay the procedure on one input."""
        n = self.arity
        p = x if isinstance(x, int) else sum(b << i for i, b in enumerate(x))
        t, coords = self.table, list(range(n))
        out: list[GreedyStep] = []
        while True:
            node = _greedy_node(t, len(coords))
            if node is None:
                return out, t & 1
            fv, vals, kids = node
            idx = list(_bits.iter_bits(fv))
            cert = Subcube(n, tuple((coords[i] + 1, vals >> i & 1) for i in idx))
            ans = tuple((coords[i] + 1, p >> coords[i] & 1) for i in idx)
            a = sum(b << j for j, (_, b) in enumerate(ans))
            out.append(GreedyStep(cert, _bits.popcount(_min_certificate(t, len(coords))[0]), ans))
            t = kids[a]
            coords = [c for j, c in enumerate(coords) if j not in idx]


def _greedy_tree(t: int, coords: tuple[int, ...], memo: dict) -> DecisionTree:
    key = (t, coords)
    if key in memo:
        return memo[key]
    n = len(coords)
    node = _greedy_node(t, n)
    if node is None:
        tree: DecisionTree = leaf(t & 1)
    else:
        fv, _, kids = node
        idx = list(_bits.iter_bits(fv))
        rest = tuple(c for j, c in enumerate(coords) if j not in idx)

        def chain(j: int, a: int) -> DecisionTree:
            if j == len(idx):
                return _greedy_tree(kids[a], rest, memo)
            return Query(coords[idx[j]] + 1, chain(j + 1, a), chain(j + 1, a | 1 << j))

        tree = chain(0, 0)
    memo[key] = tree
    return tree


def greedy_cert_dtree(f: TruthTable) -> GreedyDtTrace:
    n, t = f.arity, f.bits
    check_cap("greedy certificate tree", n, CAP_CMINSTAR)
    tree = _greedy_tree(t, tuple(range(n)), {})
    queries, outputs = [], []
    for p in range(1 << n):
        o, c = run(tree, p)
        outputs.append(o)
        queries.append(c)
    worst, drops = _greedy_stats(t, n)
    assert worst == max(queries)
    return GreedyDtTrace(n, tree, tuple(queries), tuple(outputs), drops, t)


def greedy_checks(f: TruthTable) -> list[tuple[str, bool]]:
    n, t = f.arity, f.bits
    tr = greedy_cert_dtree(f)
    sm = _summary(t, n)
    cms = _cminstar(t, n)
    deg = degree_bits(t, n)
    return [
        ("greedy tree computes f", tr.correct),
        ("queries<=cminstar*(bs0+bs1)", tr.max_queries <= cms * (sm.bs0 + sm.bs1)),
        ("queries<=cminstar*deg", tr.max_queries <= cms * deg),
        ("restricted degree drops", tr.degree_drops),
    ]


def greedy_fast_checks(t: int, n: int) -> list[tuple[str, bool]]:
    """Same bounds as :func:`greedy_checks` from the cached recursion alone
    (used by the exhaustive sweeps; correctness is checked separately)."""
    worst, drops = _greedy_stats(t, n)
    sm = _summary(t, n)
    cms = _cminstar(t, n)
    deg = degree_bits(t, n)
    return [
        ("queries<=cminstar*(bs0+bs1)", worst <= cms * (sm.bs0 + sm.bs1)),
        ("queries<=cminstar*deg", worst <= cms * deg),
        ("restricted degree drops", drops),
    ]

