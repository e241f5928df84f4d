"""Graph properties as Boolean functions of edge indicators.

Edges of a graph on vertices ``1..v`` are numbered in lexicographic order of
pairs ``(u, w)`` with ``u < w``; a graph is an int whose bit ``e`` marks edge
``e``. Tables are built when ``C(v, 2) <= 20``; larger ``v`` (used only by
the reductions) evaluates the predicate on demand.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Iterator

import numpy as np

from . import _bits
from .core import (
    MAX_ARITY,
    CapExceeded,
    Subcube,
    TruthTable,
    and_,
    check_cap,
    identify,
    restrict,
)
from .measures import _dt, _summary, degree_bits

CAP_CANONICAL = 5
CAP_EXHAUSTIVE = 4
CAP_PREDICATE = 8


@lru_cache(maxsize=None)
def edges(v: int) -> tuple[tuple[int, int], ...]:
    return tuple(itertools.combinations(range(1, v + 1), 2))


@lru_cache(maxsize=None)
def edge_index(v: int) -> dict[tuple[int, int], int]:
    return {e: k for k, e in enumerate(edges(v))}


def graph_mask(v: int, edge_list: Iterable[tuple[int, int]]) -> int:
    idx = edge_index(v)
    g = 0
    for u, w in edge_list:
        if u == w:
            raise ValueError("self-loops are not allowed")
        g |= 1 << idx[(min(u, w), max(u, w))]
    return g


def edge_list(v: int, g: int) -> tuple[tuple[int, int], ...]:
    return tuple(e for k, e in enumerate(edges(v)) if g >> k & 1)


def neighbours(v: int, g: int) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(v + 1)]
    for u, w in edge_list(v, g):
        adj[u].add(w)
        adj[w].add(u)
    return adj


# --- canonical forms ---------------------------------------------------------

@lru_cache(maxsize=None)
def _edge_perms(v: int) -> np.ndarray:
    """Row per vertex permutation: image index of every edge."""
    idx = edge_index(v)
    rows = []
    for perm in itertools.permutations(range(1, v + 1)):
        rows.append([idx[tuple(sorted((perm[u - 1], perm[w - 1])))] for u, w in edges(v)])
    return np.array(rows, dtype=np.int64)


def _permute_all(v: int) -> np.ndarray:
    """``out[p, g]`` = graph ``g`` relabelled by permutation ``p``."""
    perms = _edge_perms(v)
    e = len(edges(v))
    g = np.arange(1 << e, dtype=np.int64)
    out = np.zeros((perms.shape[0], g.size), dtype=np.int64)
    for k in range(e):
        bit = (g >> k) & 1
        out |= bit[None, :] << perms[:, k][:, None]
    return out


@lru_cache(maxsize=None)
def canonical_table(v: int) -> np.ndarray:
    """Canonical form of every labelled graph: the smallest edge mask over all relabellings."""
    check_cap("graph canonical forms", v, CAP_CANONICAL)
    return _permute_all(v).min(axis=0)


def canonical_form(v: int, g: int) -> int:
    if v <= CAP_CANONICAL:
        return int(canonical_table(v)[g])
    perms = _edge_perms(v)
    best = None
    for row in perms:
        h = 0
        for k in _bits.iter_bits(g):
            h |= 1 << int(row[k])
        best = h if best is None or h < best else best
    return best


@lru_cache(maxsize=None)
def iso_classes(v: int) -> tuple[int, ...]:
    """Canonical representatives, ascending."""
    return tuple(int(c) for c in np.unique(canonical_table(v)))


NAMED_GRAPHS: dict[str, tuple[tuple[int, int], ...]] = {
    "empty": (),
    "K2": ((1, 2),),
    "P3": ((1, 2), (2, 3)),
    "K3": ((1, 2), (1, 3), (2, 3)),
    "2K2": ((1, 2), (3, 4)),
    "S3": ((1, 2), (1, 3), (1, 4)),
    "P4": ((1, 2), (2, 3), (3, 4)),
    "C4": ((1, 2), (2, 3), (3, 4), (1, 4)),
    "paw": ((1, 2), (1, 3), (2, 3), (3, 4)),
    "diamond": ((1, 2), (1, 3), (1, 4), (2, 3), (2, 4)),
    "K4": tuple(itertools.combinations(range(1, 5), 2)),
}


def parse_graph(v: int, text: str) -> int:
    """A named graph (padded with isolated vertices) or ``edges:1-2/2-3``."""
    if text.startswith("edges:"):
        body = text[len("edges:"):]
        pairs = [tuple(int(a) for a in p.split("-")) for p in body.split("/") if p]
        return graph_mask(v, pairs)
    if text not in NAMED_GRAPHS:
        raise ValueError(f"unknown graph name {text!r}")
    el = NAMED_GRAPHS[text]
    if any(max(e) > v for e in el):
        raise ValueError(f"graph {text} needs more than {v} vertices")
    return graph_mask(v, el)


def class_name(v: int, canon: int) -> str:
    for name in NAMED_GRAPHS:
        try:
            g = parse_graph(v, name)
        except ValueError:
            continue
        if canonical_form(v, g) == canon:
            return name
    return "edges:" + "/".join(f"{u}-{w}" for u, w in edge_list(v, canon))


# --- properties --------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class GraphProperty:
    v: int
    predicate: Callable[[int], int]
    name: str = ""
    _table: list = field(default_factory=list, repr=False)

    @property
    def n_edges(self) -> int:
        return comb(self.v, 2)

    @property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return edge_index(self.v)

    def __call__(self, g: int) -> int:
        if self._table:
            return self._table[0].at(g)
        return int(self.predicate(g))

    @property
    def function(self) -> TruthTable:
        if not self._table:
            e = self.n_edges
            if e > MAX_ARITY:
                raise CapExceeded("graph property table", e, MAX_ARITY)
            bits = 0
            for g in range(1 << e):
                if self.predicate(g):
                    bits |= 1 << g
            self._table.append(TruthTable(e, bits))
        return self._table[0]

    def complement(self) -> "GraphProperty":
        return GraphProperty(self.v, lambda g, p=self: 1 - p(g), f"not {self.name}")

    @classmethod
    def from_table(cls, v: int, f: TruthTable, name: str = "") -> "GraphProperty":
        if f.arity != comb(v, 2):
            raise ValueError(f"table arity {f.arity} != C({v},2)")
        return cls(v, f.at, name, [f])


def property_from_iso_classes(v: int, accepted: Iterable[int]) -> GraphProperty:
    acc = set(int(a) for a in accepted)
    canon = canonical_table(v)
    for a in acc:
        if not 0 <= a < canon.size or int(canon[a]) != a:
            raise ValueError(f"{a} is not a canonical graph on {v} vertices")
    member = np.isin(canon, sorted(acc)) if acc else np.zeros(canon.size, dtype=bool)
    bits = 0
    for g in np.flatnonzero(member):
        bits |= 1 << int(g)
    name = "classes=" + ",".join(class_name(v, a) for a in sorted(acc))
    return GraphProperty.from_table(v, TruthTable(comb(v, 2), bits), name)


def check_invariance(p: GraphProperty) -> bool:
    check_cap("invariance check", p.v, CAP_CANONICAL)
    vals = p.function.values
    return bool((vals[_permute_all(p.v)] == vals[None, :]).all())


# --- named predicates ----------------------------------------------------------

def _connected(v: int, g: int) -> int:
    adj = neighbours(v, g)
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return int(len(seen) == v)


def _has_triangle(v: int, g: int) -> int:
    adj = neighbours(v, g)
    return int(any(adj[u] & adj[w] for u, w in edge_list(v, g)))


def named_property(v: int, name: str) -> GraphProperty:
    """``connected``, ``has-edge``, ``triangle-free``, ``contains-triangle``,
    ``complete``, ``exactly-m-edges:<m>``, ``at-least-m-edges:<m>`` and the
    non-invariant ``edge-12`` (edge between vertices 1 and 2)."""
    check_cap("named graph property", v, CAP_PREDICATE)
    full = (1 << comb(v, 2)) - 1
    simple: dict[str, Callable[[int], int]] = {
        "connected": lambda g: _connected(v, g),
        "has-edge": lambda g: int(g != 0),
        "triangle-free": lambda g: 1 - _has_triangle(v, g),
        "contains-triangle": lambda g: _has_triangle(v, g),
        "complete": lambda g: int(g == full),
        "edge-12": lambda g: g & 1,
    }
    if name in simple:
        return GraphProperty(v, simple[name], name)
    for prefix, cmp in (("exactly-m-edges:", lambda a, m: a == m), ("at-least-m-edges:", lambda a, m: a >= m)):
        if name.startswith(prefix):
            m = int(name[len(prefix):])
            return GraphProperty(v, lambda g, m=m, cmp=cmp: int(cmp(_bits.popcount(g), m)), name)
    raise ValueError(f"unknown graph property {name!r}")


# --- the two reductions ------------------------------------------------------

def _nontrivial_view(p: GraphProperty) -> tuple[GraphProperty, bool]:
    """The property itself, or its complement if it accepts the empty graph."""
    if p(0):
        return p.complement(), True
    return p, False


def minimal_graph(p: GraphProperty) -> tuple[int, int]:
    """``(graph, m)``: a fewest-edge accepted graph, lexicographically least
    edge set among those. Complements first if the empty graph is accepted."""
    q, _ = _nontrivial_view(p)
    e = p.n_edges
    for m in range(1, e + 1):
        for combo in itertools.combinations(range(e), m):
            g = sum(1 << k for k in combo)
            if q(g):
                return g, m
    raise ValueError("trivial property: no accepted graph (after complementing)")


@dataclass(frozen=True)
class ReductionWitness:
    case: int
    v: int
    graph: int
    m: int
    complemented: bool
    # case 1
    cube: Subcube | None = None
    # case 2: vertex order v_1..v_n, k, d and the substitution of every edge
    order: tuple[int, ...] = ()
    k: int = 0
    d: int = 0
    fixed: tuple[tuple[int, int], ...] = ()  # (edge index, bit)
    groups: tuple[tuple[int, ...], ...] = ()  # identified edge indices, one group per new variable

    def replay(self, p: GraphProperty) -> TruthTable:
        """Evaluate the schedule on ``p`` directly (works for any ``v``)."""
        q = p.complement() if self.complemented else p
        if self.case == 1:
            free = [k for k in range(p.n_edges) if self.graph >> k & 1]
            return TruthTable.from_function(len(free), lambda x: q(sum(1 << free[j] for j, b in enumerate(x) if b)))
        base = sum(1 << k for k, b in self.fixed if b)
        return TruthTable.from_function(
            len(self.groups),
            lambda x: q(base | sum(sum(1 << k for k in grp) for grp, b in zip(self.groups, x) if b)),
        )

    def replay_table(self, p: GraphProperty) -> TruthTable:
        """Replay with the table operators restrict and identify (``v <= 6``)."""
        q = p.complement() if self.complemented else p
        f = q.function
        if self.case == 1:
            return restrict(f, self.cube)
        cube = Subcube(f.arity, tuple((k + 1, b) for k, b in self.fixed))
        g = restrict(f, cube)
        # position of every surviving edge variable in g
        pos = {k: j + 1 for j, k in enumerate(c - 1 for c in cube.free)}
        for grp in self.groups:
            keep = pos[grp[0]]
            for other in sorted(grp[1:], reverse=True):
                j = pos[other]
                g = identify(g, keep, j)
                pos = {e: (q2 - 1 if q2 > j else q2) for e, q2 in pos.items() if e != other}
                keep = pos[grp[0]]
        return g


def case1_reduction(p: GraphProperty) -> tuple[TruthTable, ReductionWitness]:
    g, m = minimal_graph(p)
    if not m > p.v / 4:
        raise ValueError(f"case 1 needs m > v/4, got m={m}, v={p.v}")
    _, comp = _nontrivial_view(p)
    cube = Subcube(p.n_edges, tuple((k + 1, 0) for k in range(p.n_edges) if not g >> k & 1))
    w = ReductionWitness(1, p.v, g, m, comp, cube=cube)
    return w.replay(p), w


def case2_reduction(p: GraphProperty) -> tuple[TruthTable, ReductionWitness]:
    g, m = minimal_graph(p)
    v = p.v
    if not m <= v / 4:
        raise ValueError(f"case 2 needs m <= v/4, got m={m}, v={v}")
    _, comp = _nontrivial_view(p)
    adj = neighbours(v, g)
    active = [u for u in range(1, v + 1) if adj[u]]
    vk = active[-1]
    nbrs = sorted(adj[vk])
    middle = [u for u in active if u != vk and u not in adj[vk]]
    isolated = [u for u in range(1, v + 1) if not adj[u]]
    order = tuple(nbrs + middle + [vk] + isolated)  # v_1 .. v_n
    d, k = len(nbrs), len(nbrs) + len(middle) + 1
    idx = edge_index(v)
    g_prime = g & ~graph_mask(v, [(vk, u) for u in nbrs])
    star_vertices = order[k - 1:]
    groups = []
    in_group = set()
    for vi in star_vertices:
        grp = tuple(sorted(idx[tuple(sorted((vi, order[l])))] for l in range(d)))
        groups.append(grp)
        in_group.update(grp)
    fixed = tuple((e, int(g_prime >> e & 1)) for e in range(p.n_edges) if e not in in_group)
    w = ReductionWitness(2, v, g, m, comp, order=order, k=k, d=d, fixed=fixed, groups=tuple(groups))
    return w.replay(p), w


def reduce_property(p: GraphProperty) -> tuple[TruthTable, ReductionWitness]:
    _, m = minimal_graph(p)
    return case1_reduction(p) if m > p.v / 4 else case2_reduction(p)


def reduction_checks(p: GraphProperty, f: TruthTable, w: ReductionWitness) -> list[tuple[str, bool]]:
    checks: list[tuple[str, bool]] = []
    if w.case == 1:
        checks.append(("case 1: restriction is AND_m", f == and_(w.m)))
    else:
        n1 = f.arity
        checks.append(("case 2: symmetric", f.is_symmetric()))
        checks.append(("case 2: nonconstant", not f.is_constant()))
        checks.append(("case 2: f(0)=0", f.at(0) == 0))
        checks.append(("case 2: f(weight 1)=1", all(f.at(1 << i) == 1 for i in range(n1))))
    if p.n_edges <= 10:
        checks.append(("replay with table operators", w.replay_table(p) == f))
        P = p.function
        checks.append(("bs(P)>=bs(reduced)", _summary(P.bits, P.arity).bs >= _summary(f.bits, f.arity).bs))
        checks.append(("deg(P)>=deg(reduced)", degree_bits(P.bits, P.arity) >= degree_bits(f.bits, f.arity)))
    return checks


# --- enumeration -------------------------------------------------------------

def _property_from_subset(v: int, classes: tuple[int, ...], subset: int) -> GraphProperty:
    return property_from_iso_classes(v, [c for j, c in enumerate(classes) if subset >> j & 1])


def enumerate_properties(v: int, *, sample: int | None = None, seed: int = 0) -> Iterator[tuple[int, GraphProperty]]:
    """``(subset id, property)`` for every union of iso classes (``v <= 4``),
    or a seeded sample of ``sample`` subsets for ``v = 5``."""
    check_cap("graph property enumeration", v, CAP_CANONICAL)
    classes = iso_classes(v)
    total = 1 << len(classes)
    if v <= CAP_EXHAUSTIVE and sample is None:
        ids: Iterable[int] = range(total)
    else:
        rng = random.Random(seed)
        ids = sorted(rng.sample(range(total), min(sample or 64, total)))
    for s in ids:
        yield s, _property_from_subset(v, classes, s)


@dataclass
class GraphRow:
    subset: int
    name: str
    nontrivial: bool
    invariant: bool
    bs: int
    deg: int
    d: int
    case: int
    checks: list[tuple[str, bool]]

    @property
    def ok(self) -> bool:
        return self.invariant and all(v for _, v in self.checks)


def analyse_property(subset: int, p: GraphProperty) -> GraphRow:
    f = p.function
    n, t = f.arity, f.bits
    inv = check_invariance(p)
    if f.is_constant():
        return GraphRow(subset, p.name, False, inv, 0, 0, 0, 0, [])
    red, w = reduce_property(p)
    return GraphRow(subset, p.name, True, inv, _summary(t, n).bs, degree_bits(t, n), _dt(t, n)[0],
                    w.case, reduction_checks(p, red, w))


def theorem_graph_report(v: int, *, sample: int | None = None, seed: int = 0) -> tuple[list[GraphRow], dict]:
    """Per-property rows and the ratio summary over the nontrivial ones."""
    from fractions import Fraction

    rows = [analyse_property(s, p) for s, p in enumerate_properties(v, sample=sample, seed=seed)]
    live = [r for r in rows if r.nontrivial]
    summary = {
        "v": v,
        "properties": len(rows),
        "nontrivial": len(live),
        "failures": sum(not r.ok for r in rows),
        "max_D_over_bs2": str(max((Fraction(r.d, r.bs ** 2) for r in live), default=Fraction(0))),
        "max_D_over_deg2": str(max((Fraction(r.d, r.deg ** 2) for r in live), default=Fraction(0))),
        "min_bs": min((r.bs for r in live), default=0),
        "min_deg": min((r.deg for r in live), default=0),
        "case_counts": {str(c): sum(r.case == c for r in live) for c in (1, 2)},
    }
    return rows, summary
