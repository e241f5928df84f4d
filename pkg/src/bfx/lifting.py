"""Composition with the indexing gadget, rank versus subcube trees, and
bit-counting protocol simulations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _bits
from .core import CapExceeded, Subcube, TruthTable, check_cap, compose, degree_of, ind
from .measures import CAP_POINTWISE, _packing, _summary, sensitivity_set
from .trees import CubeQuery, DecisionTree, Leaf, Node, Query, SubcubeDecisionTree, children, depth, node_ranks

CAP_DEG_COMPOSE = 14


@dataclass(frozen=True)
class Bipartition:
    alice: tuple[int, ...]
    bob: tuple[int, ...]

    def __post_init__(self):
        a, b = set(self.alice), set(self.bob)
        if a & b:
            raise ValueError("alice and bob share coordinates")
        if a | b != set(range(1, len(a) + len(b) + 1)):
            raise ValueError("alice and bob must cover 1..n")
        object.__setattr__(self, "alice", tuple(sorted(a)))
        object.__setattr__(self, "bob", tuple(sorted(b)))

    @property
    def n(self) -> int:
        return len(self.alice) + len(self.bob)

    @classmethod
    def from_alice(cls, n: int, alice: Sequence[int]) -> "Bipartition":
        a = set(alice)
        return cls(tuple(sorted(a)), tuple(i for i in range(1, n + 1) if i not in a))


def compose_with_indexing(f: TruthTable, m: int) -> tuple[TruthTable, Bipartition]:
    """``f ∘ IND`` with every address bit on Alice's side."""
    g = ind(m)
    F = compose(f, g)
    k = g.arity
    alice = [b * k + j + 1 for b in range(f.arity) for j in range(m)]
    return F, Bipartition.from_alice(F.arity, alice)


@dataclass(frozen=True)
class LiftingVerdict:
    bs_F: int
    fbs_f: Fraction
    m: int
    bound_ok: bool
    overlap_ok: bool
    weights_ok: bool

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.overlap_ok and self.weights_ok

    def as_dict(self) -> dict:
        return {
            "bs_F": self.bs_F, "fbs_f": str(self.fbs_f), "bound": str((self.m + 1) * self.fbs_f),
            "bs<=(m+1)fbs": self.bound_ok, "overlap<=m+1": self.overlap_ok, "weights feasible": self.weights_ok,
        }


def bs_fbs_lifting_check(f: TruthTable, m: int) -> LiftingVerdict:
    """Exact ``bs(F)`` against ``(m+1)·fbs(f)``, plus the two facts behind it
    at every input of ``F``: at most ``m+1`` packed blocks meet any gadget copy,
    and the induced weights on sensitive blocks of ``f`` form a feasible point
    of the fractional packing program whose value is ``k/(m+1)``."""
    F, _ = compose_with_indexing(f, m)
    N, T = F.arity, F.bits
    check_cap("lifting check", N, CAP_POINTWISE)
    n, t = f.arity, f.bits
    k = m + (1 << m)
    copy = [((1 << k) - 1) << (b * k) for b in range(n)]
    fbs_f = _summary(t, n).fbs if n else Fraction(0)
    bs_F = 0
    overlap_ok = weights_ok = True
    for x in range(1 << N):
        blocks = _packing(_minimal(T, N, x))
        bs_F = max(bs_F, len(blocks))
        if not blocks:
            continue
        y = 0
        for b in range(n):
            local = (x >> (b * k)) & ((1 << k) - 1)
            y |= ((ind(m).bits >> local) & 1) << b
        load = [0] * n
        sens_y = sensitivity_set(f, y)
        for B in blocks:
            A = 0
            for b in range(n):
                if B & copy[b]:
                    A |= 1 << b
                    load[b] += 1
            weights_ok &= bool(sens_y >> A & 1)
        overlap_ok &= max(load) <= m + 1
        # each coordinate of y is covered by at most m+1 blocks, so weights 1/(m+1) are feasible
        weights_ok &= Fraction(len(blocks), m + 1) <= fbs_f
    return LiftingVerdict(bs_F, fbs_f, m, bs_F <= (m + 1) * fbs_f, overlap_ok, weights_ok)


def _minimal(T: int, N: int, x: int) -> int:
    sens = sensitivity_set(TruthTable(N, T), x)
    return sens & ~_bits.strict_up(sens, N)


@dataclass(frozen=True)
class DegreeVerdict:
    deg_f: int
    deg_g: int
    deg_fg: int

    @property
    def ok(self) -> bool:
        return self.deg_fg == self.deg_f * self.deg_g


def deg_composition_check(f: TruthTable, g: TruthTable) -> DegreeVerdict:
    if f.arity * g.arity > CAP_DEG_COMPOSE:
        raise CapExceeded("degree composition", f.arity * g.arity, CAP_DEG_COMPOSE)
    return DegreeVerdict(degree_of(f), degree_of(g), degree_of(compose(f, g)))


# --- rank <-> subcube trees ---------------------------------------------------

def _deepest_top_rank(tree: Node, ranks: dict[int, int]) -> list[tuple[Node, int]]:
    """Path ``[(node, branch taken), ...]`` from the root to the deepest node of
    rank equal to the root's (leftmost on ties); the last branch is -1."""
    r = ranks[id(tree)]
    best: list[tuple[Node, int]] = []
    stack: list[tuple[Node, int]] = []

    def go(v: Node) -> None:
        nonlocal best
        if isinstance(v, Leaf) or ranks[id(v)] != r:
            return
        if len(stack) + 1 > len(best):
            best = stack + [(v, -1)]
        for b, c in enumerate(children(v)):
            stack.append((v, b))
            go(c)
            stack.pop()

    go(tree)
    return best


def _path_cube(n: int, steps: list[tuple[Node, int]]) -> Subcube:
    fixed: dict[int, int] = {}
    for node, b in steps:
        if fixed.get(node.var, b) != b:
            raise ValueError("tree path queries a variable twice with different answers")
        fixed[node.var] = b
    return Subcube(n, fixed)


def rank_to_subcube_tree(tree: DecisionTree, n: int) -> SubcubeDecisionTree:
    """Subcube tree of depth at most ``rank·(floor(log2 depth)+1)``.

    Per level: take the deepest node ``v`` of top rank and binary-search which
    exit of the root-to-``v`` path the input takes. Exit ``j < L`` leaves the
    path at its ``j``-th node, exits ``L`` and ``L+1`` are the two children of
    ``v``. Exit ``j >= 1`` is reached exactly when the input lies in the
    subcube of the ``j``-th path prefix (for ``L+1``: of ``v``'s one-child),
    and these subcubes are nested, so the search needs ``ceil(log2(L+2))``
    queries and every exit has smaller rank.
    """
    ranks = node_ranks(tree)
    memo: dict[int, Node] = {}

    def build(t: Node) -> Node:
        if isinstance(t, Leaf):
            return t
        if id(t) in memo:
            return memo[id(t)]
        path = _deepest_top_rank(t, ranks)
        L = len(path) - 1
        v = path[-1][0]
        prefixes = [path[:j] for j in range(L + 1)] + [path[:L] + [(v, 1)]]
        exits = [children(path[j][0])[1 - path[j][1]] for j in range(L)] + list(children(v))

        def search(lo: int, hi: int) -> Node:
            if lo == hi:
                return build(exits[lo])
            mid = (lo + hi + 1) // 2
            return CubeQuery(_path_cube(n, prefixes[mid]), search(lo, mid - 1), search(mid, hi))

        out = search(0, L + 1)
        memo[id(t)] = out
        return out

    return build(tree)


def subcube_tree_to_ranked_dt(st: SubcubeDecisionTree) -> DecisionTree:
    """Plain tree of rank at most the subcube tree's depth: each subcube query
    becomes a chain over its fixed coordinates whose mismatch exits share the
    converted outside subtree."""
    memo: dict[int, Node] = {}

    def conv(t: Node) -> Node:
        if isinstance(t, Leaf):
            return t
        if id(t) in memo:
            return memo[id(t)]
        out_t = conv(t.outside)
        node = conv(t.inside)
        for i, b in reversed(t.cube.fixed):
            node = Query(i, node, out_t) if b == 0 else Query(i, out_t, node)
        memo[id(t)] = node
        return node

    return conv(st)


def dt_as_subcube_tree(tree: DecisionTree, n: int) -> SubcubeDecisionTree:
    """Read every single-variable query as membership in ``{x_i = 1}``."""
    if isinstance(tree, Leaf):
        return tree
    return CubeQuery(Subcube(n, ((tree.var, 1),)), dt_as_subcube_tree(tree.zero, n), dt_as_subcube_tree(tree.one, n))


# --- protocols ----------------------------------------------------------------

@dataclass(frozen=True)
class ProtocolTranscript:
    messages: tuple[tuple[str, int], ...]
    output: int
    budget: int

    @property
    def cost(self) -> int:
        return len(self.messages)

    def as_dict(self) -> dict:
        return {"messages": [[s, b] for s, b in self.messages], "output": self.output,
                "bits": self.cost, "budget": self.budget}


def simulate_protocol(st: SubcubeDecisionTree, bp: Bipartition, x: Sequence[int] | int) -> ProtocolTranscript:
    """Each party announces whether its own coordinates match the queried
    subcube; Alice speaks first."""
    idx = x if isinstance(x, int) else sum(b << i for i, b in enumerate(x))
    alice = set(bp.alice)
    msgs: list[tuple[str, int]] = []
    node = st
    while not isinstance(node, Leaf):
        a = int(all((idx >> (i - 1) & 1) == b for i, b in node.cube.fixed if i in alice))
        b_ = int(all((idx >> (i - 1) & 1) == b for i, b in node.cube.fixed if i not in alice))
        msgs += [("alice", a), ("bob", b_)]
        node = node.inside if a and b_ else node.outside
    return ProtocolTranscript(tuple(msgs), node.value, 2 * depth(st))


def simulate_lifted_dt(tree: DecisionTree, m: int, x: int) -> ProtocolTranscript:
    """Protocol for ``f ∘ IND`` from a decision tree of ``f``: to answer a query
    of ``x_i``, Alice sends the address bits of copy ``i`` and Bob replies with
    the addressed target bit."""
    k = m + (1 << m)
    msgs: list[tuple[str, int]] = []
    node = tree
    while not isinstance(node, Leaf):
        base = (node.var - 1) * k
        addr = (x >> base) & ((1 << m) - 1)
        msgs += [("alice", addr >> j & 1) for j in range(m)]
        bit = x >> (base + m + addr) & 1
        msgs.append(("bob", bit))
        node = node.one if bit else node.zero
    return ProtocolTranscript(tuple(msgs), node.value, (m + 1) * depth(tree))
