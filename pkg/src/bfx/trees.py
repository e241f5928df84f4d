"""Decision trees over single bits, subcubes and parities.

Nodes are immutable and compared by identity, so subtrees can be shared.
Branch convention: the ``zero``/``outside``/``even`` child is taken when the
query answers 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .core import Subcube, TruthTable, point_index


@dataclass(frozen=True, eq=False)
class Leaf:
    value: int


@dataclass(frozen=True, eq=False)
class Query:
    var: int  # 1-based
    zero: "Node"
    one: "Node"


@dataclass(frozen=True, eq=False)
class CubeQuery:
    cube: Subcube
    outside: "Node"
    inside: "Node"


@dataclass(frozen=True, eq=False)
class ParityQuery:
    subset: tuple[int, ...]  # 1-based coordinates
    even: "Node"
    odd: "Node"


Node = Union[Leaf, Query, CubeQuery, ParityQuery]
DecisionTree = Union[Leaf, Query]
SubcubeDecisionTree = Union[Leaf, CubeQuery]
ParityDecisionTree = Union[Leaf, ParityQuery]

LEAF0 = Leaf(0)
LEAF1 = Leaf(1)


def leaf(b: int) -> Leaf:
    return LEAF1 if b else LEAF0


def answer(node: Node, idx: int) -> int:
    """The 0/1 answer the internal ``node`` gives on the point with index ``idx``."""
    if isinstance(node, Query):
        return (idx >> (node.var - 1)) & 1
    if isinstance(node, CubeQuery):
        return int(node.cube.contains_index(idx))
    if isinstance(node, ParityQuery):
        return sum((idx >> (i - 1)) & 1 for i in node.subset) & 1
    raise TypeError(f"not an internal node: {node!r}")


def children(node: Node) -> tuple[Node, Node]:
    if isinstance(node, Query):
        return node.zero, node.one
    if isinstance(node, CubeQuery):
        return node.outside, node.inside
    if isinstance(node, ParityQuery):
        return node.even, node.odd
    return ()


def run(tree: Node, x: Sequence[int] | int) -> tuple[int, int]:
    """Evaluate; returns ``(output, cost)``."""
    idx = x if isinstance(x, int) else point_index(x)
    cost = 0
    node = tree
    while not isinstance(node, Leaf):
        node = children(node)[answer(node, idx)]
        cost += 1
    return node.value, cost


def to_truth_table(tree: Node, n: int) -> TruthTable:
    bits = 0
    for p in range(1 << n):
        if run(tree, p)[0]:
            bits |= 1 << p
    return TruthTable(n, bits)


def depth(tree: Node) -> int:
    memo: dict[int, int] = {}

    def go(v: Node) -> int:
        if isinstance(v, Leaf):
            return 0
        k = id(v)
        if k not in memo:
            a, b = children(v)
            memo[k] = 1 + max(go(a), go(b))
        return memo[k]

    return go(tree)


def combine_rank(a: int, b: int) -> int:
    return a + 1 if a == b else max(a, b)


def node_ranks(tree: Node) -> dict[int, int]:
    """Rank of every node, keyed by ``id``."""
    memo: dict[int, int] = {}

    def go(v: Node) -> int:
        k = id(v)
        if k in memo:
            return memo[k]
        if isinstance(v, Leaf):
            r = 0
        else:
            a, b = children(v)
            r = combine_rank(go(a), go(b))
        memo[k] = r
        return r

    go(tree)
    return memo


def rank(tree: Node) -> int:
    return node_ranks(tree)[id(tree)]


def size(tree: Node) -> int:
    """Number of nodes when shared subtrees are counted once per occurrence."""
    memo: dict[int, int] = {}

    def go(v: Node) -> int:
        if isinstance(v, Leaf):
            return 1
        k = id(v)
        if k not in memo:
            a, b = children(v)
            memo[k] = 1 + go(a) + go(b)
        return memo[k]

    return go(tree)


def to_dict(tree: Node) -> dict:
    if isinstance(tree, Leaf):
        return {"leaf": tree.value}
    if isinstance(tree, Query):
        return {"var": tree.var, "0": to_dict(tree.zero), "1": to_dict(tree.one)}
    if isinstance(tree, CubeQuery):
        return {"cube": {str(i): b for i, b in tree.cube.fixed},
                "out": to_dict(tree.outside), "in": to_dict(tree.inside)}
    return {"parity": list(tree.subset), "even": to_dict(tree.even), "odd": to_dict(tree.odd)}
