"""Slow brute-force reference implementations.

Nothing here touches the package internals: functions are handled as plain
value lists ``vals[p]`` where ``x_i = (p >> (i-1)) & 1``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache


def values(f) -> list[int]:
    return [(f.bits >> p) & 1 for p in range(1 << f.arity)]


def pt(p: int, n: int) -> tuple[int, ...]:
    return tuple((p >> i) & 1 for i in range(n))


def idx(x) -> int:
    return sum(b << i for i, b in enumerate(x))


def subsets(n: int):
    for r in range(n + 1):
        for c in itertools.combinations(range(n), r):
            yield c


def flip(p: int, block) -> int:
    for i in block:
        p ^= 1 << i
    return p


# --- polynomial -------------------------------------------------------------

def mobius_direct(vals: list[int], n: int) -> dict[tuple[int, ...], int]:
    """``c_S = sum_{T subset S} (-1)^{|S|-|T|} f(1_T)``."""
    out = {}
    for S in subsets(n):
        c = 0
        for r in range(len(S) + 1):
            for T in itertools.combinations(S, r):
                c += (-1) ** (len(S) - r) * vals[sum(1 << i for i in T)]
        if c:
            out[S] = c
    return out


def degree(vals: list[int], n: int) -> int:
    return max((len(S) for S in mobius_direct(vals, n)), default=0)


# --- alternation ------------------------------------------------------------

def path_alternations(vals: list[int], n: int) -> list[int]:
    """Alternation of each of the ``n!`` monotone paths ``0^n -> 1^n``."""
    out = []
    for order in itertools.permutations(range(n)):
        p, a = 0, 0
        for i in order:
            q = p | (1 << i)
            a += vals[p] != vals[q]
            p = q
        out.append(a)
    return out


def alt(vals: list[int], n: int) -> int:
    return max(path_alternations(vals, n))


def is_zebra(vals: list[int], n: int) -> bool:
    return len(set(path_alternations(vals, n))) == 1


# --- pointwise ----------------------------------------------------------------

def sensitive_blocks(vals: list[int], n: int, p: int) -> list[tuple[int, ...]]:
    return [B for B in subsets(n) if B and vals[flip(p, B)] != vals[p]]


def minimal_blocks(vals: list[int], n: int, p: int) -> list[frozenset[int]]:
    bl = [frozenset(B) for B in sensitive_blocks(vals, n, p)]
    return [B for B in bl if not any(C < B for C in bl)]


def sensitivity_at(vals, n, p) -> int:
    return sum(vals[p ^ (1 << i)] != vals[p] for i in range(n))


def bs_at(vals, n, p) -> int:
    bl = [frozenset(B) for B in sensitive_blocks(vals, n, p)]

    def best(used: frozenset, start: int) -> int:
        top = 0
        for j in range(start, len(bl)):
            if not bl[j] & used:
                top = max(top, 1 + best(used | bl[j], j + 1))
        return top

    return best(frozenset(), 0)


def subcubes(n: int):
    """``(fixed dict, point list)`` for all ``3^n`` subcubes."""
    for code in itertools.product((0, 1, 2), repeat=n):
        fixed = {i: b for i, b in enumerate(code) if b != 2}
        pts = [p for p in range(1 << n) if all((p >> i) & 1 == b for i, b in fixed.items())]
        yield fixed, pts


def c_at(vals, n, p) -> int:
    best = n
    for fixed, pts in subcubes(n):
        if p in pts and len({vals[q] for q in pts}) == 1:
            best = min(best, len(fixed))
    return best


def cmin(vals, n) -> int:
    return min(c_at(vals, n, p) for p in range(1 << n))


def restrict(vals, n, fixed: dict[int, int]) -> tuple[list[int], int]:
    free = [i for i in range(n) if i not in fixed]
    out = []
    for q in range(1 << len(free)):
        p = sum(b << i for i, b in fixed.items())
        for j, i in enumerate(free):
            p |= ((q >> j) & 1) << i
        out.append(vals[p])
    return out, len(free)


def cminstar(vals, n) -> int:
    return max(cmin(*restrict(vals, n, fixed)) for fixed, _ in subcubes(n))


def measures(vals, n) -> dict:
    N = 1 << n
    s = max((sensitivity_at(vals, n, p) for p in range(N)), default=0)
    bs = max(bs_at(vals, n, p) for p in range(N))
    c = max(c_at(vals, n, p) for p in range(N))
    return {"s": s, "bs": bs, "c": c}


def fbs_at(vals, n, p) -> Fraction:
    """Block LP by brute force over all square subsystems (basic solutions)."""
    blocks = minimal_blocks(vals, n, p)
    if not blocks:
        return Fraction(0)
    k = len(blocks)
    # constraints: sum_{B ni i} w_B <= 1 for each i, w_B >= 0
    rows = [[1 if i in B else 0 for B in blocks] for i in range(n)]
    rows += [[-1 if j == b else 0 for j in range(k)] for b in range(k)]
    rhs = [1] * n + [0] * k
    best = Fraction(0)
    for chosen in itertools.combinations(range(len(rows)), k):
        w = _solve([rows[r] for r in chosen], [rhs[r] for r in chosen])
        if w is None:
            continue
        if all(sum(Fraction(a) * x for a, x in zip(row, w)) <= r for row, r in zip(rows, rhs)):
            best = max(best, sum(w))
    return best


def _solve(A, b):
    m = len(A)
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    for col in range(m):
        piv = next((r for r in range(col, m) if M[r][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        for r in range(m):
            if r != col and M[r][col] != 0:
                fac = M[r][col] / M[col][col]
                M[r] = [a - fac * c for a, c in zip(M[r], M[col])]
    return [M[i][m] / M[i][i] for i in range(m)]


# --- trees -------------------------------------------------------------------

def dt_depth(vals: tuple[int, ...], n: int) -> int:
    if len(set(vals)) == 1:
        return 0
    best = n
    for i in range(n):
        kids = [tuple(vals[p] for p in range(1 << n) if (p >> i) & 1 == b) for b in (0, 1)]
        best = min(best, 1 + max(dt_depth(kids[0], n - 1), dt_depth(kids[1], n - 1)))
    return best


def rank(vals: tuple[int, ...], n: int) -> int:
    if len(set(vals)) == 1:
        return 0
    best = n
    for i in range(n):
        r0, r1 = (rank(tuple(vals[p] for p in range(1 << n) if (p >> i) & 1 == b), n - 1) for b in (0, 1))
        best = min(best, r0 + 1 if r0 == r1 else max(r0, r1))
    return best


# --- graphs ------------------------------------------------------------------

def graph_edges(v: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, v + 1), 2))


def canonical(v: int, g: int) -> tuple:
    """Isomorphism invariant key: the lexicographically least sorted edge list."""
    E = graph_edges(v)
    es = [E[k] for k in range(len(E)) if g >> k & 1]
    best = None
    for perm in itertools.permutations(range(1, v + 1)):
        im = tuple(sorted(tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in es))
        best = im if best is None or im < best else best
    return best


def n_iso_classes(v: int) -> int:
    return len({canonical(v, g) for g in range(1 << math.comb(v, 2))})


def _query_dt(vals, n, queries) -> int:
    """Minimum depth when each query splits the live domain by a point set."""

    @lru_cache(maxsize=None)
    def go(dom: frozenset) -> int:
        if len({vals[p] for p in dom}) == 1:
            return 0
        best = n
        for q in queries:
            a, b = dom & q, dom - q
            if a and b:
                best = min(best, 1 + max(go(a), go(b)))
        return best

    return go(frozenset(range(1 << n)))


def subcube_dt(vals, n) -> int:
    qs = {frozenset(pts) for _, pts in subcubes(n)}
    return _query_dt(tuple(vals), n, tuple(qs))


def parity_dt(vals, n) -> int:
    qs = []
    for S in subsets(n):
        if S:
            qs.append(frozenset(p for p in range(1 << n) if sum((p >> i) & 1 for i in S) % 2))
    return _query_dt(tuple(vals), n, tuple(qs))
