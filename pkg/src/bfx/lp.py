"""Exact rational linear programs of the form ``max c.w  s.t.  A w <= b, w >= 0``
with ``b >= 0`` (the origin is feasible, so no phase one is needed)."""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Sequence


class Unbounded(ArithmeticError):
    pass


def simplex_max(c: Sequence, A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, list[Fraction]]:
    """Tableau simplex with Bland's rule. Returns ``(optimum, w)``."""
    m, n = len(A), len(c)
    if any(Fraction(v) < 0 for v in b):
        raise ValueError("simplex_max needs b >= 0")
    # columns 0..n-1 decision vars, n..n+m-1 slacks
    rows = [[Fraction(v) for v in A[r]] + [Fraction(int(r == k)) for k in range(m)] + [Fraction(b[r])]
            for r in range(m)]
    obj = [-Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = [n + r for r in range(m)]
    while True:
        enter = next((j for j in range(n + m) if obj[j] < 0), None)
        if enter is None:
            break
        best = None
        for r in range(m):
            a = rows[r][enter]
            if a > 0:
                ratio = rows[r][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[r] < basis[best[1]]):
                    best = (ratio, r)
        if best is None:
            raise Unbounded("objective unbounded")
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [v / piv for v in rows[r]]
        for k in range(m):
            if k != r and rows[k][enter] != 0:
                f = rows[k][enter]
                rows[k] = [a - f * p for a, p in zip(rows[k], rows[r])]
        if obj[enter] != 0:
            f = obj[enter]
            obj = [a - f * p for a, p in zip(obj, rows[r])]
        basis[r] = enter
    w = [Fraction(0)] * n
    for r, j in enumerate(basis):
        if j < n:
            w[j] = rows[r][-1]
    return obj[-1], w


def _solve_square(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    k = len(M)
    aug = [row[:] + [v] for row, v in zip(M, rhs)]
    for col in range(k):
        piv = next((r for r in range(col, k) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(k):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * q for a, q in zip(aug[r], aug[col])]
    return [aug[r][-1] for r in range(k)]


def vertex_enumeration_max(c: Sequence, A: Sequence[Sequence], b: Sequence) -> Fraction:
    """Optimum by brute force over every basic feasible solution.

    Every choice of ``n`` linearly independent tight constraints among the
    ``m`` rows and ``n`` non-negativity bounds is solved exactly; feasible
    solutions are vertices and the best one is the optimum of a bounded LP.
    """
    n = len(c)
    cons = [([Fraction(v) for v in row], Fraction(rhs)) for row, rhs in zip(A, b)]
    for j in range(n):
        cons.append(([Fraction(-int(k == j)) for k in range(n)], Fraction(0)))
    best = None
    for chosen in combinations(range(len(cons)), n):
        w = _solve_square([cons[k][0] for k in chosen], [cons[k][1] for k in chosen])
        if w is None:
            continue
        if all(sum(a * x for a, x in zip(row, w)) <= rhs for row, rhs in cons):
            val = sum(Fraction(ci) * x for ci, x in zip(c, w))
            if best is None or val > best:
                best = val
    if best is None:
        raise ValueError("no basic feasible solution")
    return best
