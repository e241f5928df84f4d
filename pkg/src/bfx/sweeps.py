"""Exhaustive batch drivers shared by the CLI and the acceptance tests."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

from .core import TruthTable, alt_bits, check_cap
from .measures import _cminstar, measure_report, parity_dt_depth, subcube_dt_depth

CAP_SWEEP = 4
CHECK_SETS = ("certalg", "zebra")
CLASSES = ("all", "zebra", "monotone")


def thread_count(requested: int | None = None) -> int:
    env = os.environ.get("BFX_THREADS")
    if env:
        return max(1, int(env))
    if requested:
        return max(1, requested)
    return os.cpu_count() or 1


def in_class(t: int, n: int, cls: str) -> bool:
    if cls == "all":
        return True
    if cls == "zebra":
        lo, hi = alt_bits(t, n)
        return lo == hi
    if cls == "monotone":
        return TruthTable(n, t).is_monotone()
    raise ValueError(f"unknown function class {cls!r}")


# --- symmetry orbits ----------------------------------------------------------
# Subcube-tree depth, parity-tree depth and Cminstar do not change when
# coordinates are permuted or negated or the output is negated, so sweeps
# compute them once per orbit of that group.

@lru_cache(maxsize=None)
def input_transforms(n: int) -> tuple[tuple[int, ...], ...]:
    """Point maps ``p -> perm(p) ^ neg`` for every coordinate permutation and negation mask."""
    out = []
    for perm in itertools.permutations(range(n)):
        moved = [sum(((p >> i) & 1) << perm[i] for i in range(n)) for p in range(1 << n)]
        for neg in range(1 << n):
            out.append(tuple(q ^ neg for q in moved))
    return tuple(out)


def apply_transform(t: int, pmap: tuple[int, ...]) -> int:
    out = 0
    for p, q in enumerate(pmap):
        if t >> p & 1:
            out |= 1 << q
    return out


@lru_cache(maxsize=None)
def orbit_map(n: int) -> tuple[int, ...]:
    """``orbit_map(n)[t]`` is the smallest table in the orbit of ``t``."""
    check_cap("orbit map", n, CAP_SWEEP)
    size = 1 << (1 << n)
    full = size - 1
    rep = [-1] * size
    maps = input_transforms(n)
    for t in range(size):
        if rep[t] >= 0:
            continue
        for pm in maps:
            u = apply_transform(t, pm)
            rep[u] = rep[full ^ u] = t
    return tuple(rep)


@lru_cache(maxsize=None)
def invariant_measures(rep: int, n: int) -> tuple[int, int, int]:
    """``(subcube_dt, parity_dt, cminstar)`` of an orbit representative."""
    f = TruthTable(n, rep)
    return subcube_dt_depth(f), parity_dt_depth(f), _cminstar(rep, n)


def function_row(t: int, n: int, checks: tuple[str, ...] = ()) -> dict:
    """Report of one function as a JSON-ready dict (``checks`` extended by
    the requested extra check sets)."""
    from . import certalgs, zebra

    f = TruthTable(n, t)
    sdt, pdt, cms = invariant_measures(orbit_map(n)[t], n)
    r = measure_report(f, subcube_dt=sdt, parity_dt=pdt, cminstar=cms)
    extra: list[tuple[str, bool]] = []
    if "certalg" in checks:
        extra += certalgs.verify_alternation_bounds(f)
        extra += certalgs.greedy_fast_checks(t, n)
        extra.append(("certificates meet top monomials", certalgs.certificates_hit_top_monomials(f)))
    if "zebra" in checks and r.zebra:
        extra += zebra.verify_zebra_facts(f)
        extra += zebra.zebra_bound_checks(f)
    r.checks = r.checks + extra
    row = {"f": str(f)}
    row.update(r.as_dict())
    return row


def _chunk(args: tuple[list[int], int, tuple[str, ...]]) -> list[dict]:
    ts, n, checks = args
    return [function_row(t, n, checks) for t in ts]


def parallel_map(fn: Callable, jobs: list, threads: int) -> list:
    """Order-preserving map, in worker processes when ``threads > 1``."""
    if threads <= 1 or len(jobs) <= 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, jobs))


@dataclass
class SweepResult:
    cls: str
    n: int
    rows: list[dict]
    failures: list[dict] = field(default_factory=list)
    ratios: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"class": self.cls, "n": self.n, "count": len(self.rows),
                "failures": self.failures, "ratios": self.ratios, "rows": self.rows}


def _ratio_summary(rows: Iterable[dict]) -> dict:
    """Maxima of ratios for the asymptotic relations (nonconstant functions)."""
    best: dict[str, Fraction] = {}

    def put(k: str, num: int, den: int) -> None:
        if den:
            v = Fraction(num, den)
            if k not in best or v > best[k]:
                best[k] = v

    for r in rows:
        if r["d"] == 0:
            continue
        put("D/bs^2", r["d"], r["bs"] ** 2)
        put("D/deg^2", r["d"], r["deg"] ** 2)
        put("D/s^2", r["d"], r["s"] ** 2)
        put("bs/s", r["bs"], r["s"])
        put("C/deg", r["c"], r["deg"])
        if r["zebra"]:
            put("zebra C/deg", r["c"], r["deg"])
            put("zebra D/deg^2", r["d"], r["deg"] ** 2)
        if r.get("subcube_dt") is not None:
            put("subcube_dt/rank", r["subcube_dt"], r["rank"])
    return {k: str(best[k]) for k in sorted(best)}


def sweep(n: int, cls: str = "all", checks: tuple[str, ...] = (), threads: int = 1) -> SweepResult:
    check_cap("exhaustive sweep", n, CAP_SWEEP)
    for c in checks:
        if c not in CHECK_SETS:
            raise ValueError(f"unknown check set {c!r}")
    if cls == "zebra" and "zebra" not in checks:
        checks = checks + ("zebra",)
    ts = [t for t in range(1 << (1 << n)) if in_class(t, n, cls)]
    size = max(1, -(-len(ts) // (threads * 8))) if threads > 1 else len(ts) or 1
    jobs = [(ts[i:i + size], n, checks) for i in range(0, len(ts), size)]
    rows = [r for part in parallel_map(_chunk, jobs, threads) for r in part]
    failures = [{"f": r["f"], "check": c["name"]} for r in rows for c in r["checks"] if not c["ok"]]
    return SweepResult(cls, n, rows, failures, _ratio_summary(rows))
