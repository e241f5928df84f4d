"""Zebra functions: every monotone path from ``0^n`` to ``1^n`` alternates the
same number of times, so the per-point alternation is well defined and its
level sets ("stripes") partition the cube."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _bits
from .core import TruthTable, alt_bits, alternation_profile, check_cap, restrict_bits
from .measures import _summary, _cminstar

CAP_ENUMERATE = 4


class NotZebra(ValueError):
    pass


@dataclass(frozen=True)
class StripeDecomposition:
    arity: int
    k: int
    masks: tuple[int, ...]  # stripe i as a point mask
    values: tuple[int, ...]  # colour of stripe i
    point_stripe: tuple[int, ...]  # stripe index of every point

    @property
    def stripes(self) -> tuple[tuple[int, ...], ...]:
        """Stripe point sets as sorted index tuples."""
        return tuple(tuple(_bits.iter_bits(m)) for m in self.masks)

    def sizes(self) -> tuple[int, ...]:
        return tuple(_bits.popcount(m) for m in self.masks)


def is_zebra(f: TruthTable) -> bool:
    lo, hi = alt_bits(f.bits, f.arity)
    return lo == hi


def stripes(f: TruthTable) -> StripeDecomposition:
    prof = alternation_profile(f)
    if not prof.is_zebra:
        raise NotZebra(f"{f} is not a zebra function")
    n, k = f.arity, prof.alt
    per_point = tuple(int(a) for a in prof.max_alt)
    masks = [0] * (k + 1)
    for p, a in enumerate(per_point):
        masks[a] |= 1 << p
    # every monotone path crosses every stripe, so each one is nonempty
    values = tuple((f.bits >> (m & -m).bit_length() - 1) & 1 for m in masks)
    return StripeDecomposition(n, k, tuple(masks), values, per_point)


def _check_index(sd: StripeDecomposition, i: int) -> None:
    if not 0 <= i <= sd.k:
        raise ValueError(f"stripe index {i} outside [0, {sd.k}]")


def _extremes(sd: StripeDecomposition, i: int) -> tuple[int, int]:
    m, n = sd.masks[i], sd.arity
    return m & ~_bits.strict_up(m, n), m & ~_bits.strict_down(m, n)


def stripe_extremes(f: TruthTable, i: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(minimal points, maximal points)`` of stripe ``i`` as point indices."""
    sd = stripes(f)
    _check_index(sd, i)
    lo, hi = _extremes(sd, i)
    return tuple(_bits.iter_bits(lo)), tuple(_bits.iter_bits(hi))


def threshold_function(f: TruthTable, i: int) -> TruthTable:
    """Indicator of the stripes with index at least ``i``."""
    sd = stripes(f)
    _check_index(sd, i)
    bits = 0
    for m in sd.masks[i:]:
        bits |= m
    return TruthTable(f.arity, bits)


def verify_zebra_facts(f: TruthTable) -> list[tuple[str, bool]]:
    """Exhaustive checks of the basic stripe facts, one verdict per fact."""
    prof = alternation_profile(f)
    if not prof.is_zebra:
        return [("zebra", False)]
    n, t = f.arity, f.bits
    full = _bits.full_mask(n)
    well_defined = all(int(a) == int(b) for a, b in zip(prof.min_alt, prof.max_alt))
    sd = stripes(f)
    union = 0
    disjoint = True
    for m in sd.masks:
        disjoint &= not (union & m)
        union |= m
    mono = all((t & m) in (0, m) for m in sd.masks)
    part1 = well_defined and disjoint and union == full and all(sd.masks) and mono

    part2 = all(sd.values[i] != sd.values[i + 1] for i in range(sd.k))

    part3 = True
    part4 = True
    for i, m in enumerate(sd.masks):
        lo, hi = _extremes(sd, i)
        part3 &= m & ~_bits.up_closure(lo, n) == 0 and m & ~_bits.down_closure(hi, n) == 0
        for p in _bits.iter_bits(lo):
            for j in range(n):
                if p >> j & 1 and sd.point_stripe[p ^ (1 << j)] != i - 1:
                    part4 = False
        for p in _bits.iter_bits(hi):
            for j in range(n):
                if not p >> j & 1 and sd.point_stripe[p ^ (1 << j)] != i + 1:
                    part4 = False

    part5 = True
    for j in range(n):
        for b in (0, 1):
            lo, hi = alt_bits(restrict_bits(t, n, [(j, b)]), n - 1)
            part5 &= lo == hi

    f0 = t & 1
    parity = all(((t >> p) & 1) == f0 ^ (a & 1) for p, a in enumerate(sd.point_stripe))
    return [
        ("partition", part1),
        ("adjacent colours differ", part2),
        ("extremal points exist", part3),
        ("extremal flips change stripe", part4),
        ("closed under restriction", part5),
        ("parity identity", parity),
    ]


def zebra_bound_checks(f: TruthTable) -> list[tuple[str, bool]]:
    """The constant-free facts behind the zebra upper bounds."""
    sd = stripes(f)
    n, t = f.arity, f.bits
    sm = _summary(t, n)
    s = sm.s
    checks = [
        ("stripe count = alt+1", len(sd.masks) == alt_bits(t, n)[1] + 1),
        ("cminstar<=bs", _cminstar(t, n) <= sm.bs),
    ]
    monotone = one_side = True
    for i in range(1, sd.k + 1):
        fi = threshold_function(f, i)
        monotone &= fi.is_monotone()
        si = _summary(fi.bits, n)
        one_side &= si.c1 <= s and si.c0 <= s
    checks.append(("thresholds monotone", monotone))
    checks.append(("C1(f_i)<=s and C0(f_i)<=s", one_side))
    minimal_ok = True
    for i in range(1, sd.k + 1):
        lo, _ = _extremes(sd, i)
        for p in _bits.iter_bits(lo):
            flips = [p ^ (1 << j) for j in range(n) if p >> j & 1]
            sensitive = all(((t >> q) & 1) != ((t >> p) & 1) for q in flips)
            minimal_ok &= sensitive and len(flips) <= s
    checks.append(("minimal points: 1-bits sensitive, weight<=s", minimal_ok))
    return checks


def enumerate_zebra(n: int) -> Iterator[TruthTable]:
    check_cap("zebra enumeration", n, CAP_ENUMERATE)
    for t in range(1 << (1 << n)):
        lo, hi = alt_bits(t, n)
        if lo == hi:
            yield TruthTable(n, t)
