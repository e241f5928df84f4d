"""Truth tables, subcubes, multilinear interpolation and monotone-path alternation.

Bit convention shared by the whole package: the value of ``f`` at the point
``x = (x_1, ..., x_n)`` sits at index ``sum_i x_i * 2**(i-1)``, so ``x_1`` is
the least significant bit. Coordinates are 1-based in every public signature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import math
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import _bits

MAX_ARITY = 20


class ArityError(ValueError):
    """Arity mismatch or an out-of-range coordinate."""


class CapExceeded(ValueError):
    """A documented per-operation arity cap was exceeded."""

    def __init__(self, what: str, arity: int, cap: int):
        super().__init__(f"{what}: arity {arity} exceeds cap {cap}")
        self.what = what
        self.arity = arity
        self.cap = cap


def check_cap(what: str, arity: int, cap: int) -> None:
    if arity > cap:
        raise CapExceeded(what, arity, cap)


def _pack(values: np.ndarray) -> int:
    packed = np.packbits(np.asarray(values, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _unpack(bits: int, n: int) -> np.ndarray:
    size = 1 << n
    raw = bits.to_bytes(max(1, (size + 7) // 8), "little")
    return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]


def bit_list(bits: int, n: int) -> list[int]:
    size = 1 << n
    return [int(c) for c in reversed(format(bits, f"0{size}b"))]


@lru_cache(maxsize=None)
def _weights(n: int) -> np.ndarray:
    w = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        w += (np.arange(1 << n) >> i) & 1
    w.setflags(write=False)
    return w


def point_index(x: Sequence[int]) -> int:
    idx = 0
    for i, b in enumerate(x):
        if b not in (0, 1):
            raise ValueError(f"point coordinates must be bits, got {b!r}")
        idx |= b << i
    return idx


def index_point(idx: int, n: int) -> tuple[int, ...]:
    return tuple((idx >> i) & 1 for i in range(n))


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function on ``arity`` bits, stored as a ``2**arity``-bit int."""

    arity: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.arity <= MAX_ARITY:
            raise ArityError(f"arity must be in [0, {MAX_ARITY}], got {self.arity}")
        if self.bits < 0 or self.bits >> (1 << self.arity):
            raise ValueError("table has bits beyond 2**arity entries")

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "TruthTable":
        vals = np.asarray(list(values) if not isinstance(values, np.ndarray) else values)
        size = len(vals)
        n = size.bit_length() - 1
        if size == 0 or 1 << n != size:
            raise ArityError(f"table length {size} is not a power of two")
        return cls(n, _pack(vals != 0))

    @classmethod
    def from_function(cls, n: int, fn: Callable[[tuple[int, ...]], int]) -> "TruthTable":
        bits = 0
        for p in range(1 << n):
            if fn(index_point(p, n)):
                bits |= 1 << p
        return cls(n, bits)

    @classmethod
    def constant(cls, n: int, b: int) -> "TruthTable":
        return cls(n, _bits.full_mask(n) if b else 0)

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def values(self) -> np.ndarray:
        return _unpack(self.bits, self.arity)

    def at(self, idx: int) -> int:
        return (self.bits >> idx) & 1

    def __call__(self, x: Sequence[int]) -> int:
        return evaluate(self, x)

    def __invert__(self) -> "TruthTable":
        return TruthTable(self.arity, self.bits ^ _bits.full_mask(self.arity))

    def is_constant(self) -> bool:
        return self.bits == 0 or self.bits == _bits.full_mask(self.arity)

    def count_ones(self) -> int:
        return _bits.popcount(self.bits)

    def is_monotone(self) -> bool:
        n, t = self.arity, self.bits
        for i in range(n):
            m = _bits.var_mask(n, i)
            # f(x with x_i=0) <= f(x with x_i=1)
            if (t & ~m & _bits.full_mask(n)) << (1 << i) & ~t & m:
                return False
        return True

    def is_symmetric(self) -> bool:
        for wm in _bits.weight_masks(self.arity):
            part = self.bits & wm
            if part and part != wm:
                return False
        return True

    def to_hex(self) -> str:
        return format(self.bits, "x")

    def __str__(self) -> str:
        return f"hex:{self.arity}:{self.to_hex()}"


def evaluate(f: TruthTable, x: Sequence[int]) -> int:
    if len(x) != f.arity:
        raise ArityError(f"point has {len(x)} bits, function has arity {f.arity}")
    return f.at(point_index(x))


@dataclass(frozen=True)
class Subcube:
    """``{x : x_i = b for (i, b) in fixed}`` inside ``{0,1}^ambient_arity``."""

    ambient_arity: int
    fixed: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        fixed = self.fixed
        if isinstance(fixed, Mapping):
            fixed = tuple(fixed.items())
        fixed = tuple(sorted((int(i), int(b)) for i, b in fixed))
        seen = set()
        for i, b in fixed:
            if not 1 <= i <= self.ambient_arity:
                raise ArityError(f"coordinate {i} outside [1, {self.ambient_arity}]")
            if i in seen:
                raise ValueError(f"coordinate {i} fixed twice")
            if b not in (0, 1):
                raise ValueError(f"coordinate {i} fixed to non-bit {b!r}")
            seen.add(i)
        object.__setattr__(self, "fixed", fixed)

    @classmethod
    def from_masks(cls, n: int, fixed_vars: int, fixed_vals: int) -> "Subcube":
        return cls(n, tuple((i + 1, (fixed_vals >> i) & 1) for i in range(n) if fixed_vars >> i & 1))

    @property
    def codim(self) -> int:
        return len(self.fixed)

    @property
    def fixed_map(self) -> dict[int, int]:
        return dict(self.fixed)

    @property
    def var_mask(self) -> int:
        return sum(1 << (i - 1) for i, _ in self.fixed)

    @property
    def val_mask(self) -> int:
        return sum(b << (i - 1) for i, b in self.fixed)

    @property
    def free(self) -> tuple[int, ...]:
        fixed = self.fixed_map
        return tuple(i for i in range(1, self.ambient_arity + 1) if i not in fixed)

    def contains_index(self, idx: int) -> bool:
        return (idx & self.var_mask) == self.val_mask

    def __contains__(self, x: Sequence[int]) -> bool:
        if len(x) != self.ambient_arity:
            raise ArityError("point arity does not match subcube")
        return all(x[i - 1] == b for i, b in self.fixed)

    def point_mask(self) -> int:
        n = self.ambient_arity
        mask = _bits.full_mask(n)
        for i, b in self.fixed:
            m = _bits.var_mask(n, i - 1)
            mask &= m if b else ~m
        return mask

    def merge(self, inner: "Subcube") -> "Subcube":
        """Compose with a subcube of the free coordinates (renumbered ascending)."""
        free = self.free
        if inner.ambient_arity != len(free):
            raise ArityError("inner subcube must live on the free coordinates")
        extra = tuple((free[i - 1], b) for i, b in inner.fixed)
        return Subcube(self.ambient_arity, self.fixed + extra)

    def __str__(self) -> str:
        if not self.fixed:
            return "{}"
        return "{" + ", ".join(f"x{i}={b}" for i, b in self.fixed) + "}"


def restrict_bits(t: int, n: int, fixed: Iterable[tuple[int, int]]) -> int:
    """Restriction on raw tables; ``fixed`` holds 0-based (index, bit) pairs."""
    for i, b in sorted(fixed, reverse=True):
        t = _bits.compress(t, n, i, b)
        n -= 1
    return t


def restrict(f: TruthTable, c: Subcube) -> TruthTable:
    if c.ambient_arity != f.arity:
        raise ArityError(f"subcube arity {c.ambient_arity} != function arity {f.arity}")
    t = restrict_bits(f.bits, f.arity, ((i - 1, b) for i, b in c.fixed))
    return TruthTable(f.arity - c.codim, t)


def identify(f: TruthTable, i: int, j: int) -> TruthTable:
    """Identify x_i with x_j; the result lives on ``[n] \\ {j}`` in ascending order."""
    n = f.arity
    if i == j:
        raise ValueError("cannot identify a variable with itself")
    for k in (i, j):
        if not 1 <= k <= n:
            raise ArityError(f"coordinate {k} outside [1, {n}]")
    t0 = _bits.compress(f.bits, n, j - 1, 0)
    t1 = _bits.compress(f.bits, n, j - 1, 1)
    ii = i - 1 if i < j else i - 2
    m = _bits.var_mask(n - 1, ii)
    return TruthTable(n - 1, (t0 & ~m & _bits.full_mask(n - 1)) | (t1 & m))


def compose(f: TruthTable, g: TruthTable) -> TruthTable:
    """``f ∘ g``; copy ``b`` of ``g`` reads coordinates ``b*k+1 .. (b+1)*k``."""
    m, k = f.arity, g.arity
    if m * k > MAX_ARITY:
        raise CapExceeded("compose", m * k, MAX_ARITY)
    idx = np.arange(1 << (m * k), dtype=np.int64)
    gv = g.values.astype(np.int64)
    fidx = np.zeros_like(idx)
    for b in range(m):
        fidx |= gv[(idx >> (b * k)) & ((1 << k) - 1)] << b
    return TruthTable(m * k, _pack(f.values[fidx]))


# --- named families ---------------------------------------------------------

def _from_weights(n: int, profile: Sequence[int]) -> TruthTable:
    prof = np.asarray(profile, dtype=np.uint8)
    return TruthTable(n, _pack(prof[_weights(n)]))


def and_(n: int) -> TruthTable:
    _need(n >= 1, "and needs n >= 1")
    return TruthTable(n, 1 << ((1 << n) - 1))


def or_(n: int) -> TruthTable:
    _need(n >= 1, "or needs n >= 1")
    return TruthTable(n, _bits.full_mask(n) ^ 1)


def xor(n: int) -> TruthTable:
    _need(n >= 1, "xor needs n >= 1")
    return _from_weights(n, [w & 1 for w in range(n + 1)])


def maj(n: int) -> TruthTable:
    _need(n >= 1 and n % 2 == 1, "maj needs odd n")
    return _from_weights(n, [int(2 * w > n) for w in range(n + 1)])


def sym(n: int, profile: Sequence[int] | str) -> TruthTable:
    prof = [int(c) for c in profile]
    _need(n >= 1 and len(prof) == n + 1, f"sym profile needs {n + 1} bits")
    _need(all(b in (0, 1) for b in prof), "sym profile must be bits")
    return _from_weights(n, prof)


def tribes(r: int, c: int) -> TruthTable:
    """OR of ``r`` ANDs; tribe ``i`` owns coordinates ``(i-1)*c+1 .. i*c``."""
    _need(r >= 1 and c >= 1, "tribes needs r, c >= 1")
    n = r * c
    _need(n <= MAX_ARITY, "tribes arity too large")
    idx = np.arange(1 << n, dtype=np.int64)
    block = (1 << c) - 1
    out = np.zeros(1 << n, dtype=bool)
    for i in range(r):
        out |= ((idx >> (i * c)) & block) == block
    return TruthTable(n, _pack(out))


def ind(m: int) -> TruthTable:
    """Indexing on ``m + 2**m`` bits: address bits first (x_1 least significant),
    then targets ``z_0 .. z_{2^m - 1}``."""
    _need(m >= 1, "ind needs m >= 1")
    n = m + (1 << m)
    _need(n <= MAX_ARITY, "ind arity too large")
    idx = np.arange(1 << n, dtype=np.int64)
    addr = idx & ((1 << m) - 1)
    return TruthTable(n, _pack((idx >> (m + addr)) & 1))


def affine_zebra(n: int, coeffs: Sequence, g: Sequence[int] | Callable[[int], int]) -> TruthTable:
    """``g(ceil(l0 + sum l_i x_i))`` with every ``l_i`` (i >= 1) strictly inside (0, 1).

    ``g`` is either a callable on integers or a bit profile indexed by the
    offset ``ceil(l(x)) - ceil(l0)``, which ranges over ``0 .. n``.
    """
    ls = [Fraction(c) for c in coeffs]
    _need(len(ls) == n + 1, f"affine_zebra needs {n + 1} coefficients")
    _need(all(0 < c < 1 for c in ls[1:]), "affine_zebra coefficients must lie in (0, 1)")
    base = math.ceil(ls[0])
    if callable(g):
        outer = g
    else:
        prof = [int(b) for b in g]
        _need(len(prof) >= n + 1, f"affine_zebra profile needs {n + 1} bits")
        outer = lambda v: prof[v - base]  # noqa: E731
    bits = 0
    for p in range(1 << n):
        val = ls[0] + sum(ls[i + 1] for i in range(n) if p >> i & 1)
        if outer(math.ceil(val)):
            bits |= 1 << p
    return TruthTable(n, bits)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


# --- multilinear interpolation ---------------------------------------------

@dataclass(frozen=True)
class MultilinearPolynomial:
    """Integer multilinear polynomial; keys are variable subsets as bitmasks
    (bit ``i-1`` stands for ``x_i``). Zero coefficients are not stored."""

    arity: int
    coefficients: Mapping[int, int] = field(default_factory=dict)

    def coefficient(self, subset: int) -> int:
        return self.coefficients.get(subset, 0)

    @property
    def degree(self) -> int:
        return max((_bits.popcount(s) for s in self.coefficients), default=0)

    def monomials(self) -> list[int]:
        return sorted(self.coefficients, key=lambda s: (_bits.popcount(s), _subset_key(s)))

    def maximal_monomials(self) -> list[int]:
        mons = list(self.coefficients)
        out = [s for s in mons if not any(s != t and s & t == s for t in mons)]
        return sorted(out, key=_subset_key)

    def __call__(self, x: Sequence[int]) -> int:
        idx = point_index(x)
        return sum(c for s, c in self.coefficients.items() if s & idx == s)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for s in self.monomials():
            c = self.coefficients[s]
            mon = "".join(f"x{i + 1}" for i in range(self.arity) if s >> i & 1)
            terms.append(f"{c}{'*' + mon if mon else ''}")
        return " + ".join(terms).replace("+ -", "- ")


def _subset_key(s: int) -> tuple[int, ...]:
    return tuple(i for i in range(s.bit_length()) if s >> i & 1)


def mobius_coefficients(f: TruthTable) -> np.ndarray:
    """Dense coefficient vector (index = subset mask) by the subset-difference transform."""
    n = f.arity
    a = f.values.astype(np.int64)
    for i in range(n):
        s = 1 << i
        v = a.reshape(-1, 2, s)
        v[:, 1, :] -= v[:, 0, :]
    return a


def mobius_polynomial(f: TruthTable) -> MultilinearPolynomial:
    a = mobius_coefficients(f)
    nz = np.flatnonzero(a)
    return MultilinearPolynomial(f.arity, {int(s): int(a[s]) for s in nz})


def degree_of(f: TruthTable) -> int:
    a = mobius_coefficients(f)
    nz = np.flatnonzero(a)
    if nz.size == 0:
        return 0
    return int(_weights(f.arity)[nz].max())


# --- alternation ----------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlternationProfile:
    """Per-point min/max alternation over monotone paths from ``0^n``."""

    arity: int
    min_alt: np.ndarray
    max_alt: np.ndarray

    @property
    def alt(self) -> int:
        return int(self.max_alt[-1])

    @property
    def is_zebra(self) -> bool:
        return int(self.min_alt[-1]) == int(self.max_alt[-1])


def alternation_profile(f: TruthTable) -> AlternationProfile:
    n = f.arity
    if n <= 12:
        mn, mx = _alt_small(f.bits, n)
        return AlternationProfile(n, np.array(mn, dtype=np.int64), np.array(mx, dtype=np.int64))
    return _alt_numpy(f)


def _alt_small(t: int, n: int) -> tuple[list[int], list[int]]:
    vals = bit_list(t, n)
    size = 1 << n
    mn = [0] * size
    mx = [0] * size
    for p in range(1, size):
        fp = vals[p]
        lo, hi = n + 1, -1
        q = p
        while q:
            low = q & -q
            q ^= low
            y = p ^ low
            d = vals[y] != fp
            a = mx[y] + d
            if a > hi:
                hi = a
            a = mn[y] + d
            if a < lo:
                lo = a
        mn[p] = lo
        mx[p] = hi
    return mn, mx


def _alt_numpy(f: TruthTable) -> AlternationProfile:
    n = f.arity
    vals = f.values.astype(np.int64)
    w = _weights(n)
    mx = np.zeros(1 << n, dtype=np.int64)
    mn = np.zeros(1 << n, dtype=np.int64)
    for level in range(1, n + 1):
        pts = np.flatnonzero(w == level)
        hi = np.full(pts.size, -1, dtype=np.int64)
        lo = np.full(pts.size, n + 1, dtype=np.int64)
        for i in range(n):
            has = (pts >> i) & 1 == 1
            sub = pts[has]
            nb = sub ^ (1 << i)
            d = (vals[sub] != vals[nb]).astype(np.int64)
            hi[has] = np.maximum(hi[has], mx[nb] + d)
            lo[has] = np.minimum(lo[has], mn[nb] + d)
        mx[pts] = hi
        mn[pts] = lo
    return AlternationProfile(n, mn, mx)


@lru_cache(maxsize=1 << 18)
def alt_bits(t: int, n: int) -> tuple[int, int]:
    """``(min, max)`` alternation at ``1^n`` for a raw table."""
    if n == 0:
        return 0, 0
    if n <= 12:
        mn, mx = _alt_small(t, n)
        return mn[-1], mx[-1]
    prof = _alt_numpy(TruthTable(n, t))
    return int(prof.min_alt[-1]), int(prof.max_alt[-1])


def alt(f: TruthTable) -> int:
    return alt_bits(f.bits, f.arity)[1]
