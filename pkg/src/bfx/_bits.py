"""Bit-parallel helpers for truth tables stored as Python ints.

A table on ``n`` variables is an int with ``2**n`` bits; bit ``p`` holds the
value at the point whose binary expansion is ``p`` (variable ``i``, 0-based,
is bit ``i`` of ``p``).
"""

from __future__ import annotations

from functools import lru_cache


def popcount(v: int) -> int:
    return bin(v).count("1")


@lru_cache(maxsize=None)
def full_mask(n: int) -> int:
    return (1 << (1 << n)) - 1


@lru_cache(maxsize=None)
def _repeat(n: int, width: int) -> int:
    # 1 at every multiple of ``width`` inside a 2**n bit word
    size = 1 << n
    return ((1 << size) - 1) // ((1 << width) - 1)


@lru_cache(maxsize=None)
def var_mask(n: int, i: int) -> int:
    """Points with x_i = 1 (0-based ``i``)."""
    s = 1 << i
    return (((1 << s) - 1) << s) * _repeat(n, 2 * s)


@lru_cache(maxsize=None)
def _chunk_mask(n: int, c: int) -> int:
    # c ones followed by c zeros, repeated; c must divide 2**(n-1)
    return ((1 << c) - 1) * _repeat(n, 2 * c)


def compress(t: int, n: int, i: int, b: int) -> int:
    """Table of the restriction x_i = b, on the remaining n-1 variables."""
    s = 1 << i
    size = 1 << n
    lo = full_mask(n) ^ var_mask(n, i)
    t = ((t >> s) & lo) if b else (t & lo)
    c = s
    half = size >> 1
    while c < half:
        t = (t | (t >> c)) & _chunk_mask(n, 2 * c)
        c <<= 1
    return t


def expand(t: int, n: int, i: int) -> int:
    """Inverse of :func:`compress` for x_i = 0: spread an (n-1)-table so the
    new variable ``i`` is a don't-care set to 0 (bits at x_i = 1 are 0)."""
    size = 1 << (n + 1)
    c = size >> 2
    s = 1 << i
    while c >= s:
        lo = _chunk_mask(n + 1, c)
        t = (t & lo) | ((t & ~lo) << c)
        c >>= 1
    return t & full_mask(n + 1) & ~var_mask(n + 1, i)


def flip(t: int, n: int, i: int) -> int:
    """Table of y -> f(y xor e_i)."""
    s = 1 << i
    m = var_mask(n, i)
    return ((t & m) >> s) | ((t & (full_mask(n) ^ m)) << s)


def translate(t: int, n: int, x: int) -> int:
    """Table of y -> f(y xor x)."""
    i = 0
    while x:
        if x & 1:
            t = flip(t, n, i)
        x >>= 1
        i += 1
    return t


def up_closure(t: int, n: int) -> int:
    """Points y such that some set point z satisfies z <= y."""
    for i in range(n):
        s = 1 << i
        t |= (t & (full_mask(n) ^ var_mask(n, i))) << s
    return t


def down_closure(t: int, n: int) -> int:
    for i in range(n):
        s = 1 << i
        t |= (t & var_mask(n, i)) >> s
    return t


def strict_up(t: int, n: int) -> int:
    """Points strictly above some set point."""
    u = up_closure(t, n)
    out = 0
    for i in range(n):
        out |= (u & (full_mask(n) ^ var_mask(n, i))) << (1 << i)
    return out


def strict_down(t: int, n: int) -> int:
    """Points strictly below some set point."""
    d = down_closure(t, n)
    out = 0
    for i in range(n):
        out |= (d & var_mask(n, i)) >> (1 << i)
    return out


@lru_cache(maxsize=None)
def weight_masks(n: int) -> tuple[int, ...]:
    """``weight_masks(n)[w]`` has a bit at every point of Hamming weight w."""
    masks = [0] * (n + 1)
    for p in range(1 << n):
        masks[popcount(p)] |= 1 << p
    return tuple(masks)


def max_weight_in(t: int, n: int) -> int:
    """Largest Hamming weight of a set point; -1 if ``t`` is empty."""
    wm = weight_masks(n)
    for w in range(n, -1, -1):
        if t & wm[w]:
            return w
    return -1


def iter_bits(t: int):
    while t:
        low = t & -t
        yield low.bit_length() - 1
        t ^= low


def span_mask(pts: int, n: int) -> int:
    """Smallest subcube (as a point mask) containing every set point."""
    cube = full_mask(n)
    for i in range(n):
        m = var_mask(n, i)
        if not pts & m:
            cube &= ~m
        elif not pts & ~m:
            cube &= m
    return cube


@lru_cache(maxsize=None)
def subcube_point_masks(n: int) -> tuple[tuple[int, int, int], ...]:
    """All 3**n subcubes as ``(fixed_vars, fixed_vals, point_mask)``.

    Ordered by co-dimension, then by the sorted fixed-index tuple, then by the
    assignment read in index order.
    """
    out = []
    for fixed in range(1 << n):
        idx = [i for i in range(n) if fixed >> i & 1]
        for k in range(1 << len(idx)):
            vals = 0
            for j, i in enumerate(idx):
                if k >> (len(idx) - 1 - j) & 1:
                    vals |= 1 << i
            mask = full_mask(n)
            for i in idx:
                m = var_mask(n, i)
                mask &= m if vals >> i & 1 else ~m
            key = (len(idx), tuple(idx), tuple(vals >> i & 1 for i in idx))
            out.append((key, fixed, vals, mask))
    out.sort(key=lambda r: r[0])
    return tuple((f, v, m) for _, f, v, m in out)
