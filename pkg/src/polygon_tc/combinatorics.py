"""Subset, dominance, and parity primitives.

Subsets of ``{1, ..., n-1}`` are stored as Python ints used as bitmasks:
bit ``i`` is set when ``i`` belongs to the set (bit 0 is never used).
"""

from __future__ import annotations

from typing import Iterable, Sequence

MAX_ELEMENT = 15


def as_mask(items: int | Iterable[int]) -> int:
    """Coerce an int bitmask or an iterable of positive integers to a bitmask."""
    if isinstance(items, int):
        if items < 0 or items & 1:
            raise ValueError(f"invalid subset mask {items!r}")
        return items
    mask = 0
    for i in items:
        i = int(i)
        if i < 1:
            raise ValueError(f"subset elements must be positive, got {i}")
        if mask >> i & 1:
            raise ValueError(f"repeated element {i}")
        mask |= 1 << i
    return mask


def elements(mask: int) -> list[int]:
    """Elements of ``mask`` in increasing order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def size(mask: int) -> int:
    return bin(mask).count("1")


def top(mask: int) -> int:
    """Largest element (0 for the empty set)."""
    return mask.bit_length() - 1 if mask else 0


def full(k: int) -> int:
    """The mask of ``{1, ..., k}``."""
    return ((1 << k) - 1) << 1


def dominates(s: int | Iterable[int], t: int | Iterable[int]) -> bool:
    """True iff ``s <= t`` in the dominance order.

    ``s <= t`` when ``t`` contains distinct elements ``t_1, ..., t_k`` with
    ``s_i <= t_i``.  Matching the i-th largest of ``s`` against the i-th
    largest of ``t`` decides this greedily.
    """
    s = as_mask(s)
    t = as_mask(t)
    if s & ~t == 0:
        return True
    se = elements(s)
    te = elements(t)
    if len(se) > len(te):
        return False
    te = te[len(te) - len(se):]
    return all(a <= b for a, b in zip(se, te))


def binom_mod2(n: int, k: int) -> int:
    """``C(n, k) mod 2``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("binom_mod2 needs n >= 0")
    if k < 0 or k > n:
        return 0
    return 0 if k & (n - k) else 1


def in_Sk(b: Sequence[int]) -> bool:
    """True iff every prefix sum of ``b`` is at most its length."""
    total = 0
    for j, x in enumerate(b, start=1):
        total += x
        if total > j:
            return False
    return True


def theta(j: int | Iterable[int], gee: Sequence[int]) -> tuple[int, ...]:
    """Count the elements of ``j`` in each gap ``(g_{i+1}, g_i]`` of a gee.

    ``gee`` is given in decreasing order ``g_1 > ... > g_k``; ``g_{k+1} = 0``.
    """
    jm = as_mask(j)
    g = list(gee)
    if any(x <= y for x, y in zip(g, g[1:])):
        raise ValueError("gee must be strictly decreasing")
    if jm and (not g or top(jm) > g[0]):
        raise ValueError("element of J exceeds the largest gee element")
    bounds = g + [0]
    out = []
    for i in range(len(g)):
        lo, hi = bounds[i + 1], bounds[i]
        window = ((1 << (hi + 1)) - 1) & ~((1 << (lo + 1)) - 1)
        out.append(size(jm & window))
    return tuple(out)


def two_adic(x: int) -> tuple[int, int]:
    """Return ``(nu, lg)``: the 2-adic valuation and floor(log2) of ``x``."""
    if x <= 0:
        raise ValueError("two_adic needs a positive integer")
    return (x & -x).bit_length() - 1, x.bit_length() - 1


def lg(x: int) -> int:
    return two_adic(x)[1]


def nu(x: int) -> int:
    return two_adic(x)[0]


def reduction_modulus(i: int) -> int:
    """``2**lg(2i)``, the modulus for the i-th gap (1-based)."""
    return 1 << lg(2 * i)
