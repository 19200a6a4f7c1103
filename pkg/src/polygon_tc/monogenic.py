"""Closed-form duality values for codes with a single gene.

A gee ``g_1 > ... > g_k`` is described by its gaps ``a_i = g_i - g_{i+1}``
(with ``g_{k+1} = 0``).  The top-degree value of ``R^(m-r) V_J`` is a sum,
over lattice-path tuples ``B``, of products of binomial parities; it only
depends on the gaps reduced mod ``2**lg(2i)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .combinatorics import as_mask, binom_mod2, elements, in_Sk, reduction_modulus, size, theta


def gaps_from_gee(gee: int | Iterable[int]) -> tuple[int, ...]:
    g = list(reversed(elements(as_mask(gee))))
    nxt = g[1:] + [0]
    return tuple(a - b for a, b in zip(g, nxt))


def gee_from_gaps(a: Sequence[int]) -> int:
    if any(x < 1 for x in a):
        raise ValueError("gaps must be positive")
    mask = 0
    acc = 0
    for x in reversed(a):
        acc += x
        mask |= 1 << acc
    return mask


def _gap_parity(a: int, b: int) -> int:
    # C(a + b - 2, b) mod 2 with C(x, 0) = 1 even for x = -1
    if b == 0:
        return 1
    return binom_mod2(a + b - 2, b) if a + b - 2 >= 0 else 0


@lru_cache(maxsize=None)
def _lattice_tuples(k: int, total: int, offset: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """All ``B >= 0`` with ``|B| = total`` and ``B + offset`` in S_k."""
    out = []

    def rec(i: int, prefix: int, left: int, acc: list[int]) -> None:
        if i == k:
            if left == 0:
                out.append(tuple(acc))
            return
        for b in range(left + 1):
            s = prefix + b + offset[i]
            if s > i + 1:
                break
            acc.append(b)
            rec(i + 1, s, left - b, acc)
            acc.pop()

    rec(0, 0, total, [])
    return tuple(out)


def phi_closed_form(a: Sequence[int], j: int | Iterable[int] = 0) -> int:
    """Top-degree duality value of ``R^(m-|J|) V_J`` for the gee with gaps ``a``."""
    a = tuple(int(x) for x in a)
    k = len(a)
    jm = as_mask(j)
    gee = list(reversed(elements(gee_from_gaps(a))))
    th = theta(jm, gee)
    r = size(jm)
    if r > k or not in_Sk(th):
        return 0
    total = 0
    for b in _lattice_tuples(k, k - r, th):
        term = 1
        for ai, bi in zip(a, b):
            if not _gap_parity(ai, bi):
                term = 0
                break
        total ^= term
    return total


def phi_indicator(a: Sequence[int], eps: Sequence[int]) -> int:
    """Value on ``Y_I = R^t w_1^e_1 ... w_k^e_k`` with ``w_i = V_{g_i}``."""
    gee = list(reversed(elements(gee_from_gaps(a))))
    return phi_closed_form(a, [g for g, e in zip(gee, eps) if e])


def abar_reduce(a: Sequence[int]) -> tuple[int, ...]:
    return tuple(x % reduction_modulus(i) for i, x in enumerate(a, start=1))


def abar_representative(abar: Sequence[int]) -> tuple[int, ...]:
    """Positive gaps with the given reductions (a zero residue becomes the modulus)."""
    return tuple(x if x else reduction_modulus(i) for i, x in enumerate(abar, start=1))


def abar_space(k: int) -> Iterable[tuple[int, ...]]:
    return product(*(range(reduction_modulus(i)) for i in range(1, k + 1)))


def count_Rm_zero(k: int) -> tuple[int, int]:
    """``(number of residue vectors, number with R^m = 0)`` for gees of size ``k``."""
    if not 1 <= k <= 6:
        raise ValueError("count_Rm_zero supports 1 <= k <= 6")
    total = zero = 0
    for abar in abar_space(k):
        total += 1
        if not phi_closed_form(abar_representative(abar)):
            zero += 1
    return total, zero


def toplem_check(a: Sequence[int]) -> bool:
    """True iff every reduced gap equals one (all shorter w-monomials vanish)."""
    return all(x == 1 for x in abar_reduce(a))


def thm01_certificate(abar: Sequence[int]) -> tuple[frozenset[int], int] | None:
    """Reduced gaps all in {0, 1}: the positions of the ones give the monomial."""
    if not all(x in (0, 1) for x in abar):
        return None
    z = frozenset(i for i, x in enumerate(abar, start=1) if x == 1)
    if not z:
        return None
    return z, len(z)


def thm02_certificate(abar: Sequence[int]) -> tuple[frozenset[int], frozenset[int], int] | None:
    """Reduced gaps in {0, 1, 2} with every 2 preceded by a 0.

    Returns ``(T, Z, r)``: positions of the 2's, positions of the 1's, and
    ``r = |T| + |Z|``.
    """
    if not all(x in (0, 1, 2) for x in abar):
        return None
    t = frozenset(i for i, x in enumerate(abar, start=1) if x == 2)
    z = frozenset(i for i, x in enumerate(abar, start=1) if x == 1)
    if any(i < 2 or abar[i - 2] != 0 for i in t):
        return None
    r = len(t) + len(z)
    if r == 0:
        return None
    return t, z, r


def certificate_indicator(k: int, z: Iterable[int], t: Iterable[int] = ()) -> tuple[int, ...]:
    """Indicator vector of ``prod_{i in Z} w_i * prod_{i in T} w_(i-1)``."""
    eps = [0] * k
    for i in z:
        eps[i - 1] = 1
    for i in t:
        eps[i - 2] = 1
    return tuple(eps)
