"""Exact rational feasibility for small systems ``A x >= b, x >= 0``.

Phase-one simplex over :class:`fractions.Fraction` with Bland's rule, so the
answer (a rational point or a proof of infeasibility) carries no rounding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def find_feasible_point(
    A: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]
) -> list[Fraction] | None:
    """Return a rational ``x >= 0`` with ``A x >= b``, or ``None`` if none exists."""
    rows = len(A)
    if rows == 0:
        return []
    nvar = len(A[0])
    # columns: x (nvar) | surplus (rows) | artificial (rows)
    ncol = nvar + 2 * rows
    tab: list[list[Fraction]] = []
    basis: list[int] = []
    for i, (row, rhs) in enumerate(zip(A, b)):
        r = [Fraction(0)] * (ncol + 1)
        sign = 1 if rhs >= 0 else -1
        for j, a in enumerate(row):
            r[j] = Fraction(a) * sign
        r[nvar + i] = Fraction(-sign)
        r[-1] = Fraction(rhs) * sign
        if sign > 0:
            r[nvar + rows + i] = Fraction(1)
            basis.append(nvar + rows + i)
        else:
            basis.append(nvar + i)
        tab.append(r)

    artificial = set(range(nvar + rows, ncol))
    # reduced costs for minimizing the sum of artificials
    cost = [Fraction(0)] * (ncol + 1)
    for i, bv in enumerate(basis):
        if bv in artificial:
            for j in range(ncol + 1):
                cost[j] -= tab[i][j]
    for j in artificial:
        cost[j] += 1

    while True:
        enter = next((j for j in range(ncol) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:  # unbounded phase-one cannot happen; guard anyway
            raise ArithmeticError("phase-one objective unbounded")
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    if -cost[-1] != 0:
        return None
    x = [Fraction(0)] * nvar
    for i, bv in enumerate(basis):
        if bv < nvar:
            x[bv] = tab[i][-1]
    return x


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    prow = tab[r]
    p = prow[c]
    if p != 1:
        tab[r] = prow = [v / p for v in prow]
    nz = [j for j, v in enumerate(prow) if v]
    for i, row in enumerate(tab):
        if i != r and row[c]:
            f = row[c]
            for j in nz:
                row[j] -= f * prow[j]
    if cost[c]:
        f = cost[c]
        for j in nz:
            cost[j] -= f * prow[j]
