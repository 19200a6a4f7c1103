"""Length vectors, short subsets, genetic codes and their realizations."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Sequence

from .combinatorics import as_mask, dominates, elements, full, size, top
from .feasibility import find_feasible_point


class GenericityError(ValueError):
    """A length vector admits a subset splitting the perimeter in half."""


class Unrealizable(ValueError):
    """No length vector has the requested genetic code."""


class CodeParseError(ValueError):
    pass


@dataclass(frozen=True)
class LengthVector:
    """Nondecreasing positive side lengths of a planar polygon (exact)."""

    lengths: tuple[Fraction, ...]

    def __init__(self, lengths: Iterable[int | Fraction | str]):
        vals = tuple(Fraction(x) for x in lengths)
        if len(vals) < 3:
            raise ValueError("a length vector needs at least three sides")
        if any(v <= 0 for v in vals):
            raise ValueError("side lengths must be positive")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError("side lengths must be nondecreasing")
        if vals[-1] >= sum(vals[:-1]):
            raise ValueError("longest side must be shorter than the sum of the others")
        object.__setattr__(self, "lengths", vals)

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.lengths)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError("length vector is not integral")
        return tuple(int(x) for x in self.lengths)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.lengths) + ")"


def _scaled_ints(lv: LengthVector) -> list[int]:
    den = lcm(*(x.denominator for x in lv.lengths))
    return [int(x * den) for x in lv.lengths]


def is_generic(lv: LengthVector) -> bool:
    """True iff no subset of sides sums to exactly half the perimeter."""
    w = _scaled_ints(lv)
    total = sum(w)
    if total % 2:
        return True
    half = total // 2
    reach = 1  # bit s set <=> some subset sums to s
    for x in w:
        reach |= reach << x
    return not (reach >> half) & 1


def _side_mask(s: int | Iterable[int], n: int) -> int:
    m = as_mask(s)
    if m >> (n + 1):
        raise ValueError(f"subset {elements(m)} not contained in 1..{n}")
    return m


def is_short(lv: LengthVector, s: int | Iterable[int]) -> bool:
    """True iff the sides indexed by ``s`` sum to less than the remaining sides."""
    if not is_generic(lv):
        raise GenericityError(f"{lv} is not generic")
    m = _side_mask(s, lv.n)
    inside = sum((x for i, x in enumerate(lv.lengths, 1) if m >> i & 1), Fraction(0))
    return 2 * inside < lv.total


# --- genetic codes -------------------------------------------------------


def gee_key(mask: int) -> tuple[int, ...]:
    """Sort key listing elements in decreasing order, as genes are written."""
    return tuple(reversed(elements(mask)))


_SYMBOLS = "0123456789TE"


def format_gene(n: int, gee: int) -> str:
    items = [n] + list(gee_key(gee))
    if n < 12:
        return "".join(_SYMBOLS[i] for i in items)
    return "{" + ",".join(str(i) for i in items) + "}"


def parse_gene(text: str) -> tuple[int, int]:
    """Parse one gene such as ``"86321"`` or ``"{12,9,3}"`` into ``(n, gee mask)``."""
    text = text.strip()
    if not text:
        raise CodeParseError("empty gene")
    if text.startswith("{"):
        if not text.endswith("}"):
            raise CodeParseError(f"unbalanced braces in {text!r}")
        try:
            items = [int(t) for t in text[1:-1].split(",") if t.strip()]
        except ValueError as exc:
            raise CodeParseError(f"bad gene {text!r}") from exc
    else:
        items = []
        for ch in text:
            idx = _SYMBOLS.find(ch.upper())
            if idx <= 0:
                raise CodeParseError(f"bad symbol {ch!r} in gene {text!r}")
            items.append(idx)
    if any(a <= b for a, b in zip(items, items[1:])):
        raise CodeParseError(f"gene {text!r} is not strictly decreasing")
    if not items or items[-1] < 1:
        raise CodeParseError(f"bad gene {text!r}")
    n = items[0]
    return n, as_mask(items[1:])


@dataclass(frozen=True)
class GeneticCode:
    """The gees of a generic length vector (its genes with ``n`` removed).

    Gees are kept in canonical order: decreasing-element tuples compared
    lexicographically, largest first.
    """

    n: int
    gees: tuple[int, ...]

    def __init__(self, n: int, gees: Iterable[int | Iterable[int]], check: bool = True):
        masks = sorted({as_mask(g) for g in gees}, key=gee_key, reverse=True)
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "gees", tuple(masks))
        if check and not is_admissible(self.n, self.gees):
            raise Unrealizable(f"{self} is not an admissible genetic code")

    @classmethod
    def parse(cls, text: str, check: bool = True) -> "GeneticCode":
        """Parse ``"86321"``, ``"7521;743"`` or ``"<{12,9,3}>"`` style strings."""
        text = text.strip().strip("<>").replace("⟨", "").replace("⟩", "")
        genes = [parse_gene(g) for g in re.split(r"[;\s]+", text) if g]
        if not genes:
            raise CodeParseError("no genes given")
        ns = {n for n, _ in genes}
        if len(ns) != 1:
            raise CodeParseError(f"genes disagree on n: {sorted(ns)}")
        return cls(ns.pop(), [g for _, g in genes], check=check)

    def __str__(self) -> str:
        return ";".join(format_gene(self.n, g) for g in self.gees)

    @property
    def m(self) -> int:
        return self.n - 3

    @property
    def k(self) -> int:
        """Size of the largest gee."""
        return max(size(g) for g in self.gees)

    @cached_property
    def subgees(self) -> "SubgeeFamily":
        return subgees(self)

    @property
    def is_monogenic(self) -> bool:
        return len(self.gees) == 1

    @property
    def is_projective(self) -> bool:
        """Code <{n}>: the space is RP^{n-3}."""
        return self.gees == (0,)

    @property
    def is_torus(self) -> bool:
        """Code <{n, n-3, ..., 1}>: the space is a torus T^{n-3}."""
        return self.gees == (full(self.n - 3),)

    def sort_key(self) -> tuple:
        return (self.n, tuple(gee_key(g) for g in self.gees))


class SubgeeFamily:
    """All subsets dominated by some gee, with O(1) membership."""

    def __init__(self, members: Iterable[int], n: int):
        self.n = n
        self.members = frozenset(members)
        self.ordered = sorted(self.members, key=lambda s: (size(s), s))

    def __contains__(self, s: int) -> bool:
        return s in self.members

    def __iter__(self):
        return iter(self.ordered)

    def __len__(self) -> int:
        return len(self.members)

    def support(self) -> int:
        """Union of all subgees."""
        out = 0
        for s in self.members:
            out |= s
        return out

    def maximal(self) -> list[int]:
        """Dominance-maximal members, i.e. the gees."""
        return [s for s in self.ordered if not any(t in self.members for t in _uppers(s, self.n))]


def _lowerings(s: int) -> Iterable[int]:
    """Sets covered by ``s`` in the dominance order (plus some non-covers)."""
    for i in elements(s):
        yield s & ~(1 << i)
        if i >= 2 and not s >> (i - 1) & 1:
            yield (s & ~(1 << i)) | (1 << (i - 1))


def _downset(gees: Iterable[int]) -> set[int]:
    seen = set()
    stack = list(gees)
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        stack.extend(t for t in _lowerings(s) if t not in seen)
    return seen


def subgees(code: GeneticCode) -> SubgeeFamily:
    return SubgeeFamily(_downset(code.gees), code.n)


def _consistent(n: int, family: set[int] | frozenset[int]) -> bool:
    # S and Q disjoint subgees with |S|+|Q| >= n-2 force a set and its
    # complement (after swapping n for the missing index) to both be short.
    universe = full(n - 1)
    for s in family:
        c = universe & ~s
        if c == 0 or (c & ~(1 << top(c))) in family:
            return False
    return True


def is_admissible(n: int, gees: Iterable[int | Iterable[int]]) -> bool:
    """Combinatorial consistency of a candidate set of gees.

    Checks that the gees form a dominance antichain inside ``{1..n-1}`` and
    that no two disjoint subgees ``S, Q`` have ``|S| + |Q| >= n - 2``.  The
    latter includes the complement-free condition (a subgee and its
    complement cannot both be subgees).
    """
    masks = [as_mask(g) for g in gees]
    if n < 3 or not masks:
        return False
    if any(g >> n for g in masks):
        return False
    for i, a in enumerate(masks):
        for b in masks[i + 1:]:
            if dominates(a, b) or dominates(b, a):
                return False
    return _consistent(n, _downset(masks))


def genetic_code(lv: LengthVector) -> GeneticCode:
    """Maximal short subsets containing ``n``, returned with ``n`` removed."""
    if not is_generic(lv):
        raise GenericityError(f"{lv} is not generic")
    n = lv.n
    w = _scaled_ints(lv)
    total = sum(w)
    ln = w[-1]
    sub = []
    for s in range(0, 1 << (n - 1)):
        mask = s << 1
        inside = ln + sum(w[i - 1] for i in elements(mask))
        if 2 * inside < total:
            sub.append(mask)
    fam = set(sub)
    maximal = [s for s in sub if not any(t != s and t in fam for t in _uppers(s, n))]
    return GeneticCode(n, maximal, check=False)


def _uppers(s: int, n: int) -> Iterable[int]:
    for i in range(1, n):
        if not s >> i & 1:
            yield s | (1 << i)
    for i in elements(s):
        if i + 1 < n and not s >> (i + 1) & 1:
            yield (s & ~(1 << i)) | (1 << (i + 1))


def minimal_nonsubgees(code: GeneticCode) -> list[int]:
    fam = code.subgees.members
    universe = full(code.n - 1)
    out = []
    for s in range(0, 1 << (code.n - 1)):
        mask = s << 1
        if mask in fam or mask & ~universe:
            continue
        if all(t in fam for t in _lowerings(mask)):
            out.append(mask)
    return out


def shortness_system(code: GeneticCode) -> tuple[list[list[int]], list[int]]:
    """Linear system ``A d >= b, d >= 0`` whose solutions realize ``code``.

    Unknowns are increments ``d_i``: ``l_i = 1 + d_1 + ... + d_i``.  Each gee
    gives "gee + n is short"; each minimal non-subgee gives "set + n is long".
    All strict inequalities are scaled to slack at least one.
    """
    n = code.n
    # l = 1 + L d where L is lower-triangular ones; a row c.l >= 1 becomes
    # (c L) d >= 1 - sum(c)
    rows = []
    rhs = []

    def add(coeffs: list[int]) -> None:
        tail = [sum(coeffs[j:]) for j in range(n)]
        rows.append(tail)
        rhs.append(1 - sum(coeffs))

    for g in code.gees:
        inside = g | (1 << n)
        add([-1 if inside >> i & 1 else 1 for i in range(1, n + 1)])
    for s in minimal_nonsubgees(code):
        inside = s | (1 << n)
        add([1 if inside >> i & 1 else -1 for i in range(1, n + 1)])
    return rows, rhs


def realize(code: GeneticCode) -> LengthVector:
    """An integer length vector with odd perimeter whose genetic code is ``code``.

    Raises :class:`Unrealizable` when the defining inequalities are infeasible.
    """
    A, b = shortness_system(code)
    d = find_feasible_point(A, b)
    if d is None:
        raise Unrealizable(f"no length vector has genetic code {code}")
    vals = []
    acc = Fraction(1)
    for x in d:
        acc += x
        vals.append(acc)
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    if sum(ints) % 2 == 0:
        # doubling leaves slack >= 2, so bumping the longest side keeps the code
        ints = [2 * x for x in ints]
        ints[-1] += 1
    lv = LengthVector(ints)
    if genetic_code(lv).gees != code.gees:
        raise AssertionError(f"realization {lv} does not reproduce {code}")
    return lv


def is_realizable(code: GeneticCode) -> bool:
    A, b = shortness_system(code)
    return find_feasible_point(A, b) is not None


# --- normalization and stabilization -------------------------------------


def _lcond_excess(w: Sequence[int]) -> int:
    return w[-1] + w[-2] - sum(w[:-2]) - 1


def normalize(lv: LengthVector) -> LengthVector:
    """Equivalent integer vector with ``l_n + l_{n-1} <= l_1 + ... + l_{n-2} + 1``.

    An even perimeter is first made odd by doubling and adding one to the
    longest side; then the three reduction moves are applied until the
    condition holds.
    """
    if not lv.is_integral():
        raise ValueError("normalize needs integer side lengths")
    if not is_generic(lv):
        raise GenericityError(f"{lv} is not generic")
    w = list(lv.as_ints())
    if sum(w) % 2 == 0:
        w = [2 * x for x in w]
        w[-1] += 1
    n = len(w)
    while _lcond_excess(w) > 0:
        if w[-2] > w[-3]:
            w[-1] -= 1
            w[-2] -= 1
        elif w[-1] > w[-2]:
            t = 1
            while t < n - 1 and w[-2 - t] == w[-2]:
                t += 1
            for j in range(2, t + 2):
                w[-j] -= 1
            w[-1] -= t
        else:
            w[-1] -= 2
            w[-2] -= 2
            w[-3] -= 2
    return LengthVector(w)


def satisfies_lcond(lv: LengthVector) -> bool:
    w = lv.lengths
    return w[-1] + w[-2] <= sum(w[:-2]) + 1


def stabilize(lv: LengthVector) -> LengthVector:
    """Length-(n+1) vector with the same gees as a normalized odd-perimeter vector."""
    if not lv.is_integral() or lv.total % 2 == 0:
        raise ValueError("stabilize needs an integer vector with odd perimeter")
    if not satisfies_lcond(lv):
        raise ValueError(f"{lv} violates l_n + l_(n-1) <= l_1 + ... + l_(n-2) + 1")
    w = lv.as_ints()
    half = (sum(w) + 1) // 2
    return LengthVector(list(w[:-1]) + [half - w[-1], half])


# --- enumeration ---------------------------------------------------------


def _candidate_order(n: int) -> list[int]:
    # sum of elements strictly increases along the dominance order
    subsets = [s << 1 for s in range(1 << (n - 1))]
    return sorted(subsets, key=lambda s: (sum(elements(s)), size(s), s))


def enumerate_subgee_families(n: int) -> list[frozenset[int]]:
    """All consistent dominance downsets of subsets of ``{1..n-1}`` containing the empty set."""
    order = _candidate_order(n)
    universe = full(n - 1)
    lowers = {s: list(_lowerings(s)) for s in order}
    partner = {}
    for s in order:
        c = universe & ~s
        partner[s] = None if c == 0 else c & ~(1 << top(c))
    out: list[frozenset[int]] = []
    included: set[int] = set()
    excluded: set[int] = set()
    blocked: dict[int, int] = {}

    def rec(pos: int) -> None:
        if pos == len(order):
            out.append(frozenset(included))
            return
        s = order[pos]
        p = partner[s]
        if (
            p is not None
            and p not in included
            and s not in blocked
            and not any(t in excluded for t in lowers[s])
        ):
            included.add(s)
            blocked[p] = blocked.get(p, 0) + 1
            rec(pos + 1)
            blocked[p] -= 1
            if not blocked[p]:
                del blocked[p]
            included.discard(s)
        if s != 0:
            excluded.add(s)
            rec(pos + 1)
            excluded.discard(s)

    rec(0)
    return out


def enumerate_codes(n: int, realizable_only: bool = True) -> list[GeneticCode]:
    """All genetic codes for ``n``-gons, in canonical order.

    Candidates are the consistent subgee families; with ``realizable_only``
    each is also confirmed by exact feasibility of its shortness system.
    """
    if not 4 <= n <= 9:
        raise ValueError("enumerate_codes supports 4 <= n <= 9")
    codes = []
    for fam in enumerate_subgee_families(n):
        code = GeneticCode(n, SubgeeFamily(fam, n).maximal(), check=False)
        if realizable_only and not is_realizable(code):
            continue
        codes.append(code)
    codes.sort(key=GeneticCode.sort_key)
    return codes
