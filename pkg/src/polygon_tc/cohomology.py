"""Mod-2 cohomology of planar polygon spaces from their genetic codes.

The ring is generated by degree-one classes ``R, V_1, ..., V_{n-1}``.  A
monomial of degree ``d`` only depends on its support ``S`` (the ``V``'s that
divide it), so it is written ``R^(d-|S|) V_S``; it vanishes unless ``S`` is a
subgee.  In degree ``d`` there is one relation for every subgee ``S`` with
``|S| >= m + 1 - d``: the sum of all ``R^(d-|T|) V_T`` over subgees ``T``
disjoint from ``S``.

Vectors over GF(2) are Python ints used as bitsets.  Columns of degree ``d``
are the subgees of size at most ``d`` in the order of
:attr:`SubgeeFamily.ordered`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .combinatorics import as_mask, elements, size
from .polygons import GeneticCode


class ContextError(ValueError):
    """The presentation does not describe a closed manifold (top degree not 1-dimensional)."""


def iter_bits(x: int) -> Iterable[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def format_monomial(degree: int, support: int) -> str:
    r = degree - size(support)
    parts = []
    if r:
        parts.append("R" if r == 1 else f"R^{r}")
    if support:
        parts.append("V{" + ",".join(str(i) for i in elements(support)) + "}")
    return " ".join(parts) if parts else "1"


@dataclass(frozen=True)
class CohClass:
    """An element of H^degree, as a bit vector over the degree's monomial columns."""

    ctx: "CohContext"
    degree: int
    vec: int

    def __bool__(self) -> bool:
        return bool(self.ctx.reduce(self).vec)

    def __add__(self, other: "CohClass") -> "CohClass":
        if other.degree != self.degree:
            raise ValueError("cannot add classes of different degrees")
        return CohClass(self.ctx, self.degree, self.vec ^ other.vec)

    def __mul__(self, other: "CohClass") -> "CohClass":
        return self.ctx.multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CohClass):
            return NotImplemented
        if other.degree != self.degree:
            return False
        return self.ctx.reduce(self).vec == self.ctx.reduce(other).vec

    def __hash__(self) -> int:
        return hash((self.degree, self.ctx.reduce(self).vec))

    def terms(self) -> list[int]:
        """Supports of the monomials present (unreduced)."""
        if self.degree > self.ctx.m:
            return []
        cols = self.ctx.columns(self.degree)
        return [cols[j] for j in iter_bits(self.vec)]

    def __str__(self) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        return " + ".join(format_monomial(self.degree, s) for s in terms)


class _Degree:
    """Echelonized relations in one degree."""

    def __init__(self, ctx: "CohContext", d: int):
        self.d = d
        self.columns = [s for s in ctx.family.ordered if size(s) <= d]
        self.index = {s: j for j, s in enumerate(self.columns)}
        self.relations = []
        lo = ctx.m + 1 - d
        for s in ctx.family.ordered:
            if size(s) < lo:
                continue
            vec = 0
            for j, t in enumerate(self.columns):
                if not t & s:
                    vec |= 1 << j
            self.relations.append((s, vec))
        pivots: dict[int, int] = {}
        for _, vec in self.relations:
            v = vec
            for p, row in pivots.items():
                if v >> p & 1:
                    v ^= row
            if not v:
                continue
            p = (v & -v).bit_length() - 1
            for q in pivots:
                if pivots[q] >> p & 1:
                    pivots[q] ^= v
            pivots[p] = v
        self.pivots = pivots
        self.pivot_mask = sum(1 << p for p in pivots)
        self.free = [j for j in range(len(self.columns)) if not self.pivot_mask >> j & 1]
        self.free_pos = {j: i for i, j in enumerate(self.free)}
        self.coords = [self._coords_of(1 << j) for j in range(len(self.columns))]

    def reduce(self, vec: int) -> int:
        for p in iter_bits(vec & self.pivot_mask):
            vec ^= self.pivots[p]
        return vec

    def _coords_of(self, vec: int) -> int:
        out = 0
        for j in iter_bits(self.reduce(vec)):
            out |= 1 << self.free_pos[j]
        return out

    def to_coords(self, vec: int) -> int:
        out = 0
        for j in iter_bits(vec):
            out ^= self.coords[j]
        return out


class CohContext:
    """Reduced mod-2 cohomology data for one genetic code.

    Degrees are materialized lazily and cached; the cache is guarded by a
    lock so a context may be shared between threads.
    """

    def __init__(self, code: GeneticCode):
        self.code = code
        self.n = code.n
        self.m = code.n - 3
        self.family = code.subgees
        self._degrees: dict[int, _Degree] = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"CohContext({self.code})"

    def _deg(self, d: int) -> _Degree:
        if not 0 <= d <= self.m:
            raise ValueError(f"degree {d} outside 0..{self.m}")
        data = self._degrees.get(d)
        if data is None:
            with self._lock:
                data = self._degrees.get(d)
                if data is None:
                    data = _Degree(self, d)
                    self._degrees[d] = data
        return data

    # --- basic structure ---

    def columns(self, d: int) -> list[int]:
        return self._deg(d).columns

    def is_subgee(self, s: int) -> bool:
        return s in self.family

    def monomial(self, d: int, support: int | Iterable[int] = 0) -> CohClass:
        """The class ``R^(d-|S|) V_S`` (zero if ``S`` is not a subgee or ``d > m``)."""
        s = as_mask(support)
        if size(s) > d:
            raise ValueError("support larger than degree")
        if d > self.m or s not in self.family:
            return CohClass(self, d, 0)
        return CohClass(self, d, 1 << self._deg(d).index[s])

    def R(self, power: int = 1) -> CohClass:
        return self.monomial(power, 0)

    def V(self, i: int) -> CohClass:
        return self.monomial(1, 1 << i)

    def zero(self, d: int) -> CohClass:
        return CohClass(self, d, 0)

    def relation_vectors(self, d: int) -> list[CohClass]:
        return [CohClass(self, d, vec) for _, vec in self._deg(d).relations]

    def relations(self, d: int) -> list[tuple[int, CohClass]]:
        """Pairs ``(S, relation indexed by S)``."""
        return [(s, CohClass(self, d, vec)) for s, vec in self._deg(d).relations]

    def reduce(self, c: CohClass) -> CohClass:
        if c.degree > self.m or c.degree < 0:
            return CohClass(self, c.degree, 0)
        return CohClass(self, c.degree, self._deg(c.degree).reduce(c.vec))

    def dim(self, d: int) -> int:
        if d < 0 or d > self.m:
            return 0
        return len(self._deg(d).free)

    def dims(self) -> list[int]:
        return [self.dim(d) for d in range(self.m + 1)]

    def basis(self, d: int) -> list[int]:
        """Supports of the monomials forming the canonical basis of H^d."""
        data = self._deg(d)
        return [data.columns[j] for j in data.free]

    def coords(self, d: int, support: int) -> int:
        """Coordinates (bitset over :meth:`basis`) of the monomial with this support."""
        if d > self.m or d < 0 or support not in self.family:
            return 0
        data = self._deg(d)
        j = data.index.get(support)
        return 0 if j is None else data.coords[j]

    def class_coords(self, c: CohClass) -> int:
        if c.degree > self.m:
            return 0
        return self._deg(c.degree).to_coords(c.vec)

    # --- products ---

    def multiply(self, c1: CohClass, c2: CohClass) -> CohClass:
        d = c1.degree + c2.degree
        if d > self.m:
            return CohClass(self, d, 0)
        out = self._deg(d)
        vec = 0
        for s in c1.terms():
            for t in c2.terms():
                u = s | t
                j = out.index.get(u)
                if j is not None:
                    vec ^= 1 << j
        return CohClass(self, d, out.reduce(vec))

    # --- duality ---

    def _top(self) -> _Degree:
        data = self._deg(self.m)
        if len(data.free) != 1:
            raise ContextError(f"H^{self.m} of {self.code} has dimension {len(data.free)}, expected 1")
        return data

    def phi(self, support: int | Iterable[int]) -> int:
        """Duality value of ``R^(m-|S|) V_S``."""
        s = as_mask(support)
        if size(s) > self.m:
            raise ValueError("support larger than the top degree")
        data = self._top()
        if s not in self.family:
            return 0
        return data.coords[data.index[s]]

    def phi_class(self, c: CohClass) -> int:
        if c.degree != self.m:
            raise ValueError("phi is defined on the top degree")
        return self._top().to_coords(c.vec)

    def psi(self, support: int | Iterable[int]) -> int:
        """``phi(R * R^(m-1-|S|) V_S)``, a functional on degree ``m-1``."""
        s = as_mask(support)
        if size(s) > self.m - 1:
            raise ValueError("support larger than degree m-1")
        return self.phi_class(self.multiply(self.R(), self.monomial(self.m - 1, s)))

    def psi_class(self, c: CohClass) -> int:
        if c.degree != self.m - 1:
            raise ValueError("psi is defined on degree m-1")
        return self.phi_class(self.multiply(self.R(), c))

    def phi_support(self) -> tuple[int, list[int]]:
        """``(U, C)``: the sets with ``phi = 1`` and the union of their elements."""
        self._top()
        sets = [s for s in self.family.ordered if size(s) <= self.m and self.phi(s)]
        union = 0
        for s in sets:
            union |= s
        return union, sets

    # --- linear maps on reduced coordinates ---

    def mult_matrix(self, var: int, d: int) -> np.ndarray:
        """Matrix of multiplication by ``V_var`` (``R`` when ``var == 0``) from H^d to H^(d+1)."""
        src = self.basis(d)
        rows = self.dim(d + 1)
        mat = np.zeros((rows, len(src)), dtype=np.uint8)
        if rows == 0:
            return mat
        for col, s in enumerate(src):
            img = self.coords(d + 1, s | (1 << var if var else 0))
            for r in iter_bits(img):
                mat[r, col] = 1
        return mat
