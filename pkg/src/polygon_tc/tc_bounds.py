"""Zero-divisor products, duality pairings and topological-complexity bounds.

A zero divisor here is a barred class ``zbar = z x 1 + 1 x z`` with
``z`` one of the ring generators ``R, V_i``.  A product of barred classes is
evaluated in ``H^* x H^*`` either

* through the pairing ``phi x psi`` on bidegree ``(m, m-1)`` (closed
  expansion over splittings of each exponent), or
* exactly, as reduced tensor components in every bidegree (factor-by-factor
  multiplication on reduced coordinates).

A nonzero product of ``D`` zero divisors gives ``TC >= D + 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from .cohomology import CohContext, iter_bits
from .combinatorics import as_mask, binom_mod2, elements, lg, nu, size
from .polygons import GeneticCode


@dataclass(frozen=True)
class ZeroDivisorProduct:
    """``Rbar^rbar_exp * prod_i Vbar_i^(vbar_exps[i])``."""

    rbar_exp: int
    vbar_exps: tuple[tuple[int, int], ...]

    def __init__(self, rbar_exp: int = 0, vbar_exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = vbar_exps.items() if isinstance(vbar_exps, Mapping) else vbar_exps
        merged: dict[int, int] = {}
        for i, e in items:
            if i < 1 or e < 0:
                raise ValueError(f"bad factor V{i}^{e}")
            merged[int(i)] = merged.get(int(i), 0) + int(e)
        if rbar_exp < 0:
            raise ValueError("negative exponent of Rbar")
        object.__setattr__(self, "rbar_exp", int(rbar_exp))
        object.__setattr__(self, "vbar_exps", tuple(sorted((i, e) for i, e in merged.items() if e)))

    @property
    def degree(self) -> int:
        return self.rbar_exp + sum(e for _, e in self.vbar_exps)

    def factors(self) -> list[tuple[int, int]]:
        """``(variable, exponent)`` pairs; variable 0 stands for ``R``."""
        out = list(self.vbar_exps)
        if self.rbar_exp:
            out.append((0, self.rbar_exp))
        return out

    def __str__(self) -> str:
        parts = [f"Vb{i}^{e}" if e > 1 else f"Vb{i}" for i, e in self.vbar_exps]
        if self.rbar_exp:
            parts.append(f"Rb^{self.rbar_exp}" if self.rbar_exp > 1 else "Rb")
        return " ".join(parts) if parts else "1"


# --- pairing mode ----------------------------------------------------------


def _odd_splits(e: int) -> list[int]:
    """``j`` in ``0..e`` with ``C(e, j)`` odd."""
    return [j for j in range(e + 1) if j & ~e == 0]


def pair_product(
    product: ZeroDivisorProduct,
    first_degree: int,
    phi: Callable[[int], int],
    psi: Callable[[int], int] | None = None,
) -> int:
    """``(phi x psi)`` of the component of ``product`` with first degree ``first_degree``.

    ``phi`` and ``psi`` take the support mask of a monomial.  Terms are
    collected over all splittings ``z^e -> sum C(e, j) z^j x z^(e-j)``.
    """
    psi = psi or phi
    vs = list(product.vbar_exps)
    a = product.rbar_exp
    total = 0

    def rec(pos: int, deg1: int, s1: int, s2: int) -> None:
        nonlocal total
        if deg1 > first_degree:
            return
        if pos == len(vs):
            jr = first_degree - deg1
            if 0 <= jr <= a and binom_mod2(a, jr) and phi(s1) and psi(s2):
                total ^= 1
            return
        i, e = vs[pos]
        bit = 1 << i
        for j in _odd_splits(e):
            rec(pos + 1, deg1 + j, s1 | (bit if j else 0), s2 | (bit if j < e else 0))

    rec(0, 0, 0, 0)
    return total


# --- exact mode --------------------------------------------------------------


def expand_exact(ctx: CohContext, product: ZeroDivisorProduct) -> dict[tuple[int, int], np.ndarray]:
    """Reduced tensor components of ``product`` in every bidegree.

    Matrices have rows indexed by the basis of ``H^d1`` and columns by the
    basis of ``H^d2``; only nonzero blocks are returned.
    """
    m = ctx.m
    state = {(0, 0): np.ones((1, 1), dtype=np.uint8)}
    mats: dict[tuple[int, int], np.ndarray] = {}

    def mult(var: int, d: int) -> np.ndarray:
        key = (var, d)
        if key not in mats:
            mats[key] = ctx.mult_matrix(var, d).astype(np.int64)
        return mats[key]

    for var, e in product.factors():
        for _ in range(e):
            new: dict[tuple[int, int], np.ndarray] = {}
            for (d1, d2), block in state.items():
                if d1 < m:
                    left = (mult(var, d1) @ block) & 1
                    key = (d1 + 1, d2)
                    new[key] = new[key] ^ left if key in new else left
                if d2 < m:
                    right = (block @ mult(var, d2).T) & 1
                    key = (d1, d2 + 1)
                    new[key] = new[key] ^ right if key in new else right
            state = {k: v for k, v in new.items() if v.any()}
            if not state:
                return {}
    return state


def expand_evaluate(
    ctx: CohContext,
    product: ZeroDivisorProduct,
    bidegree: tuple[int, int],
    mode: str = "pairing",
):
    """Evaluate one bidegree component of ``product``.

    ``mode="pairing"`` returns ``(phi x psi)`` of the ``(m, m-1)`` component
    as a bit.  ``mode="exact"`` returns ``(matrix, nonzero)`` for the reduced
    component in ``H^d1 x H^d2``.
    """
    d1, d2 = bidegree
    if d1 + d2 != product.degree:
        raise ValueError(f"bidegree {bidegree} does not match product degree {product.degree}")
    if not (0 <= d1 <= ctx.m and 0 <= d2 <= ctx.m):
        raise ValueError(f"bidegree {bidegree} outside 0..{ctx.m}")
    if mode == "pairing":
        if (d1, d2) != (ctx.m, ctx.m - 1):
            raise ValueError("pairing mode evaluates bidegree (m, m-1)")
        table = _phi_table(ctx)
        psi = _psi_table(ctx)
        return pair_product(product, d1, table.__getitem__, psi.__getitem__)
    if mode == "exact":
        comps = expand_exact(ctx, product)
        block = comps.get((d1, d2))
        if block is None:
            block = np.zeros((ctx.dim(d1), ctx.dim(d2)), dtype=np.int64)
        return block, bool(block.any())
    raise ValueError(f"unknown mode {mode!r}")


class _ZeroDefault(dict):
    def __missing__(self, key):
        return 0


def _phi_table(ctx: CohContext) -> dict[int, int]:
    table = getattr(ctx, "_phi_cache", None)
    if table is None:
        table = _ZeroDefault((s, ctx.phi(s)) for s in ctx.family.ordered if size(s) <= ctx.m)
        ctx._phi_cache = table
    return table


def _psi_table(ctx: CohContext) -> dict[int, int]:
    table = getattr(ctx, "_psi_cache", None)
    if table is None:
        table = _ZeroDefault((s, ctx.psi(s)) for s in ctx.family.ordered if size(s) <= ctx.m - 1)
        ctx._psi_cache = table
    return table


# --- certificates -----------------------------------------------------------


METHODS = ("genlthm", "nonzthm-short", "nonzthm-long", "power-of-two", "search")


@dataclass
class Certificate:
    """A nonzero product of zero divisors for one genetic code."""

    code: str
    product: ZeroDivisorProduct
    bidegree: tuple[int, int]
    value: int
    method: str
    aux: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return self.product.degree

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "degree": self.degree,
            "rbar_exp": self.product.rbar_exp,
            "vbar_exps": {str(i): e for i, e in self.product.vbar_exps},
            "bidegree": list(self.bidegree),
            "value": self.value,
            "method": self.method,
            "aux": self.aux,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Certificate":
        product = ZeroDivisorProduct(
            int(data["rbar_exp"]), {int(i): int(e) for i, e in data["vbar_exps"].items()}
        )
        if "degree" in data and int(data["degree"]) != product.degree:
            raise ValueError("certificate degree does not match its product")
        return cls(
            code=data["code"],
            product=product,
            bidegree=tuple(int(x) for x in data["bidegree"]),
            value=int(data["value"]),
            method=data["method"],
            aux=dict(data.get("aux", {})),
        )


def verify_certificate(cert: Certificate, ctx: CohContext | None = None) -> bool:
    """Recompute the certificate's component exactly and compare with its value."""
    if ctx is None:
        ctx = CohContext(GeneticCode.parse(cert.code))
    _, nonzero = expand_evaluate(ctx, cert.product, cert.bidegree, mode="exact")
    if int(nonzero) != cert.value:
        return False
    if cert.method != "search" and cert.bidegree == (ctx.m, ctx.m - 1):
        return expand_evaluate(ctx, cert.product, cert.bidegree, mode="pairing") == cert.value
    return True


def _certify(ctx: CohContext, product: ZeroDivisorProduct, method: str, aux: dict) -> Certificate:
    bideg = (ctx.m, ctx.m - 1)
    value = expand_evaluate(ctx, product, bideg, mode="pairing")
    if value != 1:
        raise AssertionError(f"{method} product {product} pairs to zero on {ctx.code}")
    cert = Certificate(str(ctx.code), product, bideg, 1, method, aux)
    if not verify_certificate(cert, ctx):
        raise AssertionError(f"{method} product {product} vanishes exactly on {ctx.code}")
    return cert


def minimal_nonzero_monomial(ctx: CohContext) -> int:
    """Smallest support ``S`` (size, then mask) with ``phi(R^(m-|S|) V_S) = 1``."""
    table = _phi_table(ctx)
    for s in ctx.family.ordered:
        if table[s]:
            return s
    raise AssertionError("top degree has no nonzero monomial")


def genlthm_closed_form(m: int, r: int) -> int:
    f = lg(m - r)
    return binom_mod2(2 * m - 2 * r + 1, m - r + 1) ^ binom_mod2((1 << (f + 1)) - 1, m - r + 1)


def genlthm_product(m: int, indices: Iterable[int]) -> tuple[ZeroDivisorProduct, dict] | None:
    """The product ``prod Vbar_(i_j)^3 * Vbar_(i_r)^A * Rbar^(2m+2-A-3r)``, or ``None`` if ``m`` is too small."""
    idx = sorted(indices)
    r = len(idx)
    if r == 0 or m < r + (1 << lg(r)):
        return None
    f = lg(m - r)
    A = 2 * m - 2 * r - (1 << (f + 1)) + 3
    exps = {i: 3 for i in idx[:-1]}
    exps[idx[-1]] = A
    product = ZeroDivisorProduct(2 * m + 2 - A - 3 * r, exps)
    return product, {"r": r, "f": f, "A": A, "indices": idx}


def genlthm_certificate(ctx: CohContext) -> Certificate | None:
    """Certificate for ``R^m = 0`` built from a minimal nonzero top monomial."""
    if _phi_table(ctx)[0]:
        raise ValueError("genlthm needs R^m = 0")
    s = minimal_nonzero_monomial(ctx)
    built = genlthm_product(ctx.m, elements(s))
    if built is None:
        return None
    product, aux = built
    if genlthm_closed_form(ctx.m, aux["r"]) != 1:
        raise AssertionError("closed-form value of the genlthm product is even")
    return _certify(ctx, product, "genlthm", aux)


def classify_support(U: int | Iterable[int], C: Iterable[int | Iterable[int]]):
    """Sort a family of subsets containing the empty set into one of three shapes.

    Returns ``("a", X)`` when ``C`` is the power set of ``X``; ``("b", T)``
    with ``|T| >= 2`` and ``C`` containing exactly the proper subsets of
    ``T``; or ``("c", (s, S))`` with ``S`` the only member of ``C`` inside
    ``S`` that contains ``s``.
    """
    u = as_mask(U)
    fam = {as_mask(c) for c in C}
    if 0 not in fam:
        raise ValueError("family must contain the empty set")
    if any(c & ~u for c in fam):
        raise ValueError("family members must lie inside U")
    x = 0
    for t in elements(u):
        if (1 << t) in fam:
            x |= 1 << t
    subsets_x = sorted(_submasks(x), key=lambda s: (size(s), s))
    missing = [s for s in subsets_x if s not in fam]
    if missing:
        return "b", missing[0]
    if len(fam) == len(subsets_x):
        return "a", x
    extra = sorted((c for c in fam if c & ~x), key=lambda s: (size(s), s))[0]
    s = elements(extra & ~x)[0]
    containing = sorted((c for c in fam if c >> s & 1), key=lambda c: (size(c), c))
    return "c", (s, containing[0])


def _submasks(x: int) -> Iterable[int]:
    sub = x
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & x


def longprop_exponent(m: int, t: int) -> tuple[int, str]:
    """Exponent ``A`` making ``C(2m-t, m) + C(2m-A-t, m-t)`` odd, and its case label."""
    e = lg(m)
    delta = m - (1 << e)
    if delta == 0:
        raise ValueError("m is a power of two")
    if not 1 <= t <= m - 1:
        raise ValueError("need 1 <= t <= m - 1")
    if t <= 2 * delta:
        return 2 * delta + 1 - t, "2a"
    if t <= 1 << e:
        if binom_mod2(t - delta - 1, delta) == 0:
            return delta, "2b"
        return 1 << lg(2 * delta), "2c"
    if binom_mod2(m - t + delta, delta) == 0:
        return delta, "2d"
    return delta - (1 << nu(m - t)), "2e"


def longprop_closed_form(m: int, t: int, A: int) -> int:
    return binom_mod2(2 * m - t, m) ^ binom_mod2(2 * m - A - t, m - t)


def nonzthm_certificate(ctx: CohContext) -> Certificate | None:
    """Certificate for ``R^m != 0`` from the shape of the duality support."""
    m = ctx.m
    if not _phi_table(ctx)[0]:
        raise ValueError("nonzthm needs R^m != 0")
    if m & (m - 1) == 0:
        if binom_mod2(2 * m - 1, m) != 1:
            raise AssertionError("C(2m-1, m) should be odd for m a power of two")
        return _certify(ctx, ZeroDivisorProduct(2 * m - 1), "power-of-two", {"m": m})
    U, C = ctx.phi_support()
    tag, witness = classify_support(U, C)
    if tag == "a":
        return None
    if tag == "b":
        T = elements(witness)
        t = len(T) - 1
        if len(T) > m:
            return None
        A, case = longprop_exponent(m, t)
        if longprop_closed_form(m, t, A) != 1:
            raise AssertionError("closed-form value of the longprop product is even")
        exps = {i: 1 for i in T[:-1]}
        exps[T[-1]] = A
        e = lg(m)
        aux = {"t": t, "A": A, "e": e, "delta": m - (1 << e), "case": case, "T": T}
        return _certify(ctx, ZeroDivisorProduct(2 * m - A - t - 1, exps), "nonzthm-long", aux)
    s, S = witness
    T = elements(S)
    t = len(T) - 1
    if len(T) > m:
        return None
    exps = {i: 1 for i in T if i != s}
    exps[s] = m - t
    aux = {"t": t, "s": s, "S": T}
    return _certify(ctx, ZeroDivisorProduct(m - 1, exps), "nonzthm-short", aux)


def closed_form_certificate(ctx: CohContext) -> Certificate | None:
    if _phi_table(ctx)[0]:
        return nonzthm_certificate(ctx)
    return genlthm_certificate(ctx)


# --- search ------------------------------------------------------------------


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _split_poly(e: int) -> int:
    """``sum x^j`` over ``0 < j < e`` with ``C(e, j)`` odd."""
    out = 0
    for j in range(1, e):
        if j & ~e == 0:
            out |= 1 << j
    return out


def symmetry_classes(ctx: CohContext, variables: list[int]) -> list[list[int]]:
    """Group variables whose transposition preserves the subgee family."""
    fam = ctx.family.members
    parent = {v: v for v in variables}

    def find(v: int) -> int:
        while parent[v] != v:
            v = parent[v]
        return v

    for a_i, i in enumerate(variables):
        for j in variables[a_i + 1:]:
            if find(i) == find(j):
                continue
            bi, bj = 1 << i, 1 << j
            both = bi | bj
            ok = True
            for s in fam:
                part = s & both
                if part and part != both and (s ^ both) not in fam:
                    ok = False
                    break
            if ok:
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for v in variables:
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


class _Search:
    def __init__(self, ctx: CohContext, target: int):
        self.ctx = ctx
        self.m = ctx.m
        self.target = target
        self.fam = ctx.family.members
        support = 0
        for s in self.fam:
            support |= s
        self.classes = symmetry_classes(ctx, elements(support))
        self.order = [v for group in self.classes for v in group]
        self.first_in_class = {group[0] for group in self.classes}
        self.remaining = 0
        self.nodes = 0

    def window(self, deg: int) -> int:
        lo = max(0, deg - self.m)
        hi = min(self.m, deg)
        if lo > hi:
            return 0
        return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)

    def apply_v(self, state: dict, var: int, e: int, deg: int) -> dict:
        bit = 1 << var
        mask = self.window(deg + e)
        split = _split_poly(e)
        fam = self.fam
        out: dict[tuple[int, int], int] = {}

        def add(key, poly):
            poly &= mask
            if poly:
                poly ^= out.get(key, 0)
                if poly:
                    out[key] = poly
                else:
                    out.pop(key, None)

        for (s1, s2), poly in state.items():
            n1, n2 = s1 | bit, s2 | bit
            ok1, ok2 = n1 in fam, n2 in fam
            if ok2:
                add((s1, n2), poly)
            if ok1:
                add((n1, s2), poly << e)
            if ok1 and ok2 and split:
                add((n1, n2), _clmul(poly, split))
        return out

    def leaf(self, state: dict, deg: int) -> tuple[int, int] | None:
        a = self.target - deg
        rpoly = 0
        for j in range(a + 1):
            if j & ~a == 0:
                rpoly |= 1 << j
        mask = self.window(self.target)
        ctx = self.ctx
        y: dict[tuple[int, int], int] = {}
        for (s1, s2), poly in state.items():
            full = _clmul(poly, rpoly) & mask
            for d1 in iter_bits(full):
                d2 = self.target - d1
                if d1 < d2:
                    continue
                w = ctx.coords(d2, s2)
                if w:
                    key = (d1, s1)
                    y[key] = y.get(key, 0) ^ w
        rows: dict[int, dict[int, int]] = {}
        for (d1, s1), vec in y.items():
            if not vec:
                continue
            block = rows.setdefault(d1, {})
            for r in iter_bits(ctx.coords(d1, s1)):
                block[r] = block.get(r, 0) ^ vec
        for d1 in sorted(rows, reverse=True):
            if any(rows[d1].values()):
                return d1, self.target - d1
        return None

    def run(self, max_nodes: int | None = None):
        start = {(0, 0): 1}
        order = self.order
        found = None

        def rec(pos: int, state: dict, deg: int, cap: int, exps: dict):
            nonlocal found
            self.nodes += 1
            if max_nodes is not None and self.nodes > max_nodes:
                raise TimeoutError("search node budget exhausted")
            if pos == len(order):
                hit = self.leaf(state, deg)
                if hit is not None:
                    found = (dict(exps), self.target - deg, hit)
                    return True
                return False
            var = order[pos]
            if var in self.first_in_class:
                cap = self.target
            top = min(cap, self.target - deg, 2 * self.m)
            for e in range(top + 1):
                nxt = state if e == 0 else self.apply_v(state, var, e, deg)
                if not nxt:
                    continue
                if e:
                    exps[var] = e
                if rec(pos + 1, nxt, deg + e, e, exps):
                    return True
                exps.pop(var, None)
            return False

        rec(0, start, 0, self.target, {})
        return found


def zcl_search(ctx: CohContext, target: int, max_nodes: int | None = None) -> Certificate | None:
    """First nonzero product of ``target`` zero divisors, or ``None`` if none exists.

    Exponent vectors are explored depth first over ``V``-variables grouped
    by symmetry (nonincreasing exponents inside a group), with ``Rbar``
    taking the remaining degree; the hit is re-checked exactly.
    """
    if target > 2 * ctx.m:
        return None
    search = _Search(ctx, target)
    found = search.run(max_nodes)
    if found is None:
        return None
    exps, rexp, bideg = found
    cert = Certificate(
        str(ctx.code), ZeroDivisorProduct(rexp, exps), bideg, 1, "search", {"nodes": search.nodes}
    )
    if not verify_certificate(cert, ctx):
        raise AssertionError(f"search product {cert.product} fails exact check on {ctx.code}")
    return cert


# --- reports -----------------------------------------------------------------


@dataclass
class TcReport:
    """Bounds on the topological complexity of one polygon space."""

    code: str
    n: int
    tc_lower: int
    tc_upper: int
    method: str
    certificate: Certificate | None
    special_case: str | None = None
    phi_Rm: int | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def exceptional(self) -> bool:
        """True when the cohomological bound misses ``2n - 6``."""
        return self.special_case is None and self.tc_lower < 2 * self.n - 6

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "n": self.n,
            "tc_lower": self.tc_lower,
            "tc_upper": self.tc_upper,
            "method": self.method,
            "special_case": self.special_case,
            "exceptional": self.exceptional,
            "phi_Rm": self.phi_Rm,
            "certificate": self.certificate.to_dict() if self.certificate else None,
            "notes": self.notes,
        }


def _descending_search(ctx: CohContext, start: int) -> Certificate | None:
    # a nonzero product stays nonzero after dropping a factor, so the first
    # degree with a hit is the zero-divisor cup length
    for target in range(start, -1, -1):
        cert = zcl_search(ctx, target)
        if cert is not None:
            return cert
    return None


def tc_report(code: GeneticCode | str, top_degree: bool = False) -> TcReport:
    """Lower bound ``1 + zcl`` (certified) and the dimensional upper bound ``2m + 1``.

    ``top_degree=True`` also searches for products of ``2m`` zero divisors;
    otherwise generic codes are only certified up to ``2m - 1``.
    """
    if isinstance(code, str):
        code = GeneticCode.parse(code)
    ctx = CohContext(code)
    m = ctx.m
    upper = 2 * m + 1
    if code.is_projective:
        cert = _descending_search(ctx, 2 * m)
        return TcReport(
            str(code), code.n, cert.degree + 1, upper, "projective", cert, special_case="projective",
            phi_Rm=1, notes=[f"real projective space of dimension {m}; only the cohomological bound is given"],
        )
    if code.is_torus:
        return TcReport(
            str(code), code.n, m + 1, m + 1, "torus", None, special_case="torus",
            phi_Rm=_phi_table(ctx)[0], notes=[f"torus of dimension {m}: TC equals n - 2"],
        )
    phi_rm = _phi_table(ctx)[0]
    notes: list[str] = []
    cert = None
    if top_degree:
        cert = zcl_search(ctx, 2 * m)
    if cert is None:
        cert = closed_form_certificate(ctx)
        if cert is None:
            notes.append("closed-form constructions do not apply; searched")
            cert = _descending_search(ctx, 2 * m - 1)
    lower = cert.degree + 1 if cert else 1
    return TcReport(str(code), code.n, lower, upper, cert.method if cert else "none", cert, phi_Rm=phi_rm, notes=notes)
