"""Reproduction suites: each compares computed values against recorded ones.

A suite returns a :class:`SuiteResult` whose ``diff`` lists every entry
that disagrees; an empty diff means the suite passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .cohomology import CohContext
from .combinatorics import full, size
from .monogenic import count_Rm_zero, gaps_from_gee, phi_closed_form
from .polygons import (
    GenericityError,
    GeneticCode,
    LengthVector,
    enumerate_codes,
    genetic_code,
    is_generic,
    normalize,
    realize,
    stabilize,
)
from .sweeps import exceptional_codes, monogenic_sweep, sweep
from .tc_bounds import (
    ZeroDivisorProduct,
    classify_support,
    expand_evaluate,
    genlthm_closed_form,
    genlthm_product,
    longprop_closed_form,
    pair_product,
    zcl_search,
)


@dataclass
class SuiteResult:
    name: str
    expected: object
    computed: object
    diff: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.diff

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: computed {self.computed}"


RECORDED_COUNTS = {6: 20, 7: 134, 8: 2469}
RECORDED_TABLE1 = {3: (32, 20), 4: (256, 128), 5: (2048, 1216), 6: (16384, 9600)}
RECORDED_SWEEP = {7: ["7321", "7521"], 8: ["84321", "86321"]}
RECORDED_SIZE5 = ["74321", "84321", "86321"]
RECORDED_SIZE6 = [
    "854321", "954321", "T54321", "E54321", "974321", "T74321",
    "E74321", "T94321", "E94321", "T98321", "E98321", "E98721",
]


def _set_diff(expected, computed) -> list[str]:
    exp, got = set(expected), set(computed)
    return [f"missing {c}" for c in sorted(exp - got)] + [f"unexpected {c}" for c in sorted(got - exp)]


def suite_counts() -> SuiteResult:
    got = {n: len(enumerate_codes(n)) for n in RECORDED_COUNTS}
    diff = [f"n={n}: expected {RECORDED_COUNTS[n]}, got {got[n]}" for n in got if got[n] != RECORDED_COUNTS[n]]
    return SuiteResult("counts", RECORDED_COUNTS, got, diff)


def suite_table1() -> SuiteResult:
    got = {k: count_Rm_zero(k) for k in RECORDED_TABLE1}
    diff = [f"k={k}: expected {RECORDED_TABLE1[k]}, got {got[k]}" for k in got if got[k] != RECORDED_TABLE1[k]]
    return SuiteResult("table1", RECORDED_TABLE1, got, diff)


def suite_sweep(n: int, jobs: int = 1) -> SuiteResult:
    rows = sweep(n, jobs)
    got = exceptional_codes(rows)
    return SuiteResult(f"sweep{n}", RECORDED_SWEEP[n], got, _set_diff(RECORDED_SWEEP[n], got))


def suite_size5(jobs: int = 1) -> SuiteResult:
    got = monogenic_sweep(5, jobs).exceptional
    return SuiteResult("size5", RECORDED_SIZE5, got, _set_diff(RECORDED_SIZE5, got))


def suite_size6(jobs: int = 1) -> SuiteResult:
    got = monogenic_sweep(6, jobs).exceptional
    return SuiteResult("size6", RECORDED_SIZE6, got, _set_diff(RECORDED_SIZE6, got))


def suite_oracle(max_n: int = 8) -> SuiteResult:
    """Closed-form duality values against linear algebra on single-gene codes."""
    checked = 0
    diff = []
    for n in range(4, max_n + 1):
        for code in enumerate_codes(n):
            if not code.is_monogenic or code.is_projective:
                continue
            ctx = CohContext(code)
            a = gaps_from_gee(code.gees[0])
            for s in ctx.family.ordered:
                if size(s) > ctx.m:
                    continue
                checked += 1
                if phi_closed_form(a, s) != ctx.phi(s):
                    diff.append(f"{code} support {s:b}")
    return SuiteResult("oracle", "no mismatches", f"{checked} monomials, {len(diff)} mismatches", diff)


def suite_duality(max_n: int = 8) -> SuiteResult:
    """Poincare duality of dimensions and the shape of the duality support."""
    checked = 0
    diff = []
    for n in range(4, max_n + 1):
        for code in enumerate_codes(n):
            ctx = CohContext(code)
            dims = ctx.dims()
            checked += 1
            if dims != dims[::-1] or dims[0] != 1 or dims[-1] != 1:
                diff.append(f"{code}: dims {dims}")
            if ctx.phi(0) and not code.is_projective:
                u, c = ctx.phi_support()
                if classify_support(u, c)[0] == "a":
                    diff.append(f"{code}: support is a full power set")
    return SuiteResult("duality", "no violations", f"{checked} codes, {len(diff)} violations", diff)


def _gee_interval_context(r: int, m: int) -> CohContext:
    return CohContext(GeneticCode(m + 3, (full(r),)))


def identity_genlthm(max_r: int = 4, max_m: int = 12) -> list[str]:
    """Closed form of the ``R^m = 0`` product against its pairing on gee ``[[r]]`` codes."""
    diff = []
    for r in range(1, max_r + 1):
        for m in range(r + 1, max_m + 1):
            built = genlthm_product(m, range(1, r + 1))
            if built is None:
                continue
            product, _ = built
            ctx = _gee_interval_context(r, m)
            brute = expand_evaluate(ctx, product, (m, m - 1), mode="pairing")
            closed = genlthm_closed_form(m, r)
            if brute != closed or closed != 1:
                diff.append(f"genlthm r={r} m={m}: closed {closed}, pairing {brute}")
    return diff


def identity_longprop(max_m: int = 10) -> list[str]:
    """Closed form for the long-support product against brute force, for ``m`` not a 2-power."""
    diff = []
    for m in range(3, max_m + 1):
        if m & (m - 1) == 0:
            continue
        for t in range(1, m):
            top_set = full(t + 1)
            phi = lambda s, T=top_set: int(s & ~T == 0 and s != T)
            for A in range(1, m - t + 1):
                product = ZeroDivisorProduct(2 * m - A - t - 1, {**{i: 1 for i in range(1, t + 1)}, t + 1: A})
                brute = pair_product(product, m, phi)
                closed = longprop_closed_form(m, t, A)
                if brute != closed:
                    diff.append(f"longprop m={m} t={t} A={A}: closed {closed}, pairing {brute}")
    return diff


def identity_shortprop(max_t: int = 3, max_m: int = 8) -> list[str]:
    """The short-support product pairs to 1 for every duality function meeting its hypothesis."""
    diff = []
    for t in range(1, max_t + 1):
        s_bit = 1 << (t + 1)
        top_set = full(t + 1)
        free = [x for x in range(1, 1 << (t + 2)) if x & ~top_set == 0 and not x & s_bit]
        for m in range(t + 1, max_m + 1):
            product = ZeroDivisorProduct(m - 1, {**{i: 1 for i in range(1, t + 1)}, t + 1: m - t})
            for bits in range(1 << len(free)):
                ones = {0, top_set} | {x for j, x in enumerate(free) if bits >> j & 1}
                phi = lambda s, ones=ones: int(s in ones)
                if pair_product(product, m, phi) != 1:
                    diff.append(f"shortprop t={t} m={m} ones={sorted(ones)}")
                    break
    return diff


def identity_examples() -> list[str]:
    diff = []
    ctx = CohContext(GeneticCode.parse("8321"))
    if expand_evaluate(ctx, ZeroDivisorProduct(0, {1: 3, 2: 3, 3: 3}), (5, 4)) != 1:
        diff.append("gee 321, m=5: product at (5,4) vanishes")
    ctx = CohContext(GeneticCode.parse("T4321"))
    # nonzero as a tensor; the phi x (phi R) pairing of this component is 0
    if not expand_evaluate(ctx, ZeroDivisorProduct(0, {1: 3, 2: 3, 3: 3, 4: 4}), (7, 6), mode="exact")[1]:
        diff.append("gee 4321, m=7: product at (7,6) vanishes")
    ctx = CohContext(GeneticCode.parse("94321"))
    cert = zcl_search(ctx, 11)
    if cert is None:
        diff.append("gee 4321, m=6: no product of degree 11")
    if not expand_evaluate(ctx, ZeroDivisorProduct(0, {1: 3, 2: 3, 3: 3, 4: 2}), (6, 5), mode="exact")[1]:
        diff.append("gee 4321, m=6: product at (6,5) vanishes")
    if zcl_search(CohContext(GeneticCode.parse("84321")), 9) is not None:
        diff.append("gee 4321, m=5: unexpected product of degree 9")
    if zcl_search(CohContext(GeneticCode.parse("7321")), 7) is not None:
        diff.append("gee 321, m=4: unexpected product of degree 7")
    return diff


def suite_identities() -> SuiteResult:
    parts = {
        "genlthm": identity_genlthm(),
        "longprop": identity_longprop(),
        "shortprop": identity_shortprop(),
        "examples": identity_examples(),
    }
    diff = [d for v in parts.values() for d in v]
    return SuiteResult("identities", "all hold", {k: "ok" if not v else f"{len(v)} failures" for k, v in parts.items()}, diff)


def random_generic_vector(rng: random.Random, n: int, bound: int = 30) -> LengthVector:
    while True:
        w = sorted(rng.randint(1, bound) for _ in range(n))
        if w[-1] >= sum(w[:-1]):
            continue
        lv = LengthVector(w)
        if is_generic(lv):
            return lv


def suite_roundtrip(samples: int = 500, seed: int = 20240601, max_n: int = 8) -> SuiteResult:
    diff = []
    codes = 0
    for n in range(4, max_n + 1):
        for code in enumerate_codes(n):
            codes += 1
            back = genetic_code(realize(code))
            if back != code:
                diff.append(f"realize {code} -> {back}")
    rng = random.Random(seed)
    for _ in range(samples):
        lv = random_generic_vector(rng, rng.randint(4, max_n))
        try:
            stab = stabilize(normalize(lv))
        except (ValueError, GenericityError) as exc:
            diff.append(f"{lv}: {exc}")
            continue
        if genetic_code(stab).gees != genetic_code(lv).gees:
            diff.append(f"{lv}: gees change under normalize/stabilize")
    return SuiteResult("roundtrip", "no failures", f"{codes} codes, {samples} vectors, {len(diff)} failures", diff)


SUITES = {
    "counts": suite_counts,
    "table1": suite_table1,
    "sweep7": lambda: suite_sweep(7),
    "sweep8": lambda: suite_sweep(8),
    "size5": suite_size5,
    "size6": suite_size6,
    "oracle": suite_oracle,
    "duality": suite_duality,
    "identities": suite_identities,
    "roundtrip": suite_roundtrip,
}
