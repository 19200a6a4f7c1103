import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygon_tc.cohomology import CohContext, ContextError, format_monomial
from polygon_tc.combinatorics import as_mask, full, size
from polygon_tc.polygons import GeneticCode, enumerate_codes


def ctx_of(text):
    return CohContext(GeneticCode.parse(text))


@pytest.fixture(scope="module")
def c321():
    return ctx_of("8321")  # gee {3,2,1}, m = 5


def test_relation_indexing(c321):
    m = c321.m
    top = c321.relations(m)
    assert sorted(s for s, _ in top) == sorted(s for s in c321.family.ordered if s)
    vec = dict(top)[as_mask({3})]
    assert sorted(vec.terms()) == sorted([0, as_mask({1}), as_mask({2}), as_mask({1, 2})])
    assert c321.relation_vectors(1) == []  # needs |S| >= m, but subgees have size <= 3


def test_relations_reduce_to_zero(c321):
    for d in range(c321.m + 1):
        for rel in c321.relation_vectors(d):
            assert not rel


def test_top_degree_of_gee_321(c321):
    m = c321.m
    assert not c321.R(m)
    assert c321.monomial(m, {1, 2, 3})
    assert c321.dim(m) == 1
    assert c321.dim(m - 1) == 4
    assert [format_monomial(m - 1, s) for s in c321.basis(m - 1)] == [
        "R^2 V{1,2}", "R^2 V{1,3}", "R^2 V{2,3}", "R V{1,2,3}",
    ]
    assert c321.dims() == [1, 4, 7, 7, 4, 1]


def test_small_products(c321):
    v1 = c321.V(1)
    assert v1 * v1 == c321.monomial(2, {1})
    ctx = ctx_of("65")
    assert as_mask({1, 5}) not in ctx.family
    assert not (ctx.V(1) * ctx.V(5))
    assert not (c321.monomial(1, {1}) * c321.R(c321.m))


def test_phi_and_psi(c321):
    m = c321.m
    assert c321.phi(0) == 0
    assert c321.phi({1, 2, 3}) == 1
    assert c321.psi({1, 2, 3}) == 1
    assert c321.psi({1, 2}) == 0
    assert ctx_of("52").phi(0) == 1  # gee {2}
    assert c321.phi_support() == (as_mask({1, 2, 3}), [as_mask({1, 2, 3})])
    assert 0 in ctx_of("52").phi_support()[1]


def test_psi_is_phi_after_R():
    for text in ("8321", "75;741;7321", "86321", "87;865;8621;8541"):
        ctx = ctx_of(text)
        m = ctx.m
        for s in ctx.basis(m - 1):
            assert ctx.psi(s) == ctx.phi_class(ctx.R() * ctx.monomial(m - 1, s))
        for rel in ctx.relation_vectors(m - 1):
            assert ctx.psi_class(rel) == 0
        for s in ctx.family.ordered:
            if size(s) <= m - 1:
                assert ctx.psi(s) == ctx.phi(s)
        assert ctx.psi(0) == ctx.phi(0)


def test_maximal_subgees_have_phi_one():
    for code in enumerate_codes(7):
        ctx = CohContext(code)
        fam = ctx.family
        k = max(size(s) for s in fam.ordered)
        for s in fam.ordered:
            if size(s) == k:
                assert ctx.phi(s) == 1


def test_interval_gee_top_two_degrees():
    # gee [[4]], m = 7: besides R^(m-1-r) V_[[r]], the nonzero degree-(m-1)
    # monomials are R^(m-r) V_([[r]] - {i})
    ctx = ctx_of("T4321")
    m, r = ctx.m, 4
    expected = {full(r)} | {full(r) & ~(1 << i) for i in range(1, r + 1)}
    nonzero = {s for s in ctx.family.ordered if size(s) <= m - 1 and ctx.monomial(m - 1, s)}
    assert nonzero == expected
    assert {s for s in ctx.family.ordered if ctx.monomial(m, s)} == {full(r)}


def test_poincare_duality_n7():
    for code in enumerate_codes(7):
        dims = CohContext(code).dims()
        assert dims == dims[::-1] and dims[0] == dims[-1] == 1


def test_projective_and_torus_dims():
    assert ctx_of("7").dims() == [1, 1, 1, 1, 1]
    assert ctx_of("74321").dims() == [1, 4, 6, 4, 1]


def test_context_error_for_non_manifold():
    bad = CohContext(GeneticCode(5, [as_mask({3, 2, 1})], check=False))
    with pytest.raises(ContextError):
        bad.phi(0)


def test_degree_range():
    ctx = ctx_of("8321")
    with pytest.raises(ValueError):
        ctx.columns(6)
    assert ctx.dim(6) == 0


codes7 = enumerate_codes(7)


@given(st.sampled_from(codes7), st.integers(0, 10**9))
def test_ring_axioms(code, seed):
    ctx = CohContext(code)
    rng = random.Random(seed)

    def rand_class(d):
        cols = ctx.columns(d)
        return ctx.zero(d) if not cols else type(ctx.zero(d))(ctx, d, rng.getrandbits(len(cols)))

    d1, d2, d3 = (rng.randint(0, 2) for _ in range(3))
    a, b, c = rand_class(d1), rand_class(d2), rand_class(d3)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    if d2 == d3:
        assert a * (b + c) == a * b + a * c
    red = ctx.reduce(a)
    assert ctx.reduce(red) == red and red == a


def test_class_formatting(c321):
    assert str(c321.zero(3)) == "0"
    assert str(c321.R(2) + c321.monomial(2, {1, 2})) == "R^2 + V{1,2}"
