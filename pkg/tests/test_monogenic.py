from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygon_tc.combinatorics import as_mask, binom_mod2, size
from polygon_tc.monogenic import (
    abar_reduce,
    abar_representative,
    abar_space,
    certificate_indicator,
    count_Rm_zero,
    gaps_from_gee,
    gee_from_gaps,
    phi_closed_form,
    phi_indicator,
    thm01_certificate,
    thm02_certificate,
    toplem_check,
)


def test_gap_round_trip():
    assert gaps_from_gee({6, 3, 2, 1}) == (3, 1, 1, 1)
    assert gee_from_gaps((3, 1, 1, 1)) == as_mask({6, 3, 2, 1})
    with pytest.raises(ValueError):
        gee_from_gaps((1, 0))


def test_closed_form_examples():
    assert phi_closed_form((1, 1, 1)) == 0
    assert phi_closed_form((2,)) == 1
    for a in [(1, 1, 1), (3, 1, 1, 1), (2, 5, 4), (1, 2, 3, 4)]:
        gee = sorted(
            [sum(a[i:]) for i in range(len(a))], reverse=True
        )
        assert phi_closed_form(a, gee) == 1  # one index per gap


def test_abar_reduce_examples():
    assert abar_reduce((3, 1, 1, 1)) == (1, 1, 1, 1)
    assert abar_reduce((1, 2, 3, 4)) == (1, 2, 3, 4)
    assert abar_reduce((2, 5, 4, 9)) == (0, 1, 0, 1)
    assert abar_representative((0, 1, 0, 1)) == (2, 1, 4, 1)


def test_table1():
    assert count_Rm_zero(3) == (32, 20)
    assert count_Rm_zero(4) == (256, 128)
    assert count_Rm_zero(5) == (2048, 1216)
    assert count_Rm_zero(6) == (16384, 9600)
    with pytest.raises(ValueError):
        count_Rm_zero(7)


gaps = st.lists(st.integers(1, 64), min_size=1, max_size=4)


@given(gaps, st.data())
def test_reduction_invariance(a, data):
    k = len(a)
    shifted = tuple(x + data.draw(st.integers(0, 3)) * (1 << (i + 1).bit_length()) for i, x in enumerate(a))
    assert abar_reduce(shifted) == abar_reduce(a)
    eps = data.draw(st.lists(st.integers(0, 1), min_size=k, max_size=k))
    assert phi_indicator(a, eps) == phi_indicator(shifted, eps)


def k3_identity(a):
    a1, a2, a3 = a
    p1, p2, p3 = a1 - 1, a2 - 1, a3 - 1
    c = lambda n, k: binom_mod2(n, k) if n >= 0 else 0
    return (p1 * p2 * p3 + c(a3, 2) * (p1 + p2) + c(a2, 2) * p3 + c(a3 + 1, 3)) % 2


def test_k3_identity_with_corrected_last_term():
    for a1 in range(1, 9):
        for a2 in range(1, 9):
            for a3 in range(1, 9):
                assert phi_closed_form((a1, a2, a3)) == k3_identity((a1, a2, a3))


def test_toplem_examples():
    assert toplem_check((3, 1, 1, 1))
    assert not toplem_check((2, 1, 1))


def test_toplem_is_exact_up_to_k5():
    for k in range(1, 6):
        for abar in abar_space(k):
            a = abar_representative(abar)
            shorter_zero = all(
                phi_indicator(a, eps) == 0
                for eps in _indicators(k)
                if sum(eps) < k
            )
            assert shorter_zero == toplem_check(a), a


def _indicators(k):
    for r in range(k + 1):
        for pos in combinations(range(k), r):
            yield tuple(1 if i in pos else 0 for i in range(k))


def test_thm01_examples():
    assert thm01_certificate((1, 1, 0, 1)) == (frozenset({1, 2, 4}), 3)
    assert thm01_certificate((0, 0, 0)) is None
    assert thm01_certificate((1, 2, 0)) is None


def test_thm02_examples():
    assert thm02_certificate((0, 2, 1)) == (frozenset({2}), frozenset({3}), 2)
    assert thm02_certificate((2, 1, 1)) is None
    assert thm02_certificate((0, 2, 0, 2)) == (frozenset({2, 4}), frozenset(), 2)


def _minimal_nonzero(a, eps):
    if phi_indicator(a, eps) != 1:
        return False
    for sub in _indicators(len(eps)):
        if sub != eps and all(s <= e for s, e in zip(sub, eps)) and phi_indicator(a, sub):
            return False
    return True


def test_certificates_meet_their_hypothesis():
    for k in range(1, 6):
        for abar in abar_space(k):
            a = abar_representative(abar)
            one = thm01_certificate(abar)
            if one is not None:
                assert _minimal_nonzero(a, certificate_indicator(k, one[0]))
            two = thm02_certificate(abar)
            if two is not None:
                t, z, r = two
                eps = certificate_indicator(k, z, t)
                assert sum(eps) == r
                assert _minimal_nonzero(a, eps)
