import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polygon_tc.combinatorics import as_mask, dominates, full
from polygon_tc.polygons import (
    CodeParseError,
    GenericityError,
    GeneticCode,
    LengthVector,
    Unrealizable,
    enumerate_codes,
    genetic_code,
    is_admissible,
    is_generic,
    is_realizable,
    is_short,
    normalize,
    realize,
    satisfies_lcond,
    stabilize,
)

N6_CODES = [
    "6", "61", "62", "621", "63", "63;621", "631", "632", "6321", "64",
    "64;621", "64;631", "64;632", "641", "65", "65;621", "65;631", "65;632", "65;641", "651",
]


def test_genericity_examples():
    assert is_generic(LengthVector([1, 1, 1, 1, 3]))
    # (1,1,2) is rejected outright: its space is empty
    with pytest.raises(ValueError):
        LengthVector([1, 1, 2])
    assert not is_generic(LengthVector([1, 1, 1, 1]))
    assert is_generic(LengthVector([1, 1, 1, 9, 9, 9]))
    assert is_generic(LengthVector([Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]))


def test_length_vector_validation():
    with pytest.raises(ValueError):
        LengthVector([1, 1])
    with pytest.raises(ValueError):
        LengthVector([2, 1, 1])
    with pytest.raises(ValueError):
        LengthVector([1, 1, 5])
    with pytest.raises(ValueError):
        LengthVector([0, 1, 1])


def test_shortness_examples():
    lv = LengthVector([1, 1, 1, 1, 3])
    assert is_short(lv, {5})
    assert not is_short(lv, {1, 5})
    assert is_short(lv, set())
    with pytest.raises(GenericityError):
        is_short(LengthVector([1, 1, 1, 1]), {4})


def test_genetic_code_examples():
    assert str(genetic_code(LengthVector([1, 1, 1, 1, 3]))) == "5"
    assert genetic_code(LengthVector([1, 1, 1, 1, 3])).is_projective
    assert str(genetic_code(LengthVector([1, 2, 2, 2, 2, 4]))) == "65"
    assert genetic_code(realize(GeneticCode.parse("74321"))).is_torus
    with pytest.raises(GenericityError):
        genetic_code(LengthVector([1, 1, 1, 1]))


def test_subgee_examples():
    fam = GeneticCode.parse("7321").subgees
    assert len(fam) == 8 and 0 in fam
    assert GeneticCode.parse("5").subgees.members == frozenset({0})
    assert as_mask({4}) in GeneticCode.parse("96321").subgees
    assert sorted(fam.maximal()) == [as_mask({3, 2, 1})]


def test_admissibility_examples():
    assert not is_admissible(8, [{7, 6, 5, 1}])
    assert is_admissible(5, [set()])
    assert is_admissible(7, [{4, 3, 2, 1}])
    assert not is_admissible(7, [{4, 3}, {4}])  # not an antichain
    # complement-free but unrealizable: {3,2} with n=5
    assert not is_admissible(5, [{3, 2}])


def test_parse_and_format():
    code = GeneticCode.parse("65;621")
    assert code.n == 6 and str(code) == "65;621"
    assert str(GeneticCode.parse("621;65")) == "65;621"
    assert str(GeneticCode.parse("E98721")) == "E98721"
    assert GeneticCode.parse("{12,5,4,3,2,1}").n == 12
    for bad in ("", "6x1", "65;721", "566", "{6,5"):
        with pytest.raises(CodeParseError):
            GeneticCode.parse(bad)
    with pytest.raises(Unrealizable):
        GeneticCode.parse("87651")


def test_counts_small():
    assert [len(enumerate_codes(n)) for n in (4, 5, 6)] == [2, 6, 20]
    assert [str(c) for c in enumerate_codes(6)] == N6_CODES
    with pytest.raises(ValueError):
        enumerate_codes(10)


def test_enumeration_is_duplicate_free_and_admissible():
    codes = enumerate_codes(7)
    assert len({str(c) for c in codes}) == len(codes) == 134
    assert all(is_admissible(c.n, c.gees) for c in codes)
    for c in codes:
        gees = c.gees
        assert all(not dominates(a, b) for a in gees for b in gees if a != b)
        assert sorted(c.subgees.maximal()) == sorted(gees)


def test_realize_examples():
    lv = realize(GeneticCode.parse("5"))
    assert lv.as_ints() == (1, 1, 1, 1, 3)
    assert realize(GeneticCode.parse("74321")).as_ints() == (1, 1, 1, 1, 5, 5, 5)
    with pytest.raises(Unrealizable):
        realize(GeneticCode(8, [as_mask({7, 6, 5, 1})], check=False))


def test_realize_round_trip_n7():
    for code in enumerate_codes(7):
        lv = realize(code)
        assert lv.total % 2 == 1
        assert genetic_code(lv) == code


def test_normalize_examples():
    lv = LengthVector([1, 1, 1, 1, 3])
    assert normalize(lv) == lv
    norm = normalize(LengthVector([3, 3, 3]))
    assert norm.as_ints() == (1, 1, 1)
    for raw in ([1, 1, 1, 9, 9, 9], [1, 3, 3, 5, 9, 12]):
        src = LengthVector(raw)
        out = normalize(src)
        assert satisfies_lcond(out) and out.total % 2 == 1
        assert genetic_code(out) == genetic_code(src)
    with pytest.raises(GenericityError):
        normalize(LengthVector([1, 1, 1, 1]))


def test_stabilize_examples():
    lv = LengthVector([1, 1, 1, 1, 3])
    once = stabilize(lv)
    assert once.as_ints() == (1, 1, 1, 1, 1, 4)
    twice = stabilize(normalize(once))
    assert genetic_code(once).gees == genetic_code(twice).gees == (0,)
    with pytest.raises(ValueError):
        stabilize(LengthVector([1, 1, 1, 9, 9, 9]))


@st.composite
def generic_vectors(draw):
    n = draw(st.integers(4, 8))
    rng = random.Random(draw(st.integers(0, 10**9)))
    while True:
        w = sorted(rng.randint(1, 25) for _ in range(n))
        if w[-1] < sum(w[:-1]) and is_generic(LengthVector(w)):
            return LengthVector(w)


@given(generic_vectors())
def test_normalize_then_stabilize_keeps_gees(lv):
    norm = normalize(lv)
    assert satisfies_lcond(norm)
    assert genetic_code(norm) == genetic_code(lv)
    assert genetic_code(stabilize(norm)).gees == genetic_code(lv).gees


@given(generic_vectors())
def test_codes_of_vectors_are_admissible_and_realizable(lv):
    code = genetic_code(lv)
    assert is_admissible(code.n, code.gees)
    assert is_realizable(code)
    assert genetic_code(realize(code)) == code


def test_torus_flags():
    for n in range(5, 10):
        code = GeneticCode(n, [full(n - 3)])
        assert code.is_torus and not code.is_projective
