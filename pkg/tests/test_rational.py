from hypothesis import given, strategies as st
import pytest

from friezelink.errors import NegativeInput, NoParents, NotNeighbors, OutOfRange, ZeroOverZero
from friezelink.rational import (
    ContinuedFraction,
    Fraction,
    ParityType,
    cf_expand,
    cf_value,
    classify_type,
    convergent_types,
    convergents,
    count_even_terms,
    coprime_fractions,
    farey_sum,
    is_farey_neighbor,
    make_fraction,
    normalize_terms,
    parents,
    parse_fraction,
)

from strategies import unit_fractions


def test_make_fraction_reduces_and_allows_infinity():
    assert make_fraction(6, 9) == Fraction(2, 3)
    assert make_fraction(5, 0) == Fraction(1, 0)
    assert Fraction(1, 0).is_infinite
    with pytest.raises(ZeroOverZero):
        make_fraction(0, 0)
    with pytest.raises(NegativeInput):
        make_fraction(-1, 3)


def test_parse_fraction_accepts_whitespace():
    assert parse_fraction(" 3 / 8 ") == Fraction(3, 8)
    assert parse_fraction("2") == Fraction(2, 1)
    with pytest.raises(ValueError):
        parse_fraction("3/x")


def test_farey_sum_and_neighbors():
    assert farey_sum(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5)
    with pytest.raises(NotNeighbors):
        farey_sum(Fraction(1, 3), Fraction(2, 3))
    assert is_farey_neighbor(Fraction(0, 1), Fraction(1, 0))


def test_parents_examples():
    assert parents(Fraction(7, 17)) == (Fraction(2, 5), Fraction(5, 12))
    assert parents(Fraction(1, 4)) == (Fraction(0, 1), Fraction(1, 3))
    assert parents(Fraction(3, 10)) == (Fraction(2, 7), Fraction(1, 3))
    assert parents(Fraction(3, 14)) == (Fraction(1, 5), Fraction(2, 9))
    with pytest.raises(NoParents):
        parents(Fraction(0, 1))


@given(unit_fractions(1000))
def test_parents_are_neighbors_with_mediant_alpha(alpha):
    left, right = parents(alpha)
    assert is_farey_neighbor(left, right)
    assert farey_sum(left, right) == alpha
    # the mediant is again a neighbour of both parents
    assert is_farey_neighbor(left, alpha) and is_farey_neighbor(alpha, right)


def test_cf_expand_examples():
    assert cf_expand(Fraction(3, 8), "odd") == ContinuedFraction.of(0, 2, 1, 2)
    assert cf_expand(Fraction(3, 8), "even") == ContinuedFraction.of(0, 2, 1, 1, 1)
    assert cf_expand(Fraction(1, 4), "odd") == ContinuedFraction.of(0, 4)
    assert cf_expand(Fraction(1, 4), "even") == ContinuedFraction.of(0, 3, 1)
    assert cf_expand(Fraction(3, 14), "odd").as_list() == [0, 4, 1, 2]
    assert cf_expand(Fraction(3, 10), "even").as_list() == [0, 3, 3]


@given(unit_fractions(1000), st.sampled_from(["any", "even", "odd"]))
def test_cf_round_trip(alpha, parity):
    cf = cf_expand(alpha, parity)
    assert cf_value(cf) == alpha
    if parity != "any":
        assert cf.n % 2 == (0 if parity == "even" else 1)


def test_normalize_terms_merges_zero_terms():
    assert normalize_terms(0, [1, 0, 3]) == ContinuedFraction.of(0, 4)
    assert normalize_terms(0, [1, 3, 1, 2]).value() == Fraction(11, 14)


def test_parity_types():
    assert classify_type(Fraction(1, 4)) is ParityType.ONE_ZERO
    assert classify_type(Fraction(7, 17)) is ParityType.ONE_ONE
    assert classify_type(Fraction(2, 5)) is ParityType.ZERO_ONE


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8).filter(lambda t: t != [1]))
def test_convergent_types_match_direct_parities(terms):
    cf = ContinuedFraction(0, tuple(terms))
    assert convergent_types(cf) == [classify_type(f) for f in convergents(cf)]


@given(unit_fractions(600))
def test_even_term_count_parity_is_expansion_independent_for_type_one_zero(alpha):
    # only used with the even expansion, but both expansions are well defined
    cf = cf_expand(alpha, "even")
    assert count_even_terms(cf) == sum(1 for a in cf.terms if a % 2 == 0)


def test_coprime_fractions_counts():
    assert sum(1 for _ in coprime_fractions(10)) == 31
    assert all(f.den % 2 for f in coprime_fractions(20, only_odd=True))
