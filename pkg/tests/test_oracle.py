from hypothesis import given, settings
import numpy as np
import pytest

from friezelink.errors import NotTwoComponent, TooManyCrossings
from friezelink.oracle import (
    build_diagram,
    count_components,
    format_pd,
    oracle_bracket,
    oracle_writhe,
    orient_diagram,
    state_histogram,
    state_sum_bracket,
    writhe_of,
)
from friezelink.rational import Fraction, cf_expand
from friezelink.tangle import bracket_of_denominator
from friezelink.writhe import writhe_plus_minus, writhe_principal

from strategies import unit_fractions


def test_hopf_link_diagram():
    d = build_diagram(Fraction(1, 2))
    assert d.n_crossings == 2
    assert count_components(d) == 2
    od = orient_diagram(d)
    # frozen from the oracle: both crossings positive under the principal orientation
    assert od.signs() == [1, 1]
    assert format_pd(od) == "PD[X[2,1,3,4], X[1,2,4,3]]"
    assert writhe_of(orient_diagram(d, "PlusMinus")) == -2


def test_trefoil_state_histogram():
    # rows: number of A-smoothings; columns: number of loops
    hist = state_histogram(build_diagram(Fraction(1, 3)))
    assert np.array_equal(hist.sum(axis=1), [1, 3, 3, 1])
    assert np.array_equal(hist[:, :4], [[0, 0, 1, 0], [0, 3, 0, 0], [0, 0, 3, 0], [0, 0, 0, 1]])
    assert state_sum_bracket(build_diagram(Fraction(1, 3))) == bracket_of_denominator(Fraction(1, 3))


@given(unit_fractions(60))
@settings(max_examples=60)
def test_state_sum_matches_recursion(alpha):
    if sum(cf_expand(alpha).terms) > 14:
        return
    for parity in ("even", "odd"):
        assert oracle_bracket(alpha, parity) == bracket_of_denominator(alpha, parity)


@given(unit_fractions(500))
@settings(max_examples=150)
def test_component_count_follows_denominator_parity(alpha):
    d = build_diagram(alpha)
    assert count_components(d) == (2 if alpha.den % 2 == 0 else 1)


@given(unit_fractions(60))
@settings(max_examples=100)
def test_oriented_writhe_matches_recursion(alpha):
    assert oracle_writhe(alpha) == writhe_principal(alpha)
    assert oracle_writhe(alpha, parity="odd") == writhe_principal(alpha)


@given(unit_fractions(60, parity="even"))
@settings(max_examples=80)
def test_reorienting_components(alpha):
    assert oracle_writhe(alpha, "MinusMinus") == oracle_writhe(alpha)
    assert oracle_writhe(alpha, "PlusMinus") == oracle_writhe(alpha, "MinusPlus")
    assert oracle_writhe(alpha, "PlusMinus") == writhe_plus_minus(alpha)


def test_knots_cannot_reverse_one_component():
    with pytest.raises(NotTwoComponent):
        oracle_writhe(Fraction(1, 3), "PlusMinus")


def test_crossing_limit():
    with pytest.raises(TooManyCrossings):
        state_sum_bracket(build_diagram(Fraction(1, 30)))
