from hypothesis import given
import pytest

from friezelink.errors import InvalidQ
from friezelink.jones import frieze_bracket
from friezelink.frieze import frieze_of
from friezelink.lrwords import op_i, op_ir
from friezelink.rational import Fraction
from friezelink.schubert import (
    classes_to_csv,
    classify_denominator,
    mirror_related,
    orbit_class,
    orbit_partition,
    oriented_congruence,
    schubert_equivalent_unoriented,
    schubert_partition,
)
from friezelink.tangle import bracket_of_denominator

from strategies import unit_fractions

F = Fraction


def test_unoriented_equivalence():
    assert schubert_equivalent_unoriented(F(3, 10), F(7, 10))
    assert schubert_equivalent_unoriented(F(1, 3), F(1, 3))
    assert not schubert_equivalent_unoriented(F(1, 3), F(2, 3))
    assert mirror_related(F(1, 3), F(2, 3))


def test_oriented_spot_check():
    assert oriented_congruence(F(3, 10), F(7, 10))
    assert not oriented_congruence(F(1, 4), F(3, 4))


def test_orbit_classes():
    assert orbit_class(F(7, 17)).members == {7, 10, 12, 5}
    assert orbit_class(F(3, 10)).members == {3, 7}
    assert orbit_class(F(1, 2)).members == {1}


def test_classify_examples():
    assert {7, 10, 12, 5} in [c.members for c in classify_denominator(17)]
    assert [c.members for c in classify_denominator(4)] == [{1, 3}]
    assert {3, 11, 5, 9} in [c.members for c in classify_denominator(14)]
    with pytest.raises(InvalidQ):
        classify_denominator(1)


@pytest.mark.parametrize("q", range(2, 501))
def test_orbit_partition_equals_congruence_partition(q):
    assert set(orbit_partition(q)) == set(schubert_partition(q))
    assert all(c.size in (1, 2, 4) for c in orbit_partition(q))


def test_small_class_sizes_occur():
    assert classify_denominator(2)[0].size == 1
    assert classify_denominator(4)[0].size == 2


@given(unit_fractions(300))
def test_mirror_members(alpha):
    q = alpha.den
    mirror = {op_i(alpha).num, op_ir(alpha).num}
    congruent = {p for p in range(1, q) if (alpha.num * p + 1) % q == 0 or (alpha.num + p) % q == 0}
    assert mirror == congruent


@given(unit_fractions(100))
def test_brackets_agree_up_to_conjugation_within_a_class(alpha):
    g = frieze_bracket(frieze_of(alpha))
    for p in orbit_class(alpha).members:
        h = frieze_bracket(frieze_of(F(p, alpha.den)))
        assert h in (g, g.conjugate())
    d = bracket_of_denominator(alpha)
    assert bracket_of_denominator(op_i(alpha)) in {d.conjugate().shift(k) for k in range(-60, 61, 2)}


def test_csv_export():
    text = classes_to_csv(classify_denominator(14))
    assert text.splitlines() == ["q,members,size,representative", "14,1 13,2,1", "14,3 5 9 11,4,3"]
