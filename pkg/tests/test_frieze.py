import itertools
import json

from hypothesis import given, settings
import pytest

from friezelink.frieze import (
    Frieze,
    check_diamonds,
    corners,
    find_symmetry,
    frieze_from_word,
    frieze_of,
    friezes_equivalent,
    max_cells,
    max_entry_with_neighbors,
    render_ascii,
    render_frieze,
    render_json,
    render_markdown,
)
from friezelink.lrwords import alpha_of, op_i, op_ir, op_r, orbit_set
from friezelink.rational import Fraction

from strategies import unit_fractions, words

# The frieze of LLRRL as a staggered grid, row by row, "_" for an empty slot.
# Transcribed cell by cell; the comparison allows one horizontal translation.
LLRRL_GRID = """
1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1
_ 2 _ 4 _ 2 _ 2 _ 1 _ 4 _ 2 _ 3 _ 1 _ 2 _ 4 _ 2 _ 2
1 _ 7 _ 7 _ 3 _ 1 _ 3 _ 7 _ 5 _ 2 _ 1 _ 7 _ 7 _ 3 _
_ 3 _ 12 _ 10 _ 1 _ 2 _ 5 _ 17 _ 3 _ 1 _ 3 _ 12 _ 10 _ 1
2 _ 5 _ 17 _ 3 _ 1 _ 3 _ 12 _ 10 _ 1 _ 2 _ 5 _ 17 _ 3 _
_ 3 _ 7 _ 5 _ 2 _ 1 _ 7 _ 7 _ 3 _ 1 _ 3 _ 7 _ 5 _ 2
1 _ 4 _ 2 _ 3 _ 1 _ 2 _ 4 _ 2 _ 2 _ 1 _ 4 _ 2 _ 3 _
_ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1
"""


def _grid_cells():
    cells = {}
    for r, line in enumerate(LLRRL_GRID.strip().splitlines()):
        for x, tok in enumerate(line.split()):
            if tok != "_":
                cells[(r, x)] = int(tok)
    return cells


def test_llrrl_matches_transcribed_grid():
    f = frieze_from_word("LLRRL")
    cells = _grid_cells()
    assert len(f.rows) == 8 and f.order == 9
    shifts = [s for s in range(2 * f.order)
              if all(f.has_cell(r, x + s) and f.value(r, x + s) == v for (r, x), v in cells.items())]
    assert shifts, "no translation carries the grid onto the frieze"


def test_llrrl_maximum_and_neighbors():
    f = frieze_from_word("LLRRL")
    q, around = max_entry_with_neighbors(f)
    assert q == 17 and set(around) == {7, 10, 12, 5}
    r, x = max_cells(f)[0]
    assert corners(f, r, x) == {"UL": 7, "UR": 5, "LL": 12, "LR": 10}


def test_llrrl_period_rows():
    f = frieze_from_word("LLRRL")
    # each interior row as a cyclic sequence read left to right
    expected = [
        (2, 4, 2, 2, 1, 4, 2, 3, 1),
        (1, 7, 7, 3, 1, 3, 7, 5, 2),
        (3, 12, 10, 1, 2, 5, 17, 3, 1),
        (2, 5, 17, 3, 1, 3, 12, 10, 1),
        (3, 7, 5, 2, 1, 7, 7, 3, 1),
        (1, 4, 2, 3, 1, 2, 4, 2, 2),
    ]
    for got, want in zip(f.rows[1:-1], expected):
        rotations = {tuple(want[k:] + want[:k]) for k in range(len(want))}
        assert tuple(got) in rotations


def test_small_friezes():
    f = frieze_from_word("")
    assert f.order == 4 and sorted(f.rows[1]) == [1, 1, 2, 2]
    g = frieze_of(Fraction(1, 3))
    assert g.order == 5 and sorted(g.rows[1]) == [1, 1, 2, 2, 3]


@pytest.mark.parametrize("length", range(0, 13))
def test_diamond_rule_exhaustive(length):
    for letters in itertools.product("LR", repeat=length):
        f = frieze_from_word("".join(letters))
        assert not check_diamonds(f)
        assert all(v > 0 for _, _, v in f.cells())


@given(unit_fractions(200))
@settings(max_examples=150)
def test_maximum_is_denominator_surrounded_by_orbit(alpha):
    f = frieze_of(alpha)
    nums = {b.num for b in orbit_set(alpha)}
    for r, x in max_cells(f):
        assert f.value(r, x) == alpha.den
        assert set(corners(f, r, x).values()) == nums


@pytest.mark.parametrize("length", range(0, 11))
def test_word_and_swapped_reversal_give_equivalent_friezes(length):
    for letters in itertools.product("LR", repeat=length):
        w = "".join(letters)
        ir_w = w[::-1].translate(str.maketrans("LR", "RL"))
        assert friezes_equivalent(frieze_from_word(w), frieze_from_word(ir_w))


@given(unit_fractions(100))
@settings(max_examples=80)
def test_orbit_members_give_equivalent_friezes(alpha):
    f = frieze_of(alpha)
    for b in (op_i(alpha), op_r(alpha), op_ir(alpha)):
        assert find_symmetry(f, frieze_of(b)) is not None


def test_distinct_orbits_give_inequivalent_friezes():
    assert not friezes_equivalent(frieze_of(Fraction(1, 7)), frieze_of(Fraction(2, 7)))


@given(words(10))
def test_json_round_trip(w):
    f = frieze_from_word(w)
    assert Frieze.from_dict(json.loads(render_json(f))) == f


def test_renderers_mark_the_maximum():
    f = frieze_from_word("LLRRL")
    text = render_ascii(f, mark_max=True, color=False)
    assert "[17]" in text and "(7)" in text and "(12)" in text
    assert "\x1b[" in render_ascii(f, mark_max=True, color=True)
    assert "[17]" in render_markdown(f, mark_max=True)
    assert render_frieze(f, "json").endswith("\n")
    with pytest.raises(ValueError):
        render_frieze(f, "svg")


def test_frieze_word_is_recovered():
    from friezelink.jones import word_of_frieze

    for w in ["", "L", "LLRRL", "RLRRLR"]:
        f = frieze_from_word(w)
        assert str(word_of_frieze(f)) == w
        assert alpha_of(w) == alpha_of(str(word_of_frieze(f)))
