"""One test per acceptance criterion; each records a PASS or FAIL line."""

import functools
import time

from conftest import ACCEPTANCE_LINES
from friezelink.frieze import corners, frieze_from_word, max_cells, max_entry_with_neighbors
from friezelink.jones import exceptional_pairs_report, jones
from friezelink.laurent import t_poly
from friezelink.rational import ContinuedFraction, Fraction
from friezelink.verify import run_suite
from friezelink.writhe import sign_sequence, writhe_from_signs, writhe_principal

F = Fraction


def criterion(number: int, title: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run():
            try:
                detail = fn()
            except BaseException as exc:
                line = f"criterion {number}: FAIL  {title} ({type(exc).__name__}: {exc})"
                print(line)
                ACCEPTANCE_LINES.append(line)
                raise
            line = f"criterion {number}: PASS  {title}" + (f" ({detail})" if detail else "")
            print(line)
            ACCEPTANCE_LINES.append(line)
        return run
    return wrap


def _suites(*specs):
    """Run (name, bound) suites; return a short summary and assert all pass."""
    parts = []
    for name, bound in specs:
        res = run_suite(name, bound)
        assert res.ok, f"{name}: {res.failed} failures, e.g. {res.witnesses[:3]}"
        parts.append(f"{name} {res.checked} checks")
    return ", ".join(parts)


@criterion(1, "writhes of 3/8 and 8/11 from the sign sequences")
def test_criterion_01_writhe_examples():
    assert writhe_from_signs(ContinuedFraction.of(0, 2, 1, 2)) == -1
    assert writhe_principal(F(3, 8)) == -1
    assert writhe_principal(F(8, 11)) == 2
    return "wr(3/8) = -1, wr(8/11) = 2"


@criterion(2, "sign sequences of [0,2,1,2] and [0,1,2,1,2]")
def test_criterion_02_sign_sequences():
    assert sign_sequence(ContinuedFraction.of(0, 2, 1, 2)) == (-1, 1, 1)
    assert sign_sequence(ContinuedFraction.of(0, 1, 2, 1, 2)) == (-1, -1, -1, 1)


@criterion(3, "Jones golden values and the t^3 shift relations")
def test_criterion_03_jones_golden_values():
    V = lambda p, q: jones(F(p, q)).poly_t
    v_3_14 = t_poly({5: -1, 4: 1, 3: -2, 2: 2, 1: -3, 0: 2, -1: -2, -2: 1}, -3)
    assert V(1, 4) == t_poly({3: -1, 1: -1, 0: 1, -1: -1}, 3)
    assert V(3, 4) == t_poly({-3: -1, -1: -1, 0: 1, 1: -1}, 9)
    assert V(3, 10) == t_poly({3: -1, 2: 1, 1: -2, 0: 2, -1: -2, -2: 1, -3: -1}, 9)
    assert V(3, 14) == v_3_14
    assert V(11, 14) == t_poly({2: 1, 1: -2, 0: 2, -1: -3, -2: 2, -3: -2, -4: 1, -5: -1}, 9)
    # multiplying by t^k shifts exponents of t^(1/2) by 2k
    assert V(11, 14) == V(3, 14).conjugate().shift(6)
    assert V(5, 14) == V(3, 14).shift(-6)


@criterion(4, "frieze of LLRRL: maximum 17, neighbours 7, 10, 12, 5, period rows")
def test_criterion_04_llrrl_frieze():
    from test_frieze import _grid_cells

    f = frieze_from_word("LLRRL")
    q, around = max_entry_with_neighbors(f)
    assert q == 17 and set(around) == {7, 10, 12, 5}
    assert corners(f, *max_cells(f)[0]) == {"UL": 7, "UR": 5, "LL": 12, "LR": 10}
    cells = _grid_cells()
    assert any(all(f.has_cell(r, x + s) and f.value(r, x + s) == v for (r, x), v in cells.items())
               for s in range(2 * f.order))


@criterion(5, "oracle equivalence of brackets and writhes, den <= 60")
def test_criterion_05_oracle_equivalence():
    t0 = time.perf_counter()
    summary = _suites(("oracle-bracket", 60), ("oracle-writhe", 60))
    elapsed = time.perf_counter() - t0
    assert elapsed < 120, f"took {elapsed:.1f}s"
    return f"{summary}, {elapsed:.1f}s"


@criterion(6, "orbit partition equals Schubert-with-mirror partition, q <= 500")
def test_criterion_06_orbit_partition():
    return _suites(("thm32", 500))


@criterion(7, "frieze bracket quadruple (den <= 200) and Jones orbit relations (den <= 300)")
def test_criterion_07_bracket_and_jones_relations():
    return _suites(("eq416", 200), ("thm46", 300))


@criterion(8, "parity rule, writhe lemmas, extended weights, class well-definedness, last-sign closed form")
def test_criterion_08_sweeps():
    return _suites(("lemma15", 1000), ("lemma41", 300), ("lemma42", 500), ("lemma45", 300),
                   ("cor48", 300), ("cor53", 18))


@criterion(9, "exceptional pairs: Jones up to t <-> 1/t, numerator displays, 104/106 flag")
def test_criterion_09_exceptional_pairs():
    rep = exceptional_pairs_report()
    relations = []
    for pr in rep["pairs"]:
        assert pr.relation in ("equal", "conjugate") and pr.ratio == (1, 0), pr
        assert pr.same_class
        relations.append(pr.relation)
    assert all(d["match"] for d in rep["displays"].values())
    for pat in rep["patterns"].values():
        assert abs(pat["n(a)-n(ir a)"]) == 2 and pat["n(a)-n(ir a)"] == pat["n(r a)-n(i a)"]
        assert pat["divisible"]
    (flag,) = rep["flags"]
    assert (flag["listed"], flag["displayed"]) == ("104/147", "106/147")
    return "relations " + ", ".join(relations) + "; 104 vs 106 flagged"


@criterion(10, "frieze route and link route give the same Jones polynomial, den <= 200")
def test_criterion_10_dual_path():
    return _suites(("dual-jones", 200))
