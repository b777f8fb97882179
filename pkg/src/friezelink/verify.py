"""Bounded sweeps that machine-check the identities implemented by the package.

Every suite is split into independent chunks (one denominator, or one
total of partial quotients).  A chunk returns how many checks it made and
the failures it found; aggregation only adds counts and sorts witnesses,
so the report is the same for any ``jobs``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import Callable, Iterable

from .frieze import corners, frieze_of, friezes_equivalent, max_cells
from .jones import (
    exceptional_pairs_report,
    extended_weight,
    frieze_bracket,
    jones_case,
    jones_class_of,
    jones_frieze_route,
    jones_link_route,
    weight,
)
from .laurent import LaurentPoly, minus_a_cubed_pow
from .lrwords import op_i, op_ir, op_r, orbit_set, word_of
from .oracle import oracle_bracket, oracle_writhe
from .rational import (
    ContinuedFraction,
    Fraction,
    ParityType,
    cf_expand,
    cf_value,
    classify_type,
    convergent_types,
    convergents,
    count_even_terms,
    farey_sum,
    normalize_terms,
    parents,
)
from .schubert import orbit_partition, schubert_partition
from .tangle import bracket_of_denominator
from .writhe import sign_sequence, top_sign_closed_form, writhe_plus_minus, writhe_principal

MAX_WITNESSES = 20


@dataclass(frozen=True, order=True)
class Witness:
    alpha: str
    prop: str
    expected: str
    actual: str


@dataclass
class SuiteResult:
    name: str
    bound: int
    checked: int = 0
    failed: int = 0
    witnesses: list[Witness] = field(default_factory=list)
    seconds: float = 0.0
    complete: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.complete and self.failed == 0

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "bound": self.bound,
            "checked": self.checked,
            "failed": self.failed,
            "ok": self.ok,
            "complete": self.complete,
            "seconds": round(self.seconds, 3),
            "witnesses": [w.__dict__ for w in self.witnesses],
            "notes": self.notes,
        }

    def summary(self) -> str:
        state = "PASS" if self.ok else ("INCOMPLETE" if not self.complete else "FAIL")
        return (f"{state:10s} {self.name:18s} bound={self.bound:<5d} checked={self.checked:<7d} "
                f"failed={self.failed:<5d} {self.seconds:8.2f}s")


@dataclass
class SweepReport:
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.suites)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "suites": [s.to_dict() for s in self.suites]}

    def render(self) -> str:
        lines = [s.summary() for s in self.suites]
        for s in self.suites:
            for w in s.witnesses:
                lines.append(f"  {s.name}: {w.alpha} {w.prop}: expected {w.expected}, got {w.actual}")
            for note in s.notes:
                lines.append(f"  {s.name}: {note}")
        lines.append("all suites pass" if self.ok else "some suites failed")
        return "\n".join(lines)


# chunk results are (checked, [witness tuples])
Chunk = tuple[int, list[tuple[str, str, str, str]]]


class _Checker:
    """Collects checks for one chunk."""

    def __init__(self):
        self.checked = 0
        self.fails: list[tuple[str, str, str, str]] = []

    def eq(self, alpha, prop: str, expected, actual) -> None:
        self.checked += 1
        if expected != actual:
            self.fails.append((str(alpha), prop, str(expected), str(actual)))

    def result(self) -> Chunk:
        return self.checked, self.fails


def _numerators(q: int) -> Iterable[int]:
    return (p for p in range(1, q) if gcd(p, q) == 1)


def _fractions(q: int) -> Iterable[Fraction]:
    return (Fraction(p, q) for p in _numerators(q))


# cached per-fraction quantities shared by several suites

@lru_cache(maxsize=1 << 17)
def _wr(alpha: Fraction) -> int:
    return writhe_principal(alpha)


@lru_cache(maxsize=1 << 17)
def _gamma(alpha: Fraction) -> LaurentPoly:
    """Frieze bracket computed from the frieze of ``alpha``."""
    return frieze_bracket(frieze_of(alpha))


# rational core and LR words

def _lemma15(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        n0 = count_even_terms(cf_expand(a, "even")) % 2
        left, right = parents(a)
        x, r, y, s = left.num, left.den, right.num, right.den
        c.eq(a, "farey_sum(parents) = alpha", a, farey_sum(left, right))
        for parity in ("even", "odd"):
            c.eq(a, f"cf_value(cf_expand {parity})", a, cf_value(cf_expand(a, parity)))
        t = classify_type(a)
        if t is ParityType.ONE_ZERO:
            even_n0, odd_n0 = x, y
        elif t is ParityType.ONE_ONE:
            even_n0, odd_n0 = y, x
        else:
            c.eq(a, "parents have odd numerators", (1, 1), (x % 2, y % 2))
            even_n0, odd_n0 = s, r
        # exactly one of the two named integers is even, and which one is fixed by N0
        c.eq(a, f"N0 parity rule ({t})", (n0 == 0, n0 == 1), (even_n0 % 2 == 0, odd_n0 % 2 == 0))
    return c.result()


def _lemma12(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        w = word_of(a)
        i, r, ir = op_i(a), op_r(a), op_ir(a)
        c.eq(a, "w(i a) = swap w", w.swapped(), word_of(i))
        c.eq(a, "w(r a) = reverse w", w.reversed(), word_of(r))
        c.eq(a, "w(ir a) = swap reverse w", w.swapped().reversed(), word_of(ir))
        c.eq(a, "i, r involutions", (a, a), (op_i(i), op_r(r)))
        c.eq(a, "i r = r i = ir", (ir, ir), (op_i(r), op_r(i)))
        c.eq(a, "orbit size", True, len(orbit_set(a)) in (1, 2, 4))
    return c.result()


def _lemma14(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        for parity in ("even", "odd"):
            t = list(cf_expand(a, parity).terms)
            c.eq(a, f"i closed form ({parity})", op_i(a), normalize_terms(0, [1, t[0] - 1, *t[1:]]).value())
        rev = list(cf_expand(a, "even").terms)[::-1]
        c.eq(a, "r closed form", op_r(a), normalize_terms(0, [1, rev[0] - 1, *rev[1:]]).value())
        c.eq(a, "ir closed form", op_ir(a), ContinuedFraction(0, tuple(rev)).value())
    return c.result()


def _compositions(total: int) -> Iterable[tuple[int, ...]]:
    """All tuples of positive integers with the given sum."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first, *rest)


def _cf_terms(total: int) -> Iterable[tuple[int, ...]]:
    # [0, 1] is the integer 1, the only composition outside (0, 1)
    return (t for t in _compositions(total) if t != (1,))


def _convergent_types(total: int) -> Chunk:
    c = _Checker()
    for terms in _cf_terms(total):
        cf = ContinuedFraction(0, terms)
        got = convergent_types(cf)
        want = [classify_type(f) for f in convergents(cf)]
        c.eq(cf, "convergent types", want, got)
    return c.result()


def _cor53(total: int) -> Chunk:
    c = _Checker()
    for terms in _cf_terms(total):
        cf = ContinuedFraction(0, terms)
        c.eq(cf, "closed form = last sign", sign_sequence(cf)[-1], top_sign_closed_form(cf))
    return c.result()


# friezes and Schubert

def _frieze_max(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        f = frieze_of(a)
        cells = max_cells(f)
        c.eq(a, "max entry = q", q, f.value(*cells[0]))
        nums = sorted(b.num for b in orbit_set(a))
        for r, x in cells:
            c.eq(a, "neighbors of max = orbit numerators", nums, sorted(set(corners(f, r, x).values())))
    return c.result()


def _frieze_orbit(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        f = frieze_of(a)
        for b in (op_i(a), op_r(a), op_ir(a)):
            c.eq(a, f"frieze of {b} equivalent", True, friezes_equivalent(f, frieze_of(b)))
    return c.result()


def _thm32(q: int) -> Chunk:
    c = _Checker()
    orbits = {frozenset(k.members) for k in orbit_partition(q)}
    congr = {frozenset(k.members) for k in schubert_partition(q)}
    c.eq(Fraction(1, q), "orbit partition = Schubert partition", sorted(map(sorted, congr)), sorted(map(sorted, orbits)))
    for a in _fractions(q):
        p = a.num
        mirror = {b.num for b in (op_i(a), op_ir(a))}
        congruent = {pp for pp in _numerators(q) if (p * pp + 1) % q == 0 or (p + pp) % q == 0}
        c.eq(a, "mirror members = pp' = -1 or p' = -p", congruent, mirror)
    return c.result()


# brackets, writhes and Jones

ORACLE_MAX_CROSSINGS = 14


def _oracle_bracket(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        # the state sum is exponential in the crossing number sum(a_i)
        if sum(cf_expand(a).terms) > ORACLE_MAX_CROSSINGS:
            continue
        for parity in ("even", "odd"):
            c.eq(a, f"state sum = twist recursion ({parity})",
                 bracket_of_denominator(a, parity), oracle_bracket(a, parity))
    return c.result()


def _oracle_writhe(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        for parity in ("even", "odd"):
            c.eq(a, f"oriented writhe = sign recursion ({parity})",
                 writhe_principal(a, parity), oracle_writhe(a, "Principal", parity))
        if q % 2 == 0:
            c.eq(a, "oriented +- writhe = -wr(i a)", writhe_plus_minus(a), oracle_writhe(a, "PlusMinus"))
            c.eq(a, "reversing both keeps writhe", oracle_writhe(a), oracle_writhe(a, "MinusMinus"))
    return c.result()


def _writhe_parity(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        c.eq(a, "writhe parity independent", writhe_principal(a, "even"), writhe_principal(a, "odd"))
    return c.result()


def _lemma41(q: int) -> Chunk:
    c = _Checker()
    if q % 2:
        return c.result()
    for a in _fractions(q):
        b = op_ir(a)
        if count_even_terms(cf_expand(a, "even")) % 2 == 0:
            c.eq(a, "wr+-(a) = -wr(ir a)", -_wr(b), writhe_plus_minus(a))
            c.eq(a, "wr(a) = -wr+-(ir a)", -writhe_plus_minus(b), _wr(a))
        else:
            c.eq(a, "wr+-(a) = -wr+-(ir a)", -writhe_plus_minus(b), writhe_plus_minus(a))
            c.eq(a, "wr(a) = -wr(ir a)", -_wr(b), _wr(a))
        c.eq(a, "wr(a) = -wr+-(i a)", -writhe_plus_minus(op_i(a)), _wr(a))
    return c.result()


def _lemma42(q: int) -> Chunk:
    c = _Checker()
    if q % 2 == 0:
        return c.result()
    for a in _fractions(q):
        # reversing the orientation of a knot diagram of T(a) gives the mirror of T(ir a),
        # so the writhes are opposite; equality would force wr = 0 whenever i(a) = ir(a)
        c.eq(a, "wr(a) = -wr(ir a)", _wr(a), -_wr(op_ir(a)))
        c.eq(a, "wr(a) = -wr(i a)", _wr(a), -_wr(op_i(a)))
    return c.result()


def _lemma45(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        i, r, ir = op_i(a), op_r(a), op_ir(a)
        ew = extended_weight
        c.eq(a, "weight parity independent", weight(a), _weight_other(a))
        case = jones_case(a)
        if case == "q odd":
            c.eq(a, "wt~(i a), wt~(ir a)", (-ew(a), -ew(a)), (ew(i), ew(ir)))
            c.eq(a, "wt~(r a)", ew(a), ew(r))
            continue
        ew_pm = -writhe_plus_minus(a) - weight(a)
        if case == "q,x even":
            c.eq(a, "wt~(i a), wt~(ir a)", (-ew_pm, -ew_pm), (ew(i), ew(ir)))
            c.eq(a, "wt~(r a)", ew(a), ew(r))
        else:
            c.eq(a, "wt~(i a)", -ew_pm, ew(i))
            c.eq(a, "wt~(ir a)", -ew(a), ew(ir))
            c.eq(a, "wt~(r a)", ew_pm, ew(r))
    return c.result()


def _weight_other(a: Fraction) -> int:
    cf = cf_expand(a, "odd" if cf_expand(a).n % 2 == 0 else "even")
    total = sum(x if k % 2 == 0 else -x for k, x in enumerate(cf.as_list()))
    return total + (2 if cf.n % 2 else 0)


def _eq416(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        g = _gamma(a)
        want = (g.conjugate(), g, g.conjugate())
        c.eq(a, "(<G i a>, <G r a>, <G ir a>)", want, (_gamma(op_i(a)), _gamma(op_r(a)), _gamma(op_ir(a))))
    return c.result()


def _thm46(q: int) -> Chunk:
    c = _Checker()
    V = jones_link_route
    for a in _fractions(q):
        i, r, ir = op_i(a), op_r(a), op_ir(a)
        va = V(a)
        bar = va.conjugate()
        case = jones_case(a)
        if case == "q odd":
            c.eq(a, "V(i a) = V(ir a) = conj V(a)", (bar, bar), (V(i), V(ir)))
            c.eq(a, "V(r a) = V(a)", va, V(r))
            continue
        shift = minus_a_cubed_pow(-_wr(a) - _wr(i))
        if case == "q,x even":
            c.eq(a, "V(i a) = V(ir a) = (-A^3)^k conj V(a)", (shift * bar, shift * bar), (V(i), V(ir)))
            c.eq(a, "V(r a) = V(a)", va, V(r))
        else:
            c.eq(a, "V(i a) = (-A^3)^k conj V(a)", shift * bar, V(i))
            c.eq(a, "V(ir a) = conj V(a)", bar, V(ir))
            c.eq(a, "V(r a) = (-A^3)^-k V(a)", minus_a_cubed_pow(_wr(a) + _wr(i)) * va, V(r))
    return c.result()


def _cor48(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        if a.num > min(b.num for b in orbit_set(a)):
            continue  # each orbit once, from its smallest member
        base = jones_class_of(a)
        for b in (op_i(a), op_r(a), op_ir(a)):
            other = jones_class_of(b)
            c.eq(a, f"class from {b}", (base.case, base.members), (other.case, other.members))
    return c.result()


def _dual_jones(q: int) -> Chunk:
    c = _Checker()
    for a in _fractions(q):
        c.eq(a, "frieze route = link route", jones_link_route(a), jones_frieze_route(a))
    return c.result()


@dataclass(frozen=True)
class Suite:
    name: str
    chunk: Callable[[int], Chunk]
    default_bound: int
    description: str
    min_item: int = 2
    fixed_bound: bool = False  # the bound is a term sum, not a denominator


SUITES: dict[str, Suite] = {s.name: s for s in (
    Suite("lemma15", _lemma15, 1000, "parents, cf round trips and the N0 parity rule"),
    Suite("lemma12", _lemma12, 500, "word-level i, r, ir match the fraction-level maps"),
    Suite("lemma14", _lemma14, 1000, "continued-fraction closed forms of i, r, ir"),
    Suite("convergent-types", _convergent_types, 18, "mod-2 recurrence vs direct parity types",
          min_item=1, fixed_bound=True),
    Suite("frieze-max", _frieze_max, 200, "maximum entry q surrounded by the orbit numerators"),
    Suite("frieze-orbit", _frieze_orbit, 100, "the four orbit members give equivalent friezes"),
    Suite("thm32", _thm32, 500, "orbit partition equals the Schubert-with-mirror partition"),
    Suite("oracle-bracket", _oracle_bracket, 60, "state-sum bracket equals the twist recursion"),
    Suite("oracle-writhe", _oracle_writhe, 60, "oriented crossing signs equal the sign recursion"),
    Suite("writhe-parity", _writhe_parity, 500, "writhe independent of expansion parity"),
    Suite("lemma41", _lemma41, 300, "writhe relations under reversal of one component"),
    Suite("lemma42", _lemma42, 500, "writhe relations for knots"),
    Suite("lemma45", _lemma45, 300, "extended weight relations in the three cases"),
    Suite("cor53", _cor53, 18, "closed form of the last sign", min_item=1, fixed_bound=True),
    Suite("eq416", _eq416, 200, "frieze bracket quadruple (g, conj g, g, conj g)"),
    Suite("thm46", _thm46, 300, "Jones relations across the orbit"),
    Suite("cor48", _cor48, 300, "frieze Jones class independent of the orbit member"),
    Suite("dual-jones", _dual_jones, 200, "frieze route and link route give the same Jones polynomial"),
    Suite("exceptional-pairs", lambda _: (0, []), 0, "the four listed knot pairs"),
)}
ALIASES = {"thm36": "eq416"}


def resolve(name: str) -> Suite:
    name = ALIASES.get(name, name)
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted([*SUITES, *ALIASES]))}")
    return SUITES[name]


def _run_chunk(args: tuple[str, int]) -> Chunk:
    name, item = args
    return SUITES[name].chunk(item)


def _exceptional() -> SuiteResult:
    t0 = time.perf_counter()
    res = SuiteResult("exceptional-pairs", 0)
    rep = exceptional_pairs_report()
    for pr in rep["pairs"]:
        res.checked += 1
        if not pr.confirmed:
            res.failed += 1
            res.witnesses.append(Witness(f"{pr.alpha},{pr.beta}", "Jones related up to t <-> 1/t",
                                         "equal or conjugate", str(pr.relation)))
        else:
            res.notes.append(f"pair {pr.alpha} {pr.beta}: {pr.relation}, monomial {pr.ratio}")
    for key, d in rep["displays"].items():
        res.checked += 1
        if not d["match"]:
            res.failed += 1
            res.witnesses.append(Witness(key, "display around the maximum", str(d["shown"]), str(d["computed"])))
    for flag in rep["flags"]:
        res.notes.append(f"flagged: {flag['listed']} listed, {flag['displayed']} displayed; "
                         f"same orbit = {flag['same_orbit']}")
    res.seconds = time.perf_counter() - t0
    return res


def run_suite(name: str, bound: int | None = None, jobs: int = 1) -> SuiteResult:
    suite = resolve(name)
    if suite.name == "exceptional-pairs":
        return _exceptional()
    if bound is None or suite.fixed_bound:
        bound = suite.default_bound
    res = SuiteResult(suite.name, bound)
    if suite.fixed_bound:
        res.notes.append(f"bound is the sum of partial quotients ({bound}); --max-q does not apply")
    items = [(suite.name, k) for k in range(suite.min_item, bound + 1)]
    t0 = time.perf_counter()
    fails: list[tuple[str, str, str, str]] = []
    try:
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                chunks = pool.map(_run_chunk, items, chunksize=max(1, len(items) // (8 * jobs)))
                for checked, f in chunks:
                    res.checked += checked
                    fails.extend(f)
        else:
            for item in items:
                checked, f = _run_chunk(item)
                res.checked += checked
                fails.extend(f)
    except KeyboardInterrupt:
        res.complete = False
        res.notes.append("interrupted; counts are partial")
    res.failed = len(fails)
    res.witnesses = [Witness(*w) for w in sorted(fails)[:MAX_WITNESSES]]
    res.seconds = time.perf_counter() - t0
    return res


def run_sweeps(names: Iterable[str] | None = None, bound: int | None = None, jobs: int = 1) -> SweepReport:
    report = SweepReport()
    for name in names or SUITES:
        report.suites.append(run_suite(name, bound, jobs))
        if not report.suites[-1].complete:
            break
    return report
