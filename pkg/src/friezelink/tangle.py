"""Kauffman bracket of rational tangles through skein-module coordinates.

A (2,2)-tangle diagram ``T`` has ``<T> = f <[0]> + g <[inf]>`` where ``[0]``
joins NW-NE and SW-SE by horizontal arcs and ``[inf]`` joins NW-SW and NE-SE
by vertical arcs.  The pair ``(f, g)`` is updated crossing by crossing:

* a horizontal twist adds a crossing on the right of ``T``;
* a vertical twist adds a crossing below ``T``.

Every crossing has the same handedness: the over-strand runs from NW to SE.
Its A-smoothing is then the horizontal tangle, so ``<x> = A <[0]> + A^-1 <[inf]>``.
Passing ``mirror=True`` uses the other handedness everywhere.

The denominator closure joins NW to SW and NE to SE; the numerator closure
joins NW to NE and SW to SE.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .laurent import DELTA, LaurentPoly
from .lrwords import LRWord, as_word
from .rational import ContinuedFraction, Fraction, cf_expand, require_unit_interval

Kind = Literal["H", "V"]


@dataclass(frozen=True)
class BracketPair:
    f: LaurentPoly
    g: LaurentPoly

    def denominator(self) -> LaurentPoly:
        # [0] closes to one circle, [inf] to two
        return self.f + DELTA * self.g

    def numerator(self) -> LaurentPoly:
        return DELTA * self.f + self.g


ZERO_TANGLE = BracketPair(LaurentPoly.const(1), LaurentPoly())
INF_TANGLE = BracketPair(LaurentPoly(), LaurentPoly.const(1))


@dataclass(frozen=True)
class TwistSequence:
    """The diagram recipe for a continued fraction ``[0, a1, ..., an]``.

    Starting from ``start`` (``[0]`` when ``n`` is even, ``[inf]`` when odd),
    the regions ``a_n, ..., a_1`` are added in that order; region ``j`` is a
    vertical twist when ``j`` is odd and a horizontal twist when ``j`` is even.
    """

    cf: ContinuedFraction
    start: Literal["0", "inf"]
    regions: tuple[tuple[Kind, int], ...]

    @property
    def crossings(self) -> int:
        return sum(k for _, k in self.regions)


def twist_sequence(cf: ContinuedFraction) -> TwistSequence:
    if cf.a0 != 0 or cf.n == 0:
        raise ValueError(f"expected [0, a1, ..., an] with n >= 1, got {cf}")
    start = "0" if cf.n % 2 == 0 else "inf"
    regions = []
    for j in range(cf.n, 0, -1):
        regions.append(("V" if j % 2 else "H", cf.terms[j - 1]))
    return TwistSequence(cf, start, tuple(regions))


def crossing_coeffs(mirror: bool = False) -> tuple[LaurentPoly, LaurentPoly]:
    """``(a, b)`` with ``<crossing> = a <[0]> + b <[inf]>``."""
    a, b = LaurentPoly.mono(1), LaurentPoly.mono(-1)
    return (b, a) if mirror else (a, b)


def _geometric_sum(x: LaurentPoly, y: LaurentPoly, k: int) -> LaurentPoly:
    """``sum_{i<k} x^i y^(k-1-i)``."""
    total = LaurentPoly()
    for i in range(k):
        total = total + (x**i) * (y ** (k - 1 - i))
    return total


def twist_h(pair: BracketPair, k: int, mirror: bool = False) -> BracketPair:
    """Add ``k`` crossings on the right."""
    a, b = crossing_coeffs(mirror)
    d = a + DELTA * b
    if k == 1:
        return BracketPair(a * pair.f, b * pair.f + d * pair.g)
    f = (a**k) * pair.f
    g = b * _geometric_sum(a, d, k) * pair.f + (d**k) * pair.g
    return BracketPair(f, g)


def twist_v(pair: BracketPair, k: int, mirror: bool = False) -> BracketPair:
    """Add ``k`` crossings below."""
    a, b = crossing_coeffs(mirror)
    e = a * DELTA + b
    if k == 1:
        return BracketPair(e * pair.f + a * pair.g, b * pair.g)
    g = (b**k) * pair.g
    f = (e**k) * pair.f + a * _geometric_sum(b, e, k) * pair.g
    return BracketPair(f, g)


def bracket_of_sequence(seq: TwistSequence, mirror: bool = False) -> BracketPair:
    pair = ZERO_TANGLE if seq.start == "0" else INF_TANGLE
    for kind, k in seq.regions:
        pair = twist_h(pair, k, mirror) if kind == "H" else twist_v(pair, k, mirror)
    return pair


def bracket_of_cf(cf: ContinuedFraction, mirror: bool = False) -> BracketPair:
    return bracket_of_sequence(twist_sequence(cf), mirror)


def bracket_of_tangle(alpha: Fraction, parity: str = "even", mirror: bool = False) -> BracketPair:
    require_unit_interval(alpha)
    return bracket_of_cf(cf_expand(alpha, parity), mirror)


def bracket_of_denominator(alpha: Fraction, parity: str = "even", mirror: bool = False) -> LaurentPoly:
    return bracket_of_tangle(alpha, parity, mirror).denominator()


def numerator_closure_bracket(alpha: Fraction, parity: str = "even", mirror: bool = False) -> LaurentPoly:
    return bracket_of_tangle(alpha, parity, mirror).numerator()


def bracket_of_word(w: LRWord | str, mirror: bool = False) -> BracketPair:
    """Tangle read off an LR word: one crossing, then ``R`` adds a crossing on the
    right and ``L`` one below, finishing with one more crossing below."""
    w = as_word(w)
    a, b = crossing_coeffs(mirror)
    pair = BracketPair(a, b)
    for letter in w:
        pair = twist_h(pair, 1, mirror) if letter == "R" else twist_v(pair, 1, mirror)
    return twist_v(pair, 1, mirror)
