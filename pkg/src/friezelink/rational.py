"""Exact fractions, Farey structure and continued fractions.

Fractions follow the convention that the denominator is never negative and
that ``1/0`` is the unique fraction with zero denominator.  Continued
fractions are written ``[a0, a1, ..., an]`` and ``n`` always means the
number of partial quotients after ``a0``: ``[0, 2, 1, 2]`` has ``n == 3``.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd
from typing import Literal

from .errors import (
    InfiniteInput,
    NegativeInput,
    NoParents,
    NotNeighbors,
    OutOfRange,
    ZeroOverZero,
)

Parity = Literal["even", "odd", "any"]


@dataclass(frozen=True, order=False)
class Fraction:
    """An irreducible fraction ``num/den`` with ``den >= 0``."""

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError(f"negative denominator in {self.num}/{self.den}")
        if self.den == 0 and self.num != 1:
            raise ValueError("the only fraction with zero denominator is 1/0")
        if gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not reduced")

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"Fraction({self.num}, {self.den})"

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def in_unit_interval(self) -> bool:
        """True iff 0 < self < 1."""
        return self.den > 0 and 0 < self.num < self.den

    def __lt__(self, other: Fraction) -> bool:
        # cross-multiplication is valid for den >= 0 and orders 1/0 last
        return self.num * other.den < other.num * self.den

    def __le__(self, other: Fraction) -> bool:
        return self == other or self < other

    def __gt__(self, other: Fraction) -> bool:
        return other < self

    def __ge__(self, other: Fraction) -> bool:
        return other <= self


def make_fraction(p: int, q: int, signed: bool = False) -> Fraction:
    """Reduce ``p/q``.

    With ``signed=False`` negative inputs are rejected; with ``signed=True``
    the sign is moved into the numerator.
    """
    if p == 0 and q == 0:
        raise ZeroOverZero("0/0 is not a fraction")
    if not signed and (p < 0 or q < 0):
        raise NegativeInput(f"negative input {p}/{q}")
    if q < 0:
        p, q = -p, -q
    if q == 0:
        return Fraction(1, 0)
    g = gcd(p, q)
    return Fraction(p // g, q // g)


_FRACTION_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` (whitespace allowed) or a bare integer."""
    m = _FRACTION_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse fraction {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return make_fraction(p, q, signed=True)


def is_farey_neighbor(left: Fraction, right: Fraction) -> bool:
    return left.den * right.num - left.num * right.den == 1


def farey_sum(left: Fraction, right: Fraction) -> Fraction:
    """The mediant of two Farey neighbours; it is automatically reduced."""
    if not is_farey_neighbor(left, right):
        raise NotNeighbors(f"{left} and {right} are not Farey neighbours")
    return Fraction(left.num + right.num, left.den + right.den)


def parents(alpha: Fraction) -> tuple[Fraction, Fraction]:
    """The unique Farey-neighbour pair ``(left, right)`` whose mediant is ``alpha``."""
    p, q = alpha.num, alpha.den
    if q == 0 or p == 0:
        raise NoParents(f"{alpha} has no parents")
    if q == 1:
        return Fraction(p - 1, 1), Fraction(1, 0)
    # left parent x/r satisfies r*p - x*q = 1 with 0 < r < q
    r = pow(p, -1, q)
    x = (r * p - 1) // q
    return Fraction(x, r), Fraction(p - x, q - r)


@dataclass(frozen=True)
class ContinuedFraction:
    """``[a0, a1, ..., an]`` with ``a0`` any integer and ``a1..an >= 1``."""

    a0: int
    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if any(a < 1 for a in self.terms):
            raise ValueError(f"partial quotients must be positive: {self.terms}")

    @classmethod
    def of(cls, *entries: int) -> ContinuedFraction:
        """Build from the flat list ``a0, a1, ..., an``."""
        return cls(entries[0], tuple(entries[1:]))

    @property
    def n(self) -> int:
        return len(self.terms)

    def as_list(self) -> list[int]:
        return [self.a0, *self.terms]

    def __str__(self) -> str:
        return "[" + ", ".join(str(a) for a in self.as_list()) + "]"

    def value(self) -> Fraction:
        return cf_value(self)


def _euclid(p: int, q: int) -> list[int]:
    out = []
    while q:
        a = p // q
        out.append(a)
        p, q = q, p - a * q
    return out


def _flip_parity(entries: list[int]) -> list[int]:
    if len(entries) == 1:
        return [entries[0] - 1, 1]
    if entries[-1] >= 2:
        return [*entries[:-1], entries[-1] - 1, 1]
    # last term is 1: fold it into the previous one
    return [*entries[:-2], entries[-2] + 1]


def cf_expand(alpha: Fraction, parity: Parity = "any") -> ContinuedFraction:
    """Continued fraction of ``alpha`` with the requested parity of ``n``.

    ``"any"`` returns the Euclidean expansion, whose last term is at least 2
    whenever ``alpha`` is not an integer.
    """
    if alpha.den == 0:
        raise InfiniteInput("1/0 has no finite continued fraction")
    entries = _euclid(alpha.num, alpha.den)
    n = len(entries) - 1
    if parity == "even" and n % 2 == 1 or parity == "odd" and n % 2 == 0:
        entries = _flip_parity(entries)
    elif parity not in ("even", "odd", "any"):
        raise ValueError(f"unknown parity {parity!r}")
    return ContinuedFraction(entries[0], tuple(entries[1:]))


def cf_value(cf: ContinuedFraction) -> Fraction:
    """Evaluate by back substitution (exact)."""
    # numerator/denominator of the tail, starting from 1/0
    p, q = 1, 0
    for a in reversed(cf.terms):
        p, q = a * p + q, p
    # value = a0 + q/p
    return make_fraction(cf.a0 * p + q, p, signed=True)


def normalize_terms(a0: int, terms: list[int]) -> ContinuedFraction:
    """Remove zero partial quotients via ``[..., a, 0, b, ...] = [..., a + b, ...]``.

    A trailing zero is dropped together with its predecessor
    (``[..., a, 0] = [..., a]`` would change the value, so it is rejected).
    """
    entries = [a0, *terms]
    i = 1
    while i < len(entries):
        if entries[i] == 0:
            if i == len(entries) - 1:
                raise ValueError("trailing zero partial quotient")
            merged = entries[i - 1] + entries[i + 1]
            entries[i - 1 : i + 2] = [merged]
            i = max(i - 1, 1)
        else:
            i += 1
    return ContinuedFraction(entries[0], tuple(entries[1:]))


class ParityType(enum.Enum):
    """The type of a fraction: the pair (numerator mod 2, denominator mod 2)."""

    ONE_ONE = (1, 1)
    ONE_ZERO = (1, 0)
    ZERO_ONE = (0, 1)

    @property
    def n(self) -> int:
        return self.value[0]

    @property
    def d(self) -> int:
        return self.value[1]

    @classmethod
    def from_bits(cls, n: int, d: int) -> ParityType:
        return cls((n % 2, d % 2))

    def __str__(self) -> str:
        return f"{self.n}/{self.d}"


def classify_type(alpha: Fraction) -> ParityType:
    return ParityType.from_bits(alpha.num, alpha.den)


def count_even_terms(cf: ContinuedFraction) -> int:
    return sum(1 for a in cf.terms if a % 2 == 0)


def convergent_types(cf: ContinuedFraction) -> list[ParityType]:
    """Types of the convergents ``[0, a1..ai]`` for ``i = 1..n``, by the mod-2 recurrence."""
    if cf.a0 != 0:
        raise OutOfRange("convergent_types expects a0 == 0")
    # seeds: alpha_{-1} = 1/0, alpha_0 = 0/1
    n2, d2 = 1, 0
    n1, d1 = 0, 1
    out = []
    for a in cf.terms:
        odd = a % 2
        n0 = (n2 + odd * n1) % 2
        d0 = (d2 + odd * d1) % 2
        out.append(ParityType.from_bits(n0, d0))
        n2, d2, n1, d1 = n1, d1, n0, d0
    return out


def convergents(cf: ContinuedFraction) -> list[Fraction]:
    """Exact convergents ``[a0, a1..ai]`` for ``i = 1..n``."""
    p2, q2 = 1, 0
    p1, q1 = cf.a0, 1
    out = []
    for a in cf.terms:
        p0, q0 = a * p1 + p2, a * q1 + q2
        out.append(make_fraction(p0, q0, signed=True))
        p2, q2, p1, q1 = p1, q1, p0, q0
    return out


def require_unit_interval(alpha: Fraction) -> None:
    if not alpha.in_unit_interval():
        raise OutOfRange(f"{alpha} is not in the open interval (0, 1)")


def coprime_fractions(max_q: int, min_q: int = 2, only_odd: bool = False, only_even: bool = False):
    """Yield every ``p/q`` in (0, 1) with ``min_q <= q <= max_q``, ordered by ``(q, p)``."""
    for q in range(max(min_q, 2), max_q + 1):
        if only_odd and q % 2 == 0 or only_even and q % 2 == 1:
            continue
        for p in range(1, q):
            if gcd(p, q) == 1:
                yield Fraction(p, q)
