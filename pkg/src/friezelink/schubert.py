"""Schubert's classification of two-bridge links and its orbit form.

Unoriented: ``D(p/q)`` and ``D(p'/q)`` are isotopic iff ``pp' = 1`` or
``p = p'`` mod ``q``.  Allowing mirror images adds ``pp' = -1`` and
``p = -p'``.  The classes so obtained are exactly the orbits of
``{alpha, i(alpha), r(alpha), ir(alpha)}``, one per frieze of denominator ``q``.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import gcd

from .errors import InvalidQ
from .lrwords import orbit_set
from .rational import Fraction, require_unit_interval


@dataclass(frozen=True)
class LinkClass:
    q: int
    members: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> int:
        return min(self.members)

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def schubert_equivalent_unoriented(alpha: Fraction, beta: Fraction) -> bool:
    if alpha.den != beta.den:
        return False
    q, p, pp = alpha.den, alpha.num, beta.num
    return (p * pp - 1) % q == 0 or (p - pp) % q == 0


def mirror_related(alpha: Fraction, beta: Fraction) -> bool:
    """``beta`` is a Schubert partner of the mirror image of ``alpha``."""
    if alpha.den != beta.den:
        return False
    q, p, pp = alpha.den, alpha.num, beta.num
    return (p * pp + 1) % q == 0 or (p + pp) % q == 0


def schubert_with_mirror(alpha: Fraction, beta: Fraction) -> bool:
    return schubert_equivalent_unoriented(alpha, beta) or mirror_related(alpha, beta)


def oriented_congruence(alpha: Fraction, beta: Fraction) -> bool:
    """Partial oriented check: ``pp' = 1 mod 2q`` witnesses an oriented isotopy.

    Only this sufficient condition is offered; it does not decide oriented
    equivalence in general.
    """
    if alpha.den != beta.den:
        return False
    return (alpha.num * beta.num - 1) % (2 * alpha.den) == 0


def orbit_class(alpha: Fraction) -> LinkClass:
    require_unit_interval(alpha)
    return LinkClass(alpha.den, frozenset(f.num for f in orbit_set(alpha)))


def _coprime(q: int) -> list[int]:
    return [p for p in range(1, q) if gcd(p, q) == 1]


def orbit_partition(q: int) -> list[LinkClass]:
    if q < 2:
        raise InvalidQ(f"denominator must be at least 2, got {q}")
    seen: set[int] = set()
    out = []
    for p in _coprime(q):
        if p in seen:
            continue
        cls = orbit_class(Fraction(p, q))
        seen |= cls.members
        out.append(cls)
    return out


def schubert_partition(q: int) -> list[LinkClass]:
    """Partition by the congruences directly, via union-find on numerators."""
    if q < 2:
        raise InvalidQ(f"denominator must be at least 2, got {q}")
    nums = _coprime(q)
    parent = {p: p for p in nums}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in nums:
        inv = pow(p, -1, q)
        for other in (inv, q - inv, q - p):
            if other in parent:
                parent[find(p)] = find(other)
    groups: dict[int, set[int]] = {}
    for p in nums:
        groups.setdefault(find(p), set()).add(p)
    return sorted((LinkClass(q, frozenset(g)) for g in groups.values()), key=lambda c: c.representative)


def classify_denominator(q: int, check: bool = True) -> list[LinkClass]:
    """Classes of rational links with denominator ``q`` up to isotopy and mirror image."""
    orbits = sorted(orbit_partition(q), key=lambda c: c.representative)
    if check:
        if set(orbits) != set(schubert_partition(q)):
            raise AssertionError(f"orbit and congruence partitions differ for q = {q}")
    return orbits


def classes_to_csv(classes: list[LinkClass]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "members", "size", "representative"])
    for c in classes:
        w.writerow([c.q, " ".join(str(p) for p in c.sorted_members()), c.size, c.representative])
    return buf.getvalue()
