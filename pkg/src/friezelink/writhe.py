"""Writhe of rational links from continued fractions alone.

Each partial quotient ``a_j`` of ``alpha = [0, a1, ..., an]`` is a twist
region of ``a_j`` crossings, all of the same sign ``t_j``.  Then

    wr(alpha) = -sum_j t_j * a_j.

The signs are computed by recursion on the truncations
``alpha_j = [0, a1, ..., aj]`` with ``alpha_0 = 0/1``, choosing the update by
the parity types of ``alpha_{n-2}`` and ``alpha_{n-1}``.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import NotTwoComponent
from .lrwords import op_i
from .rational import (
    ContinuedFraction,
    Fraction,
    ParityType,
    cf_expand,
    convergent_types,
    require_unit_interval,
)

OO = ParityType.ONE_ONE
OZ = ParityType.ONE_ZERO
ZO = ParityType.ZERO_ONE


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


@lru_cache(maxsize=65536)
def _signs(terms: tuple[int, ...]) -> tuple[int, ...]:
    n = len(terms)
    if n == 1:
        # 1/a1 is of type 1/1 exactly when a1 is odd
        return (_sign(terms[0] + 1),)
    if n == 2:
        a1, a2 = terms
        return (_sign(a1 * a2 + a2 + 1), _sign(a1))

    types = [ZO, *convergent_types(ContinuedFraction(0, terms))]
    t2, t1 = types[n - 2], types[n - 1]
    an, an1 = terms[n - 1], terms[n - 2]
    # denominator parities d(alpha_j) for j = 0..n
    d = [t.d for t in types]
    prev = _signs(terms[:-1])
    pp = _signs(terms[:-2])

    if (t2, t1) == (OO, OZ):
        head = [_sign(d[j - 1] * (an - 1)) * prev[j - 1] for j in range(1, n)]
        return (*head, prev[-1])
    if (t2, t1) == (ZO, OZ):
        head = [_sign(d[j - 1] * an) * prev[j - 1] for j in range(1, n)]
        return (*head, -prev[-1])
    if (t2, t1) == (OZ, ZO):
        if an % 2 == 0:
            return (*prev, -prev[-1])
        head = [_sign(d[j - 1]) * pp[j - 1] for j in range(1, n - 1)]
        top = _sign(an1 - 1) * pp[-1]
        return (*head, top, top)
    if (t2, t1) == (OO, ZO):
        if an % 2:
            return (*prev, prev[-1])
        top = _sign(an1) * pp[-1]
        return (*pp, top, top)
    if t1 == OO:
        top = _sign(an1) * pp[-1]
        return (*pp, top, top)
    raise AssertionError(f"impossible consecutive types {t2}, {t1}")


def sign_sequence(cf: ContinuedFraction | Fraction) -> tuple[int, ...]:
    """Signs ``(t_1, ..., t_n)`` of the twist regions of ``[0, a1, ..., an]``."""
    if isinstance(cf, Fraction):
        require_unit_interval(cf)
        cf = cf_expand(cf)
    if cf.a0 != 0 or cf.n == 0:
        raise ValueError(f"expected [0, a1, ..., an] with n >= 1, got {cf}")
    require_unit_interval(cf.value())
    return _signs(tuple(cf.terms))


def top_sign_closed_form(cf: ContinuedFraction) -> int:
    """Closed form for the last sign from the types of the last two truncations:
    ``(-1)^((d_n + 1) n_{n-1} + d_n d_{n-1} + n)`` with ``n_j, d_j`` the parities
    of ``alpha_j``."""
    if cf.a0 != 0 or cf.n == 0:
        raise ValueError(f"expected [0, a1, ..., an] with n >= 1, got {cf}")
    require_unit_interval(cf.value())
    types = [ZO, *convergent_types(cf)]
    last, before = types[cf.n], types[cf.n - 1]
    return _sign((last.d + 1) * before.n + last.d * before.d + cf.n)


def writhe_from_signs(cf: ContinuedFraction) -> int:
    return -sum(t * a for t, a in zip(sign_sequence(cf), cf.terms))


def writhe_principal(alpha: Fraction, parity: str = "any") -> int:
    require_unit_interval(alpha)
    return writhe_from_signs(cf_expand(alpha, parity))


def writhe_plus_minus(alpha: Fraction) -> int:
    """Writhe after reversing one component of a two-component link."""
    require_unit_interval(alpha)
    if alpha.den % 2:
        raise NotTwoComponent(f"{alpha} has odd denominator, so its closure is a knot")
    return -writhe_principal(op_i(alpha))
