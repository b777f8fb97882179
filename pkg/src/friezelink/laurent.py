"""Integer Laurent polynomials in a single variable.

The variable is either ``A`` (the Kauffman bracket variable) or ``S``,
standing for ``t^(1/2)``.  The two are related by ``S = A^-2``.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .errors import OddExponent, VariableMismatch

VAR_A = "A"
VAR_S = "t^(1/2)"


class LaurentPoly:
    """Immutable polynomial stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("_terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = VAR_A):
        if var not in (VAR_A, VAR_S):
            raise ValueError(f"unknown variable {var!r}")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in acc.items() if c}
        self.var = var

    @classmethod
    def _clean(cls, terms: dict[int, int], var: str) -> LaurentPoly:
        """Wrap a dict that already has integer keys and no zero values."""
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.var = var
        return obj

    # construction helpers
    @classmethod
    def const(cls, c: int, var: str = VAR_A) -> LaurentPoly:
        return cls({0: c}, var)

    @classmethod
    def mono(cls, e: int, c: int = 1, var: str = VAR_A) -> LaurentPoly:
        return cls({e: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise VariableMismatch(f"cannot combine {self.var} with {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            v = acc.get(e, 0) + c
            if v:
                acc[e] = v
            else:
                del acc[e]
        return LaurentPoly._clean(acc, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._clean({e: -c for e, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) == 1:
            ((k, c),) = other._terms.items()
            return LaurentPoly._clean({e + k: v * c for e, v in self._terms.items()}, self.var)
        if len(self._terms) == 1:
            return other * self
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly._clean({e: c for e, c in acc.items() if c}, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be raised to negative powers")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible")
            return LaurentPoly({e * k: c ** (-k)}, self.var)
        result = LaurentPoly.const(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``var^k``."""
        return LaurentPoly._clean({e + k: c for e, c in self._terms.items()}, self.var)

    def conjugate(self) -> LaurentPoly:
        return LaurentPoly._clean({-e: c for e, c in self._terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        return hash((self.var, frozenset(self._terms.items())))

    def sort_key(self) -> tuple:
        return (self.var, tuple(sorted(self._terms.items())))

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self._terms.items()))!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in sorted(self._terms.items(), reverse=True)]}

    @classmethod
    def from_json(cls, data: dict | str) -> LaurentPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls([(e, c) for e, c in data["terms"]], data["var"])


def conjugate(p: LaurentPoly) -> LaurentPoly:
    return p.conjugate()


A = LaurentPoly.mono(1)
ONE = LaurentPoly.const(1)
DELTA = LaurentPoly({2: -1, -2: -1})


def minus_a_cubed_pow(k: int) -> LaurentPoly:
    """``(-A^3)^k`` for any integer ``k``."""
    return LaurentPoly.mono(3 * k, -1 if k % 2 else 1)


def to_t_half(p: LaurentPoly) -> LaurentPoly:
    """Substitute ``A = t^(-1/4)``; the result is a polynomial in ``t^(1/2)``."""
    if p.var != VAR_A:
        raise VariableMismatch("to_t_half expects a polynomial in A")
    out = {}
    for e, c in p.items():
        if e % 2:
            raise OddExponent(f"odd exponent A^{e}")
        out[-e // 2] = c
    return LaurentPoly(out, VAR_S)


def from_t_half(p: LaurentPoly) -> LaurentPoly:
    if p.var != VAR_S:
        raise VariableMismatch("from_t_half expects a polynomial in t^(1/2)")
    return LaurentPoly({-2 * e: c for e, c in p.items()}, VAR_A)


def t_poly(terms: Mapping[int, int], prefactor_half: int = 0) -> LaurentPoly:
    """Polynomial in ``t^(1/2)`` from integer powers of ``t`` times ``t^(prefactor_half/2)``."""
    return LaurentPoly({2 * e + prefactor_half: c for e, c in terms.items()}, VAR_S)


def _power_text(var: str, e: int) -> str:
    if var == VAR_S:
        return _half_text(e)
    return var if e == 1 else f"{var}^{e}" if e >= 0 else f"{var}^({e})"


def _join(terms: list[tuple[int, int]], var: str) -> str:
    parts = []
    for i, (e, c) in enumerate(terms):
        mag = abs(c)
        if e == 0:
            body = str(mag)
        elif mag == 1:
            body = _power_text(var, e)
        else:
            body = f"{mag}*{_power_text(var, e)}"
        if i == 0:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(parts) if parts else "0"


def format_poly(p: LaurentPoly) -> str:
    """Plain text in descending exponent order, e.g. ``-A^4 - A^(-4)``."""
    return _join(sorted(p.items(), reverse=True), p.var)


def _half_text(h: int) -> str:
    if h % 2 == 0:
        k = h // 2
        return "t" if k == 1 else f"t^{k}" if k > 0 else f"t^({k})"
    return f"t^({h}/2)"


def format_t(p: LaurentPoly, prefactor: int | None = None) -> str:
    """Render a ``t^(1/2)`` polynomial as a prefactor ``t^(h/2)`` times a polynomial in ``t``.

    All exponents of ``p`` share one parity, so a half-integer prefactor
    leaves integer powers of ``t``.  By default the prefactor is chosen so
    that the bracketed polynomial is as balanced as possible around ``t^0``.
    """
    if p.var != VAR_S:
        raise VariableMismatch("format_t expects a polynomial in t^(1/2)")
    if p.is_zero():
        return "0"
    exps = list(p.terms)
    parity = exps[0] % 2
    if any(e % 2 != parity for e in exps):
        return _join(sorted(p.items(), reverse=True), VAR_S)
    if prefactor is None:
        lo, hi = min(exps), max(exps)
        mid = (lo + hi) // 2
        # nearest exponent of the right parity, rounding towards the top
        prefactor = mid if mid % 2 == parity else mid + 1
    elif prefactor % 2 != parity:
        raise ValueError("prefactor parity does not match the polynomial")
    inner = sorted(((e - prefactor) // 2, c) for e, c in p.items())
    body = _join(inner[::-1], "t")
    if prefactor == 0:
        return body
    return f"{_half_text(prefactor)}({body})"
