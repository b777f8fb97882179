"""LR words and the involutions i, r and ir.

A word over ``{L, R}`` records how a fraction in (0, 1) is reached from 1/2
by repeatedly taking Farey sums: the first letter is the last step taken.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rational import (
    ContinuedFraction,
    Fraction,
    cf_expand,
    normalize_terms,
    parents,
    require_unit_interval,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LRWord:
    letters: str = ""

    def __post_init__(self):
        bad = set(self.letters) - {"L", "R"}
        if bad:
            raise ValueError(f"LR words use only L and R, got {sorted(bad)}")

    def __str__(self) -> str:
        return self.letters

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def swapped(self) -> LRWord:
        return LRWord(self.letters.translate(str.maketrans("LR", "RL")))

    def reversed(self) -> LRWord:
        return LRWord(self.letters[::-1])

    def count(self, letter: str) -> int:
        return self.letters.count(letter)


def as_word(w: LRWord | str) -> LRWord:
    return w if isinstance(w, LRWord) else LRWord(w)


def word_of(alpha: Fraction) -> LRWord:
    require_unit_interval(alpha)
    out = []
    while alpha != HALF:
        left, right = parents(alpha)
        # step towards the parent with the larger denominator
        if left.den < right.den:
            out.append("L")
            alpha = right
        else:
            out.append("R")
            alpha = left
    return LRWord("".join(out))


def alpha_of(word: LRWord | str) -> Fraction:
    word = as_word(word)
    lo, hi = Fraction(0, 1), Fraction(1, 1)
    node = HALF
    for letter in reversed(word.letters):
        if letter == "L":
            hi = node
        else:
            lo = node
        node = Fraction(lo.num + hi.num, lo.den + hi.den)
    return node


def op_i(alpha: Fraction) -> Fraction:
    require_unit_interval(alpha)
    return Fraction(alpha.den - alpha.num, alpha.den)


def op_r(alpha: Fraction) -> Fraction:
    """Reversal of the LR word: the denominator of the left parent over ``q``."""
    require_unit_interval(alpha)
    left, _ = parents(alpha)
    return Fraction(left.den, alpha.den)


def op_ir(alpha: Fraction) -> Fraction:
    require_unit_interval(alpha)
    _, right = parents(alpha)
    return Fraction(right.den, alpha.den)


def orbit(alpha: Fraction) -> dict[str, Fraction]:
    """The images of ``alpha`` keyed by ``"id"``, ``"i"``, ``"r"``, ``"ir"``."""
    return {"id": alpha, "i": op_i(alpha), "r": op_r(alpha), "ir": op_ir(alpha)}


def orbit_set(alpha: Fraction) -> frozenset[Fraction]:
    return frozenset(orbit(alpha).values())


def orbit_representative(alpha: Fraction) -> Fraction:
    """Member of the orbit with the smallest numerator (numerators are distinct)."""
    return min(orbit_set(alpha), key=lambda f: f.num)


def cf_of_images(
    alpha: Fraction, cf: ContinuedFraction | None = None
) -> tuple[ContinuedFraction, ContinuedFraction, ContinuedFraction]:
    """Closed-form expansions of ``(i(alpha), r(alpha), ir(alpha))``.

    The image under ``i`` is read off ``cf`` (the canonical expansion by
    default); the reversal formulas need an even number of terms, so they
    always use the even expansion.
    """
    require_unit_interval(alpha)
    if cf is None:
        cf = cf_expand(alpha)
    elif cf.value() != alpha:
        raise ValueError(f"{cf} does not evaluate to {alpha}")
    a = list(cf.terms)
    img_i = normalize_terms(0, [1, a[0] - 1, *a[1:]])
    rev = list(cf_expand(alpha, "even").terms)[::-1]
    img_r = normalize_terms(0, [1, rev[0] - 1, *rev[1:]])
    img_ir = ContinuedFraction(0, tuple(rev))
    return img_i, img_r, img_ir
