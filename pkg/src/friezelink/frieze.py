"""Conway-Coxeter friezes of zigzag type.

Cells live on a staggered grid: row ``r`` (0 is the top row of 1s, ``m + 1``
the bottom row of 1s) holds entries at horizontal positions ``x`` of one
parity, and neighbouring rows use the other parity.  Every diamond

        b
     a     d
        c

with ``a = (r, x)``, ``d = (r, x + 2)``, ``b = (r - 1, x + 1)`` and
``c = (r + 1, x + 1)`` satisfies ``a*d - b*c = 1``.

A word of length ``k`` seeds ``k + 1`` interior 1s along a zigzag: the first
interior row starts at ``x = 0`` and each letter moves one row down, to the
left for ``L`` and to the right for ``R``.  The frieze then has ``m = k + 1``
interior rows and order ``m + 3``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Iterator

from .errors import NonPositive
from .lrwords import LRWord, as_word, word_of
from .rational import Fraction, require_unit_interval


@dataclass(frozen=True)
class Frieze:
    """One fundamental period of a frieze.

    ``rows[r][j]`` is the entry at ``(r, offsets[r] + 2*j)`` for
    ``0 <= j < order``; rows 0 and ``len(rows) - 1`` are all 1s.
    """

    order: int
    rows: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    word: LRWord | None = None

    @property
    def height(self) -> int:
        """Number of interior rows."""
        return len(self.rows) - 2

    def value(self, r: int, x: int) -> int:
        if r <= 0 or r >= len(self.rows) - 1:
            return 1
        delta = x - self.offsets[r]
        if delta % 2:
            raise KeyError(f"no cell at row {r}, position {x}")
        return self.rows[r][(delta // 2) % self.order]

    def has_cell(self, r: int, x: int) -> bool:
        return (x - self.offsets[r]) % 2 == 0

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Every interior cell of the stored period as ``(r, x, value)``."""
        for r in range(1, len(self.rows) - 1):
            for j, v in enumerate(self.rows[r]):
                yield r, self.offsets[r] + 2 * j, v

    def to_dict(self) -> dict:
        return {"order": self.order, "rows": [list(r) for r in self.rows], "offsets": list(self.offsets)}

    @classmethod
    def from_dict(cls, data: dict) -> Frieze:
        return cls(int(data["order"]), tuple(tuple(r) for r in data["rows"]), tuple(data["offsets"]))

    def __eq__(self, other):
        if not isinstance(other, Frieze):
            return NotImplemented
        return (self.order, self.rows, self.offsets) == (other.order, other.rows, other.offsets)

    def __hash__(self):
        return hash((self.order, self.rows, self.offsets))


def frieze_from_word(w: LRWord | str) -> Frieze:
    w = as_word(w)
    m = len(w) + 1
    order = m + 3

    # zigzag positions of the interior rows 1..m
    start = [0]
    for letter in w:
        start.append(start[-1] + (-1 if letter == "L" else 1))
    # vals[r][j] is the entry at (r, start[r - 1] + 2j); rows 0 and m + 1 are all 1s.
    # Sweeping x from left to right, the cell at x + 2 of a row whose last
    # known cell is at x only needs the neighbours at x + 1, already known.
    vals = [None] + [[1] for _ in range(m)] + [None]
    first = [None, *start, None]
    for x in range(min(start), max(start) + 2 * order):
        for k in range(1, m + 1):
            j, odd = divmod(x - first[k], 2)
            if odd or j < 0 or j >= order or len(vals[k]) != j + 1:
                continue
            b = 1 if k == 1 else vals[k - 1][(x + 1 - first[k - 1]) // 2]
            c = 1 if k == m else vals[k + 1][(x + 1 - first[k + 1]) // 2]
            a = vals[k][j]
            num = 1 + b * c
            if num % a:
                raise ArithmeticError(f"diamond at row {k}, position {x} is not integral ({num}/{a})")
            d = num // a
            if d <= 0:
                raise NonPositive(f"non-positive entry {d} at row {k}")
            vals[k].append(d)

    shift = min(start) - 1
    offsets = [start[0] - 1 - shift, *(s - shift for s in start), start[-1] - 1 - shift]
    rows = [tuple([1] * order)]
    for r in range(1, m + 1):
        row = tuple(vals[r][:order])
        if len(vals[r]) != order + 1 or vals[r][order] != row[0]:
            raise ArithmeticError(f"row {r} is not periodic with period {order}")
        rows.append(row)
    rows.append(tuple([1] * order))
    return Frieze(order, tuple(rows), tuple(offsets), w)


def frieze_of(alpha: Fraction) -> Frieze:
    require_unit_interval(alpha)
    return frieze_from_word(word_of(alpha))


def check_diamonds(f: Frieze) -> list[tuple[int, int]]:
    """Positions ``(r, x)`` of every diamond in one period that violates ``ad - bc = 1``."""
    bad = []
    for r in range(1, len(f.rows) - 1):
        for j in range(f.order):
            x = f.offsets[r] + 2 * j
            a, d = f.value(r, x), f.value(r, x + 2)
            b, c = f.value(r - 1, x + 1), f.value(r + 1, x + 1)
            if a * d - b * c != 1:
                bad.append((r, x))
    return bad


def max_cells(f: Frieze) -> list[tuple[int, int]]:
    """All ``(r, x)`` in the stored period where the maximum entry occurs."""
    q = max(v for _, _, v in f.cells())
    return [(r, x) for r, x, v in f.cells() if v == q]


def corners(f: Frieze, r: int, x: int) -> dict[str, int]:
    """The four diagonal neighbours of a cell, keyed UL, UR, LL, LR."""
    return {
        "UL": f.value(r - 1, x - 1),
        "UR": f.value(r - 1, x + 1),
        "LL": f.value(r + 1, x - 1),
        "LR": f.value(r + 1, x + 1),
    }


def max_entry_with_neighbors(f: Frieze) -> tuple[int, tuple[int, ...]]:
    """Maximum entry and the sorted multiset of its four diagonal neighbours."""
    r, x = max_cells(f)[0]
    return f.value(r, x), tuple(sorted(corners(f, r, x).values()))


def _transformed_value(f: Frieze, r: int, x: int, shift: int, hflip: bool, vflip: bool):
    rr = len(f.rows) - 1 - r if vflip else r
    xx = -x if hflip else x
    xx += shift
    if not f.has_cell(rr, xx):
        return None
    return f.value(rr, xx)


def find_symmetry(f1: Frieze, f2: Frieze) -> tuple[int, bool, bool] | None:
    """A ``(shift, hflip, vflip)`` carrying ``f2`` onto ``f1``, or ``None``.

    ``f2(r, x) == f1(r', x')`` with ``r' = r`` or ``m + 1 - r`` and
    ``x' = (+-x) + shift``.
    """
    if len(f1.rows) != len(f2.rows) or f1.order != f2.order:
        return None
    for hflip in (False, True):
        for vflip in (False, True):
            for shift in range(2 * f1.order):
                if all(_transformed_value(f1, r, x, shift, hflip, vflip) == v for r, x, v in f2.cells()):
                    return shift, hflip, vflip
    return None


def friezes_equivalent(f1: Frieze, f2: Frieze) -> bool:
    return find_symmetry(f1, f2) is not None


def _window(f: Frieze) -> range:
    lo = min(f.offsets)
    return range(lo, lo + 2 * f.order + 1)


def _cell_text(f: Frieze, r: int, x: int, marks: dict[tuple[int, int], str], color: bool) -> str:
    v = str(f.value(r, x))
    tag = marks.get((r, x))
    if tag is None:
        return v
    if color:
        code = "1;31" if tag == "max" else "1;34"
        return f"\x1b[{code}m{v}\x1b[0m"
    return f"[{v}]" if tag == "max" else f"({v})"


def _marks(f: Frieze, mark_max: bool) -> dict[tuple[int, int], str]:
    if not mark_max:
        return {}
    lo = min(f.offsets)
    inside = [(r, x) for r, x in max_cells(f) if lo + 1 <= x <= lo + 2 * f.order - 1]
    if not inside:
        return {}
    r, x = inside[0]
    marks = {(r, x): "max"}
    for dr in (-1, 1):
        for dx in (-1, 1):
            marks[(r + dr, x + dx)] = "around"
    return marks


def render_ascii(f: Frieze, mark_max: bool = False, color: bool | None = None) -> str:
    if color is None:
        color = bool(os.environ.get("FRIEZE_COLOR"))
    marks = _marks(f, mark_max)
    width = max(len(str(v)) for row in f.rows for v in row) + (2 if mark_max else 0)
    lines = []
    for r in range(len(f.rows)):
        parts = []
        for x in _window(f):
            if f.has_cell(r, x):
                text = _cell_text(f, r, x, marks, color)
                visible = len(str(f.value(r, x))) if color else len(text)
                parts.append(" " * (width - visible) + text)
            else:
                parts.append(" " * width)
        lines.append("".join(parts).rstrip())
    return "\n".join(lines) + "\n"


def render_markdown(f: Frieze, mark_max: bool = False) -> str:
    marks = _marks(f, mark_max)
    xs = list(_window(f))
    header = "| row | " + " | ".join(str(x - xs[0]) for x in xs) + " |"
    sep = "|---|" + "---|" * len(xs)
    lines = [header, sep]
    for r in range(len(f.rows)):
        cells = [_cell_text(f, r, x, marks, False) if f.has_cell(r, x) else "" for x in xs]
        lines.append(f"| {r} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_json(f: Frieze) -> str:
    return json.dumps(f.to_dict(), sort_keys=True)


def render_frieze(f: Frieze, format: str = "ascii", mark_max: bool = False) -> str:
    if format == "ascii":
        return render_ascii(f, mark_max)
    if format == "markdown":
        return render_markdown(f, mark_max)
    if format == "json":
        return render_json(f) + "\n"
    raise ValueError(f"unknown format {format!r}")
