"""Brute-force ground truth on explicit planar diagrams.

The diagram of a rational link is assembled crossing by crossing from the
twist regions of its continued fraction, exactly as a picture would be
drawn, and then closed.  Every crossing sits in the same frame: its four
ports are NW, NE, SW, SE, the strands pass straight through (NW-SE and
SW-NE), and one of the two diagonals is the over-strand.

The Kauffman bracket is the full sum over all ``2^c`` smoothings with loops
counted by union-find, and the writhe is the sum of crossing signs after
tracing the components.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .errors import NotTwoComponent, TooManyCrossings
from .laurent import DELTA, LaurentPoly
from .rational import ContinuedFraction, Fraction, cf_expand, require_unit_interval

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


MAX_CROSSINGS = 22
SLOTS = ("NW", "NE", "SW", "SE")
OPPOSITE = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}
POSITION = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}
# counterclockwise order of the ports, used for crossing-list export
CCW = ("NW", "SW", "SE", "NE")

Over = Literal["NWSE", "SWNE"]
Orientation = Literal["Principal", "PlusMinus", "MinusMinus", "MinusPlus"]

Port = tuple[int, str]


@dataclass(frozen=True)
class Crossing:
    arcs: dict  # slot -> arc id
    over: Over

    def joins(self, smoothing: Literal["H", "V"]) -> tuple[int, int, int, int]:
        a = self.arcs
        if smoothing == "H":
            return a["NW"], a["NE"], a["SW"], a["SE"]
        return a["NW"], a["SW"], a["NE"], a["SE"]

    def a_smoothing(self) -> Literal["H", "V"]:
        # rotating the over-strand counterclockwise sweeps the A-regions
        return "H" if self.over == "NWSE" else "V"


@dataclass
class PlanarDiagram:
    crossings: list[Crossing]
    arc_ends: list[tuple[Port, Port]]
    free_loops: int
    anchors: dict = field(default_factory=dict)
    """``anchors[name] = (exit_port, enter_port)`` for the closure arcs, read top to bottom
    (``"left"``/``"right"``) or left to right (``"top"``/``"bottom"``)."""

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_arcs(self) -> int:
        return len(self.arc_ends)

    def port_arc(self) -> dict[Port, int]:
        out = {}
        for k, (p, q) in enumerate(self.arc_ends):
            out[p] = k
            out[q] = k
        return out

    def other_end(self, port: Port) -> Port:
        k = self.port_arc()[port]
        p, q = self.arc_ends[k]
        return q if p == port else p


class _Builder:
    """Graph of crossing ports and degree-two helper points joined by edges."""

    def __init__(self):
        self.adj: dict = {}
        self.n_edges = 0
        self.crossings: list[Over] = []
        self.n_points = 0

    def point(self):
        self.n_points += 1
        node = ("pt", self.n_points)
        self.adj[node] = []
        return node

    def crossing(self, over: Over) -> dict:
        c = len(self.crossings)
        self.crossings.append(over)
        ports = {s: ("x", c, s) for s in SLOTS}
        for node in ports.values():
            self.adj[node] = []
        return ports

    def edge(self, u, v) -> int:
        e = self.n_edges
        self.n_edges += 1
        self.adj[u].append((e, v))
        self.adj[v].append((e, u))
        return e

    def walk(self, node, via_edge: int | None):
        """Follow edges from ``node`` (leaving through any edge other than ``via_edge``)
        until a crossing port is reached; ``None`` if the walk closes up."""
        start = node
        prev = via_edge
        while node[0] == "pt":
            nxt = [(e, v) for e, v in self.adj[node] if e != prev]
            if not nxt:
                return None
            prev, node = nxt[0]
            if node == start:
                return None
        return node


def _regions(cf: ContinuedFraction) -> tuple[str, list[tuple[str, int]]]:
    n = cf.n
    start = "0" if n % 2 == 0 else "inf"
    # a_n first; odd-indexed terms twist vertically, even-indexed horizontally
    return start, [("V" if j % 2 else "H", cf.terms[j - 1]) for j in range(n, 0, -1)]


def build_from_cf(cf: ContinuedFraction, closure: Literal["D", "N"] = "D", mirror: bool = False) -> PlanarDiagram:
    over: Over = "SWNE" if mirror else "NWSE"
    b = _Builder()
    nw, ne, sw, se = b.point(), b.point(), b.point(), b.point()
    start, regions = _regions(cf)
    if start == "0":
        b.edge(nw, ne)
        b.edge(sw, se)
    else:
        b.edge(nw, sw)
        b.edge(ne, se)
    bound = {"NW": nw, "NE": ne, "SW": sw, "SE": se}
    for kind, count in regions:
        for _ in range(count):
            x = b.crossing(over)
            if kind == "H":
                b.edge(bound["NE"], x["NW"])
                b.edge(bound["SE"], x["SW"])
                bound["NE"], bound["SE"] = x["NE"], x["SE"]
            else:
                b.edge(bound["SW"], x["NW"])
                b.edge(bound["SE"], x["NE"])
                bound["SW"], bound["SE"] = x["SW"], x["SE"]

    closing = []
    if closure == "D":
        closing.append(("left", bound["NW"], bound["SW"], b.edge(bound["NW"], bound["SW"])))
        closing.append(("right", bound["NE"], bound["SE"], b.edge(bound["NE"], bound["SE"])))
    else:
        closing.append(("top", bound["NW"], bound["NE"], b.edge(bound["NW"], bound["NE"])))
        closing.append(("bottom", bound["SW"], bound["SE"], b.edge(bound["SW"], bound["SE"])))

    # contract helper points into arcs between crossing ports
    arc_ends: list[tuple[Port, Port]] = []
    seen: set = set()
    for node in b.adj:
        if node[0] != "x" or node in seen:
            continue
        ((e, nxt),) = b.adj[node]
        other = nxt if nxt[0] == "x" else b.walk(nxt, e)
        seen.add(node)
        seen.add(other)
        arc_ends.append(((node[1], node[2]), (other[1], other[2])))

    # helper points never reached from a port lie on crossing-free circles
    reached = set()
    for node in b.adj:
        if node[0] == "x":
            cur, prev = b.adj[node][0][1], b.adj[node][0][0]
            while cur[0] == "pt":
                reached.add(cur)
                prev, cur = [(e, v) for e, v in b.adj[cur] if e != prev][0]
    loops = 0
    pending = [p for p in b.adj if p[0] == "pt" and p not in reached]
    visited = set()
    for p in pending:
        if p in visited:
            continue
        loops += 1
        stack = [p]
        while stack:
            u = stack.pop()
            if u in visited:
                continue
            visited.add(u)
            stack.extend(v for _, v in b.adj[u])

    port_arc = {}
    for k, (p, q) in enumerate(arc_ends):
        port_arc[p] = k
        port_arc[q] = k
    crossings = [
        Crossing({s: port_arc[(c, s)] for s in SLOTS}, over_c) for c, over_c in enumerate(b.crossings)
    ]

    anchors = {}
    for name, u, v, e in closing:
        first = u if u[0] == "x" else b.walk(u, e)
        second = v if v[0] == "x" else b.walk(v, e)
        if first is not None and second is not None:
            anchors[name] = ((first[1], first[2]), (second[1], second[2]))
    return PlanarDiagram(crossings, arc_ends, loops, anchors)


def build_diagram(alpha: Fraction, parity: str = "even", closure: Literal["D", "N"] = "D", mirror: bool = False) -> PlanarDiagram:
    """Diagram of the denominator (or numerator) closure of the rational tangle of ``alpha``."""
    require_unit_interval(alpha)
    return build_from_cf(cf_expand(alpha, parity), closure, mirror)


# state sum


@njit(cache=True)
def _state_histogram(joins_a, joins_b, n_arcs):
    c = joins_a.shape[0]
    hist = np.zeros((c + 1, n_arcs + 1), dtype=np.int64)
    parent = np.empty(n_arcs, dtype=np.int64)
    for mask in range(1 << c):
        for i in range(n_arcs):
            parent[i] = i
        n_a = 0
        for k in range(c):
            if (mask >> k) & 1:
                row = joins_a[k]
                n_a += 1
            else:
                row = joins_b[k]
            for h in range(2):
                x = row[2 * h]
                y = row[2 * h + 1]
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
        comps = 0
        for i in range(n_arcs):
            if parent[i] == i:
                comps += 1
        hist[n_a, comps] += 1
    return hist


def state_histogram(d: PlanarDiagram) -> np.ndarray:
    """``hist[#A-smoothings, #loops among crossing arcs]`` over all states."""
    if d.n_crossings > MAX_CROSSINGS:
        raise TooManyCrossings(f"{d.n_crossings} crossings exceed the limit of {MAX_CROSSINGS}")
    c = d.n_crossings
    joins_a = np.zeros((c, 4), dtype=np.int64)
    joins_b = np.zeros((c, 4), dtype=np.int64)
    for k, x in enumerate(d.crossings):
        a = x.a_smoothing()
        joins_a[k] = x.joins(a)
        joins_b[k] = x.joins("V" if a == "H" else "H")
    return _state_histogram(joins_a, joins_b, d.n_arcs)


def state_sum_bracket(d: PlanarDiagram) -> LaurentPoly:
    """Sum of ``A^(#A - #B) delta^(loops - 1)`` over every state."""
    c = d.n_crossings
    hist = state_histogram(d)
    total = LaurentPoly()
    delta_pows: dict[int, LaurentPoly] = {}
    for n_a in range(c + 1):
        for comps in range(hist.shape[1]):
            count = int(hist[n_a, comps])
            if not count:
                continue
            loops = comps + d.free_loops
            if loops not in delta_pows:
                delta_pows[loops] = DELTA ** (loops - 1)
            total = total + LaurentPoly.mono(2 * n_a - c, count) * delta_pows[loops]
    return total


# orientation and writhe


@dataclass
class OrientedDiagram:
    diagram: PlanarDiagram
    # for every crossing, the slot through which each strand enters
    entries: list[dict[str, str]]
    components: int

    def signs(self) -> list[int]:
        out = []
        for x, ent in zip(self.diagram.crossings, self.entries):
            over_slots = ("NW", "SE") if x.over == "NWSE" else ("SW", "NE")
            over_in = ent["over"]
            under_in = ent["under"]
            ov = _direction(over_in)
            un = _direction(under_in)
            cross = ov[0] * un[1] - ov[1] * un[0]
            assert over_in in over_slots
            out.append(1 if cross > 0 else -1)
        return out


def _direction(entry_slot: str) -> tuple[int, int]:
    a = POSITION[entry_slot]
    b = POSITION[OPPOSITE[entry_slot]]
    return b[0] - a[0], b[1] - a[1]


def _trace(d: PlanarDiagram, exit_port: Port, visits: dict) -> int:
    """Walk one component starting by leaving through ``exit_port``; record entry slots."""
    port_arc = d.port_arc()
    steps = 0
    port = exit_port
    while True:
        k = port_arc[port]
        p, q = d.arc_ends[k]
        enter = q if p == port else p
        c, slot = enter
        x = d.crossings[c]
        role = "over" if (slot in ("NW", "SE")) == (x.over == "NWSE") else "under"
        if (c, role) in visits:
            if visits[(c, role)] != slot:
                raise RuntimeError("strand traversed in both directions")
            return steps
        visits[(c, role)] = slot
        steps += 1
        port = (c, OPPOSITE[slot])


# Principal orientation: the left closure arc points down; for two-component
# links the right closure arc points up.  Variants reverse components.
_PRINCIPAL_LEFT = "down"
_PRINCIPAL_RIGHT = "up"


def _component_of(d: PlanarDiagram, port: Port) -> set[int]:
    visits: dict = {}
    _trace(d, port, visits)
    return {c for c, _ in visits}


def orient_diagram(d: PlanarDiagram, which: Orientation = "Principal",
                   left: str | None = None, right: str | None = None) -> OrientedDiagram:
    """Orient the denominator closure.

    The component through the left closure arc is oriented first; a second
    component is anchored on the right closure arc.  ``PlusMinus`` reverses
    the second component, ``MinusMinus`` both and ``MinusPlus`` the first.
    ``left``/``right`` override the anchoring directions (``"down"``/``"up"``).
    """
    left = left or _PRINCIPAL_LEFT
    right = right or _PRINCIPAL_RIGHT
    if "left" not in d.anchors:
        raise ValueError("orientation needs a denominator closure")
    visits: dict = {}
    top, bottom = d.anchors["left"]
    flip_first = which in ("MinusMinus", "MinusPlus")
    down = (left == "down") != flip_first
    _trace(d, top if down else bottom, visits)
    components = 1
    rtop, rbottom = d.anchors["right"]
    crossings_done = len(visits)
    if len(visits) < 2 * d.n_crossings:
        components = 2
        flip_second = which in ("PlusMinus", "MinusMinus")
        rdown = (right == "down") != flip_second
        _trace(d, rtop if rdown else rbottom, visits)
    elif which != "Principal":
        raise NotTwoComponent("re-orienting one component needs a two-component link")
    if len(visits) != 2 * d.n_crossings or crossings_done == 0:
        raise RuntimeError("diagram has components not reached from the closure arcs")
    entries = [{"over": visits[(c, "over")], "under": visits[(c, "under")]} for c in range(d.n_crossings)]
    return OrientedDiagram(d, entries, components)


def writhe_of(od: OrientedDiagram) -> int:
    return sum(od.signs())


def count_components(d: PlanarDiagram) -> int:
    if not d.crossings:
        return d.free_loops
    seen: set = set()
    comps = 0
    for c in range(d.n_crossings):
        for slot in ("NW", "SW"):
            x = d.crossings[c]
            role = "over" if (slot in ("NW", "SE")) == (x.over == "NWSE") else "under"
            if (c, role) in seen:
                continue
            visits: dict = {}
            _trace(d, (c, OPPOSITE[slot]), visits)
            seen.update(visits)
            comps += 1
    return comps + d.free_loops


def oracle_writhe(alpha: Fraction, which: Orientation = "Principal", parity: str = "even") -> int:
    return writhe_of(orient_diagram(build_diagram(alpha, parity), which))


def oracle_bracket(alpha: Fraction, parity: str = "even") -> LaurentPoly:
    return state_sum_bracket(build_diagram(alpha, parity))


def to_pd(od: OrientedDiagram) -> list[tuple[int, int, int, int]]:
    """Crossing list in the usual PD convention: four arc labels per crossing,
    counterclockwise, starting from the incoming under-strand."""
    out = []
    for x, ent in zip(od.diagram.crossings, od.entries):
        start = CCW.index(ent["under"])
        labels = tuple(x.arcs[CCW[(start + i) % 4]] + 1 for i in range(4))
        out.append(labels)
    return out


def format_pd(od: OrientedDiagram) -> str:
    return "PD[" + ", ".join("X[%d,%d,%d,%d]" % t for t in to_pd(od)) + "]"
