"""Circular-arc models on a discrete clock with positions 1..m.

An arc ``[s, e]`` covers the positions met walking clockwise from ``s`` to
``e`` inclusive.  ``s == e`` is a single point and ``s == e + 1`` (mod m) is
the whole circle.  Arcs are closed and endpoints are integer positions, so
two arcs meet exactly when their position sets meet.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphFormatError
from .ordering import Ordering


@dataclass(frozen=True)
class ClockArc:
    vertex: int
    s: int
    e: int

    def length(self, m: int) -> int:
        return (self.e - self.s) % m + 1


@dataclass(frozen=True)
class ArcModel:
    m: int
    arcs: tuple[ClockArc, ...]  # arcs[v - 1] belongs to vertex v

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("clock needs at least one position")
        for v, a in enumerate(self.arcs, start=1):
            if a.vertex != v:
                raise ValueError(f"arc table slot {v} holds vertex {a.vertex}")
            if not (1 <= a.s <= self.m and 1 <= a.e <= self.m):
                raise ValueError(f"arc of vertex {v} leaves the clock 1..{self.m}")

    @classmethod
    def from_arcs(cls, m: int, arcs: Iterable[ClockArc]) -> ArcModel:
        by_vertex = sorted(arcs, key=lambda a: a.vertex)
        return cls(m, tuple(by_vertex))

    @property
    def n(self) -> int:
        return len(self.arcs)

    def arc(self, v: int) -> ClockArc:
        return self.arcs[v - 1]


def covered(a: ClockArc, m: int) -> frozenset[int]:
    return frozenset((a.s - 1 + step) % m + 1 for step in range(a.length(m)))


def arcs_intersect(a: ClockArc, b: ClockArc, m: int) -> bool:
    return not covered(a, m).isdisjoint(covered(b, m))


def intersection_graph(model: ArcModel) -> Graph:
    sets = [covered(a, model.m) for a in model.arcs]
    return Graph.from_edges(
        model.n,
        ((u, v) for u in range(1, model.n + 1) for v in range(u + 1, model.n + 1)
         if not sets[u - 1].isdisjoint(sets[v - 1])),
    )


def build_model(g: Graph, sigma: Ordering) -> ArcModel:
    """Arc of v runs from the end of its anticlockwise run of neighbours to v.

    Vertices sit on an n-position clock at their places in ``sigma``.  From
    v's position we step anticlockwise (wrapping) while the vertex there is
    adjacent to v.  The arc starts at the last neighbour reached, is a point
    if there is none, and is the whole circle if every other vertex is taken.
    """
    if sigma.n != g.n:
        raise ValueError(f"ordering covers 1..{sigma.n} but graph has {g.n} vertices")
    n = g.n
    arcs = []
    for v in g.vertices:
        p = sigma.position(v)
        nbrs = g.adj[v - 1]
        steps = 0
        while steps < n - 1 and sigma.at((p - steps - 2) % n + 1) in nbrs:
            steps += 1
        if steps == n - 1:
            s = p % n + 1
        else:
            s = (p - steps - 1) % n + 1
        arcs.append(ClockArc(v, s, p))
    return ArcModel(n, tuple(arcs))


def containment_witness(model: ArcModel) -> tuple[int, int] | None:
    """First ``(inner, outer)`` with covered(inner) a proper subset of covered(outer)."""
    sets = [covered(a, model.m) for a in model.arcs]
    for u in range(1, model.n + 1):
        for v in range(1, model.n + 1):
            if u != v and sets[u - 1] < sets[v - 1]:
                return u, v
    return None


def is_proper(model: ArcModel) -> bool:
    return containment_witness(model) is None


def extract_ordering(model: ArcModel) -> Ordering:
    """Vertices by clockwise end position, ties by vertex id."""
    return Ordering(tuple(a.vertex for a in sorted(model.arcs, key=lambda a: (a.e, a.vertex))))


def parse_model(text: str) -> ArcModel:
    m = None
    arcs: dict[int, ClockArc] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if tokens[0] == "clock":
            if m is not None:
                raise GraphFormatError("duplicate clock header", lineno)
            if len(tokens) != 2:
                raise GraphFormatError("malformed header, expected 'clock <m>'", lineno)
            try:
                m = int(tokens[1])
            except ValueError:
                raise GraphFormatError("malformed header, expected an integer", lineno) from None
            if m < 1:
                raise GraphFormatError("clock size must be positive", lineno)
        elif tokens[0] == "a":
            if m is None:
                raise GraphFormatError("arc line before clock header", lineno)
            if len(tokens) != 4:
                raise GraphFormatError("malformed arc line, expected 'a <v> <s> <e>'", lineno)
            try:
                v, s, e = map(int, tokens[1:])
            except ValueError:
                raise GraphFormatError("malformed arc line, expected integers", lineno) from None
            if v < 1:
                raise GraphFormatError(f"bad vertex id {v}", lineno)
            if v in arcs:
                raise GraphFormatError(f"duplicate vertex {v}", lineno)
            for x in (s, e):
                if not 1 <= x <= m:
                    raise GraphFormatError(f"position {x} out of range 1..{m}", lineno)
            arcs[v] = ClockArc(v, s, e)
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if m is None:
        raise GraphFormatError("missing 'clock' header")
    if not arcs:
        raise GraphFormatError("model has no arcs")
    n = max(arcs)
    for v in range(1, n + 1):
        if v not in arcs:
            raise GraphFormatError(f"missing arc for vertex {v}")
    return ArcModel(m, tuple(arcs[v] for v in range(1, n + 1)))


def serialize_model(model: ArcModel) -> str:
    lines = [f"clock {model.m}"] + [f"a {a.vertex} {a.s} {a.e}" for a in model.arcs]
    return "\n".join(lines) + "\n"
