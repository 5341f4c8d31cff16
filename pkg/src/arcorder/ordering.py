"""Vertex orderings on a circle and the four ordering conditions.

An ordering places vertex ``seq[p - 1]`` at clockwise position ``p``.  The
betweenness relation ``i < l < j`` has two readings:

* ``LINEAR``: position(i) < position(l) < position(j) as integers;
* ``CYCLIC``: l lies strictly inside the clockwise run from i to j, wrapping
  past position n back to 1 when needed.

Every checker scans ordered pairs ``(i, j)`` by position of ``i``, then of
``j``, then ``l`` clockwise from ``i``, and reports the first failing triple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphFormatError


class Reading(str, enum.Enum):
    LINEAR = "linear"
    CYCLIC = "cyclic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Ordering:
    seq: tuple[int, ...]

    def __post_init__(self):
        n = len(self.seq)
        if sorted(self.seq) != list(range(1, n + 1)):
            raise ValueError(f"ordering {list(self.seq)} is not a permutation of 1..{n}")
        object.__setattr__(self, "_pos", {v: p for p, v in enumerate(self.seq, start=1)})

    @classmethod
    def of(cls, seq: Sequence[int]) -> Ordering:
        return cls(tuple(seq))

    @classmethod
    def identity(cls, n: int) -> Ordering:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.seq)

    def position(self, v: int) -> int:
        return self._pos[v]  # type: ignore[attr-defined]

    def at(self, p: int) -> int:
        return self.seq[p - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.seq))


def reverse(sigma: Ordering) -> Ordering:
    return Ordering(sigma.seq[::-1])


def parse_ordering(text: str) -> Ordering:
    tokens = [t for line in text.splitlines() if not line.lstrip().startswith("#") for t in line.split()]
    try:
        seq = tuple(int(t) for t in tokens)
    except ValueError:
        raise GraphFormatError(f"ordering has a non-integer token in {text.strip()!r}") from None
    if not seq:
        raise GraphFormatError("empty ordering")
    try:
        return Ordering(seq)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def serialize_ordering(sigma: Ordering) -> str:
    return str(sigma) + "\n"


@dataclass(frozen=True)
class Violation:
    """Triple ``(i, l, j)`` with edge ij present and ``missing`` absent."""

    i: int
    l: int
    j: int
    missing: tuple[int, int]
    reading: Reading

    @property
    def condition(self) -> str:
        other = self.missing[1]
        return f"v_l v_{'j' if other == self.j else 'i'} missing"

    def line(self) -> str:
        a, b = self.missing
        return f"violation i={self.i} l={self.l} j={self.j} missing={a}-{b}"


def between(sigma: Ordering, reading: Reading, a: int, b: int) -> list[int]:
    if a == b:
        raise ValueError("between() needs two distinct vertices")
    pa, pb = sigma.position(a), sigma.position(b)
    if reading is Reading.LINEAR:
        return list(sigma.seq[pa:pb - 1]) if pa < pb else []
    n = sigma.n
    return [sigma.seq[(pa + s - 1) % n] for s in range(1, (pb - pa) % n)]


def _require_fit(g: Graph, sigma: Ordering) -> None:
    if sigma.n != g.n:
        raise ValueError(f"ordering covers 1..{sigma.n} but graph has {g.n} vertices")


def _scan(g: Graph, sigma: Ordering, reading: Reading, proper: bool) -> Violation | None:
    _require_fit(g, sigma)
    for i in sigma.seq:
        ni = g.adj[i - 1]
        for j in sigma.seq:
            if j == i or j not in ni:
                continue
            nj = g.adj[j - 1]
            for l in between(sigma, reading, i, j):
                if l not in nj:
                    return Violation(i, l, j, (l, j), reading)
                if proper and l not in ni:
                    return Violation(i, l, j, (l, i), reading)
    return None


def check_circular(g: Graph, sigma: Ordering, reading: Reading = Reading.CYCLIC) -> Violation | None:
    """``None`` when every edge ij has each l between i and j adjacent to j."""
    return _scan(g, sigma, reading, proper=False)


def check_proper_circular(g: Graph, sigma: Ordering, reading: Reading = Reading.CYCLIC) -> Violation | None:
    """As :func:`check_circular` but each such l must also be adjacent to i."""
    return _scan(g, sigma, reading, proper=True)


def check_interval(g: Graph, sigma: Ordering) -> Violation | None:
    return check_circular(g, sigma, Reading.LINEAR)


def check_proper_interval(g: Graph, sigma: Ordering) -> Violation | None:
    return check_proper_circular(g, sigma, Reading.LINEAR)


def violation_holds(g: Graph, sigma: Ordering, v: Violation) -> bool:
    """Re-derive a certificate from scratch: i-j edge, l between, missing pair absent."""
    a, b = v.missing
    return (
        g.has_edge(v.i, v.j)
        and v.l in between(sigma, v.reading, v.i, v.j)
        and v.l in (a, b)
        and {a, b} - {v.l} <= {v.i, v.j}
        and not g.has_edge(a, b)
    )
