"""Simple undirected graphs on vertices 1..n, distances, powers and corpora."""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

INF = math.inf
ENUMERATE_CAP = 6


class GraphFormatError(ValueError):
    """Raised for malformed graph, ordering or model text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]  # adj[v - 1] = neighbours of v

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        if len(self.adj) != self.n:
            raise ValueError("adjacency table length differs from n")
        for v, nbrs in enumerate(self.adj, start=1):
            for u in nbrs:
                if not 1 <= u <= self.n:
                    raise ValueError(f"vertex {u} out of range")
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in self.adj[u - 1]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u - 1].add(v)
            sets[v - 1].add(u)
        return cls(n, tuple(frozenset(s) for s in sets))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v - 1]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u - 1]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in self.vertices for v in sorted(self.adj[u - 1]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def is_complete(self) -> bool:
        return all(len(s) == self.n - 1 for s in self.adj)

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on ``keep``, relabelled to 1..len(keep) in ascending order."""
        kept = sorted(set(keep))
        relabel = {v: i for i, v in enumerate(kept, start=1)}
        return Graph.from_edges(
            len(kept),
            ((relabel[u], relabel[v]) for u, v in self.edges() if u in relabel and v in relabel),
        )


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(1, n)] + [(n, 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the centre labelled last."""
    c = leaves + 1
    return Graph.from_edges(c, ((v, c) for v in range(1, c)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


# --- file format -----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    n = None
    declared_m = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if tokens[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise GraphFormatError("malformed header, expected 'p edge <n> <m>'", lineno)
            try:
                n, declared_m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise GraphFormatError("malformed header, expected integers", lineno) from None
            if n < 1 or declared_m < 0:
                raise GraphFormatError("malformed header, need n >= 1 and m >= 0", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before header", lineno)
            if len(tokens) != 3:
                raise GraphFormatError("malformed edge line, expected 'e <u> <v>'", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise GraphFormatError("malformed edge line, expected integers", lineno) from None
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} out of range", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise GraphFormatError(f"unknown line type {tokens[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    # m is informational; duplicates make the literal line count exceed it
    return Graph.from_edges(n, edges)


def serialize_graph(g: Graph) -> str:
    edges = g.edges()
    lines = [f"p edge {g.n} {len(edges)}"] + [f"e {u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_graph_stream(text: str) -> list[Graph]:
    """Split a concatenation of graph files (one ``p`` header each) into graphs."""
    chunks: list[list[str]] = []
    for raw in text.splitlines():
        if raw.split()[:1] == ["p"]:
            chunks.append([])
        if chunks:
            chunks[-1].append(raw)
    return [parse_graph("\n".join(c)) for c in chunks]


# --- distances and powers --------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    rows: tuple[tuple[float, ...], ...]  # rows[u - 1][v - 1]; INF when disconnected

    def d(self, u: int, v: int) -> float:
        return self.rows[u - 1][v - 1]


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist: list[float] = [INF] * g.n
    dist[source - 1] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u - 1]:
            if dist[w - 1] == INF:
                dist[w - 1] = dist[u - 1] + 1
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, v)) for v in g.vertices))


def diameter(g: Graph) -> float:
    """Largest pairwise distance; ``INF`` if disconnected, 0 for a single vertex."""
    return max(max(row) for row in all_pairs_distances(g).rows)


def is_connected(g: Graph) -> bool:
    return diameter(g) != INF


def power(g: Graph, k: int) -> Graph:
    if k < 1:
        raise ValueError(f"power needs k >= 1, got {k}")
    if k == 1:
        return g
    dm = all_pairs_distances(g)
    return Graph.from_edges(
        g.n,
        ((u, v) for u, v in itertools.combinations(g.vertices, 2) if dm.d(u, v) <= k),
    )


# --- corpora ---------------------------------------------------------------


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) driven by MT19937 (``random.Random``) seeded with ``seed``.

    Pairs are visited in lexicographic order and each consumes exactly one
    ``random()`` draw, so the result is fixed for a given ``(n, p, seed)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in itertools.combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def enumerate_graphs(n: int, connected_only: bool = False, cap: int = ENUMERATE_CAP) -> Iterator[Graph]:
    """Every labelled graph on 1..n; bit b of the counter is the b-th lexicographic pair."""
    if n > cap:
        raise ValueError(f"n={n} above enumeration cap {cap}")
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, (pairs[b] for b in range(len(pairs)) if mask >> b & 1))
        if connected_only and not is_connected(g):
            continue
        yield g


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant key by brute force over relabellings. Small n only."""
    degs = sorted(len(s) for s in g.adj)
    best = None
    for perm in itertools.permutations(g.vertices):
        key = tuple(sorted(tuple(sorted((perm[u - 1], perm[v - 1]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return g.n, tuple(degs), best
