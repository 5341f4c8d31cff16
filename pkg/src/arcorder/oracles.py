"""Exhaustive recognisers that do not rely on any characterisation theorem.

``find_circular_ordering`` walks orderings in lexicographic order and
``find_arc_model`` walks circular arrangements of the 2n arc endpoints.
Both prune a prefix as soon as it already decides failure, and account for a
pruned prefix by the number of complete candidates below it, so
``searched`` is always the count an unpruned scan would have examined up to
and including the witness (or the whole space when nothing is found).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Union

from .arcs import ArcModel, ClockArc, containment_witness, intersection_graph
from .graph import Graph
from .ordering import Ordering, Reading, check_circular, check_proper_circular

ORDERING_CAP = 9
MODEL_CAP = 6


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class RecognitionOutcome:
    found: bool
    witness: Union[Ordering, ArcModel, None]
    searched: int


# --- ordering search -------------------------------------------------------


def _linear_ok(adj, prefix: list[int], x: int, proper: bool) -> bool:
    # x takes the last position, so it can only play j in a triple i < l < j
    nx = adj[x - 1]
    for a, i in enumerate(prefix):
        if i not in nx:
            continue
        ni = adj[i - 1]
        for l in prefix[a + 1:]:
            if l not in nx or (proper and l not in ni):
                return False
    return True


def _cyclic_ok(adj, prefix: list[int], x: int, proper: bool) -> bool:
    # The cyclic order of any placed triple is already final, so every triple
    # that contains x is decided now.
    nx = adj[x - 1]
    t = len(prefix)
    for a in range(t):
        u = prefix[a]
        nu = adj[u - 1]
        if u in nx:
            # pair (u, x): l runs over prefix[a+1:]
            for l in prefix[a + 1:]:
                if l not in nx or (proper and l not in nu):
                    return False
            # pair (x, u): l runs clockwise from x over prefix[:a]
            for l in prefix[:a]:
                if l not in nu or (proper and l not in nx):
                    return False
        # pairs (u, w) with w earlier than u wrap past x
        for b in range(a):
            w = prefix[b]
            if w in nu and (w not in nx or (proper and u not in nx)):
                return False
    return True


def find_circular_ordering(
    g: Graph,
    reading: Reading = Reading.CYCLIC,
    proper: bool = False,
    max_n: int = ORDERING_CAP,
    prune: bool = True,
) -> RecognitionOutcome:
    """First ordering (lexicographic) accepted by the circular checker.

    Under the cyclic reading rotations are equivalent, so vertex 1 is pinned
    to position 1 and (n-1)! orderings are covered; the linear reading covers
    all n!.  Reflections are never identified.
    """
    n = g.n
    if n > max_n:
        raise CapExceeded(f"n={n} above ordering-search cap {max_n}")
    if not prune:
        return _find_ordering_unpruned(g, reading, proper)
    adj = g.adj
    ok = _cyclic_ok if reading is Reading.CYCLIC else _linear_ok
    prefix = [1] if reading is Reading.CYCLIC else []
    rest = [v for v in g.vertices if v not in prefix]
    fact = [math.factorial(k) for k in range(n + 1)]
    searched = 0

    def extend() -> bool:
        nonlocal searched
        if not rest:
            searched += 1
            return True
        for idx, x in enumerate(list(rest)):
            if ok(adj, prefix, x, proper):
                prefix.append(x)
                rest.pop(idx)
                if extend():
                    return True
                rest.insert(idx, x)
                prefix.pop()
            else:
                searched += fact[len(rest) - 1]
        return False

    if extend():
        return RecognitionOutcome(True, Ordering(tuple(prefix)), searched)
    return RecognitionOutcome(False, None, searched)


def _find_ordering_unpruned(g: Graph, reading: Reading, proper: bool) -> RecognitionOutcome:
    check = check_proper_circular if proper else check_circular
    if reading is Reading.CYCLIC:
        candidates = ((1,) + p for p in itertools.permutations(range(2, g.n + 1)))
    else:
        candidates = itertools.permutations(range(1, g.n + 1))
    searched = 0
    for seq in candidates:
        searched += 1
        sigma = Ordering(seq)
        if check(g, sigma, reading) is None:
            return RecognitionOutcome(True, sigma, searched)
    return RecognitionOutcome(False, None, searched)


# --- arc-model search ------------------------------------------------------


def _span(a: int, b: int) -> int:
    """Bitmask of positions a..b (bit p-1 for position p); empty if a > b."""
    if a > b:
        return 0
    return ((1 << b) - 1) ^ ((1 << (a - 1)) - 1)


def _arc_mask(s: int, e: int, m: int) -> int:
    if s <= e:
        return _span(s, e)
    return _span(s, m) | _span(1, e)


def find_arc_model(
    g: Graph,
    proper: bool = False,
    max_n: int = MODEL_CAP,
    prune: bool = True,
) -> RecognitionOutcome:
    """Search endpoint arrangements on a 2n-position clock.

    Symbol ``2(v-1)`` is the start of v's arc and ``2(v-1)+1`` its end.  The
    start of vertex 1 is pinned to position 1 and the remaining (2n-1)!
    arrangements are walked in lexicographic symbol order.  A prefix is cut
    when some pair of arcs is already forced to meet although the vertices
    are non-adjacent, can no longer meet although they are adjacent, or (for
    ``proper``) one arc is already forced strictly inside another.
    """
    n = g.n
    if n > max_n:
        raise CapExceeded(f"n={n} above model-search cap {max_n}")
    m = 2 * n
    full = (1 << m) - 1
    fact = [math.factorial(k) for k in range(m + 1)]
    adjacent = [[v in g.adj[u] for v in range(1, n + 1)] for u in range(n)]
    starts = [0] * n  # 0 = not placed yet
    ends = [0] * n
    starts[0] = 1
    rest = list(range(1, m))
    searched = 0

    def bounds(t: int) -> tuple[list[int], list[int]]:
        lo, hi = [0] * n, [0] * n
        for v in range(n):
            s, e = starts[v], ends[v]
            if s and e:
                lo[v] = hi[v] = _arc_mask(s, e, m)
            elif s:
                lo[v], hi[v] = _span(s, t), _span(s, m)
            elif e:
                lo[v], hi[v] = _span(1, e), _span(1, e) | _span(t + 1, m)
            else:
                hi[v] = full
        return lo, hi

    def consistent(t: int) -> bool:
        lo, hi = bounds(t)
        for u in range(n):
            for v in range(u + 1, n):
                if adjacent[u][v]:
                    if not hi[u] & hi[v]:
                        return False
                elif lo[u] & lo[v]:
                    return False
                if proper:
                    # hi[v] strictly inside lo[u] forces v's arc strictly inside u's
                    if hi[v] & ~lo[u] == 0 and hi[v] != lo[u]:
                        return False
                    if hi[u] & ~lo[v] == 0 and hi[u] != lo[v]:
                        return False
        return True

    def model() -> ArcModel:
        return ArcModel(m, tuple(ClockArc(v + 1, starts[v], ends[v]) for v in range(n)))

    def accepts() -> bool:
        built = model()
        if intersection_graph(built) != g:
            return False
        return not proper or containment_witness(built) is None

    def place(t: int) -> bool:
        # t = number of positions already filled
        nonlocal searched
        if t == m:
            searched += 1
            return prune or accepts()
        for idx, sym in enumerate(list(rest)):
            v, is_end = divmod(sym, 2)
            slot = ends if is_end else starts
            slot[v] = t + 1
            rest.pop(idx)
            if not prune or consistent(t + 1):
                if place(t + 1):
                    return True
            else:
                searched += fact[m - t - 1]
            rest.insert(idx, sym)
            slot[v] = 0
        return False

    if place(1):
        return RecognitionOutcome(True, model(), searched)
    return RecognitionOutcome(False, None, searched)


def cross_audit(
    g: Graph,
    reading: Reading = Reading.CYCLIC,
    proper: bool = False,
    order_cap: int = ORDERING_CAP,
    model_cap: int = MODEL_CAP,
) -> tuple[RecognitionOutcome, RecognitionOutcome]:
    return (
        find_circular_ordering(g, reading, proper, max_n=order_cap),
        find_arc_model(g, proper, max_n=model_cap),
    )
