import itertools
import random

import pytest
from hypothesis import given, strategies as st

from arcorder.arcs import (
    ArcModel,
    ClockArc,
    arcs_intersect,
    build_model,
    containment_witness,
    covered,
    extract_ordering,
    intersection_graph,
    is_proper,
    parse_model,
    serialize_model,
)
from arcorder.graph import GraphFormatError, complete_graph, cycle_graph, empty_graph, enumerate_graphs, random_graph, star_graph
from arcorder.ordering import Ordering, Reading, check_circular, check_proper_circular

C4_MODEL = ArcModel(8, (ClockArc(1, 1, 3), ClockArc(2, 3, 5), ClockArc(3, 5, 7), ClockArc(4, 7, 1)))


def walk(s, e, m):
    """Positions met stepping clockwise from s until e, plus the full-circle case."""
    out = [s]
    p = s
    while p != e:
        p = p % m + 1
        out.append(p)
    if e % m + 1 == s and len(out) < m:
        out = list(range(1, m + 1))
    return set(out)


def test_covered_examples():
    assert covered(ClockArc(1, 7, 1), 8) == {7, 8, 1}
    assert covered(ClockArc(1, 3, 3), 8) == {3}
    assert covered(ClockArc(1, 4, 3), 8) == set(range(1, 9))


@given(st.integers(1, 12).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m), st.integers(1, m))))
def test_covered_matches_walk(args):
    m, s, e = args
    got = covered(ClockArc(1, s, e), m)
    assert got == walk(s, e, m)
    assert len(got) == (e - s) % m + 1


def test_intersect_examples():
    assert arcs_intersect(ClockArc(1, 1, 3), ClockArc(2, 3, 5), 8)
    assert not arcs_intersect(ClockArc(1, 1, 2), ClockArc(2, 4, 5), 8)
    assert arcs_intersect(ClockArc(1, 7, 2), ClockArc(2, 1, 1), 8)


@given(st.integers(1, 10).flatmap(lambda m: st.tuples(st.just(m), *[st.integers(1, m)] * 4)))
def test_intersect_symmetric(args):
    m, a, b, c, d = args
    x, y = ClockArc(1, a, b), ClockArc(2, c, d)
    assert arcs_intersect(x, y, m) == arcs_intersect(y, x, m) == bool(walk(a, b, m) & walk(c, d, m))


def test_intersection_graph_examples():
    assert intersection_graph(C4_MODEL) == cycle_graph(4)
    full = ArcModel(6, tuple(ClockArc(v, 2, 1) for v in range(1, 5)))
    assert intersection_graph(full) == complete_graph(4)
    points = ArcModel(6, tuple(ClockArc(v, v, v) for v in range(1, 5)))
    assert intersection_graph(points) == empty_graph(4)


def test_build_model_star():
    # vertex 1 at position 1 steps anticlockwise onto the centre at position 4
    model = build_model(star_graph(3), Ordering.of([1, 2, 3, 4]))
    assert model.m == 4
    assert covered(model.arc(4), 4) == {1, 2, 3, 4}
    assert covered(model.arc(1), 4) == {4, 1}
    assert covered(model.arc(2), 4) == {2}
    assert covered(model.arc(3), 4) == {3}
    assert intersection_graph(model) == star_graph(3)
    inner, outer = containment_witness(model)
    assert outer == 4 and inner in (1, 2, 3)
    assert not is_proper(model)


def test_build_model_complete_and_empty():
    for seq in itertools.permutations(range(1, 4)):
        model = build_model(complete_graph(3), Ordering.of(seq))
        assert all(len(covered(a, 3)) == 3 for a in model.arcs)
        assert is_proper(model)
    model = build_model(empty_graph(4), Ordering.of([2, 4, 1, 3]))
    assert all(a.s == a.e for a in model.arcs)


def test_is_proper_examples():
    assert is_proper(C4_MODEL)
    same = ArcModel(5, tuple(ClockArc(v, 2, 4) for v in range(1, 4)))
    assert is_proper(same)


def test_extract_ordering():
    star = ArcModel(8, (ClockArc(1, 2, 3), ClockArc(2, 4, 5), ClockArc(3, 6, 7), ClockArc(4, 1, 8)))
    assert extract_ordering(star) == Ordering.of([1, 2, 3, 4])
    ident = ArcModel(5, tuple(ClockArc(v, 1, v) for v in range(1, 6)))
    assert extract_ordering(ident) == Ordering.identity(5)
    tie = ArcModel(4, (ClockArc(1, 1, 3), ClockArc(2, 2, 3), ClockArc(3, 4, 1)))
    assert extract_ordering(tie) == Ordering.of([3, 1, 2])


def test_extract_ordering_tie_break_irrelevant_when_distinct():
    rng = random.Random(5)
    for _ in range(50):
        ends = rng.sample(range(1, 11), 6)
        arcs = [ClockArc(v, rng.randint(1, 10), e) for v, e in enumerate(ends, start=1)]
        model = ArcModel(10, tuple(arcs))
        by_end = sorted(model.arcs, key=lambda a: a.e)
        assert extract_ordering(model).seq == tuple(a.vertex for a in by_end)


def test_model_format():
    model = parse_model("# c\nclock 8\na 1 1 3\n")
    assert model.arc(1) == ClockArc(1, 1, 3)
    assert parse_model(serialize_model(C4_MODEL)) == C4_MODEL
    assert serialize_model(C4_MODEL).splitlines()[:2] == ["clock 8", "a 1 1 3"]
    with pytest.raises(GraphFormatError, match="missing arc for vertex 2"):
        parse_model("clock 8\na 1 1 3\na 3 2 2\n")
    with pytest.raises(GraphFormatError, match="duplicate vertex"):
        parse_model("clock 8\na 1 1 3\na 1 2 2\n")
    with pytest.raises(GraphFormatError, match="out of range"):
        parse_model("clock 8\na 1 1 9\n")
    with pytest.raises(GraphFormatError, match="unknown line type"):
        parse_model("clok 8\n")
    with pytest.raises(GraphFormatError, match="before clock header"):
        parse_model("a 1 1 1\n")


def _realizes(g, reading):
    for seq in itertools.permutations(range(1, g.n + 1)):
        s = Ordering(seq)
        if check_circular(g, s, reading) is None:
            assert intersection_graph(build_model(g, s)) == g, (g, seq)


@pytest.mark.parametrize("reading", list(Reading), ids=str)
def test_realization_exhaustive(reading):
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            _realizes(g, reading)


def test_realization_sampled_cyclic():
    rng = random.Random(11)
    accepted = 0
    for seed in range(300):
        n = rng.randint(6, 8)
        g = random_graph(n, rng.choice([0.7, 0.85, 0.95]), seed)
        for _ in range(40):
            seq = rng.sample(range(1, n + 1), n)
            s = Ordering(tuple(seq))
            if check_circular(g, s, Reading.CYCLIC) is None:
                accepted += 1
                assert intersection_graph(build_model(g, s)) == g
    assert accepted > 50


def test_proper_cyclic_orderings_build_proper_models():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for seq in itertools.permutations(range(1, n + 1)):
                s = Ordering(seq)
                if check_proper_circular(g, s, Reading.CYCLIC) is None:
                    assert is_proper(build_model(g, s))
