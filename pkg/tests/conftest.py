import itertools

import pytest
from hypothesis import strategies as st

from arcorder.graph import Graph
from arcorder.ordering import Ordering, Reading


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, (p for p, keep in zip(pairs, chosen) if keep))


@st.composite
def graph_with_ordering(draw, min_n=1, max_n=8):
    g = draw(graphs(min_n, max_n))
    seq = draw(st.permutations(list(g.vertices)))
    return g, Ordering(tuple(seq))


readings = st.sampled_from(list(Reading))


@pytest.fixture(params=list(Reading), ids=str)
def reading(request):
    return request.param


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
