from itertools import combinations

import numpy as np
from hypothesis import strategies as st

from turanlab.berge import Hypergraph
from turanlab.graph import build_graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def random_hypergraphs(count, seed=0, max_order=7, max_edges=5):
    """Seeded hypergraphs with at most max_edges edges over at most max_order vertices."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        order = int(rng.integers(2, max_order + 1))
        m = int(rng.integers(0, max_edges + 1))
        edges = []
        for _ in range(m):
            size = int(rng.integers(2, order + 1))
            edges.append(sorted(rng.choice(order, size=size, replace=False).tolist()))
        yield Hypergraph.build(order, edges)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
