import pytest

from conftest import random_hypergraphs
from oracles import brute_berge_cycle, brute_hypergraph_girth
from turanlab.berge import (Hypergraph, ellis_linial_order, has_berge_cycle, hypergraph_girth,
                            random_greedy_hypergraph, regular_uniform_high_girth, sum_edge_sizes)
from turanlab.forbidden import has_cycle_of_length
from turanlab.graph import build_graph

TRIANGLE = Hypergraph.build(3, [(0, 1), (1, 2), (0, 2)])
DOUBLE = Hypergraph.build(4, [(0, 1, 2), (1, 2, 3)])
LINEAR_PATH = Hypergraph.build(7, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])


def test_build_validates_and_dedups():
    h = Hypergraph.build(4, [(2, 1), (1, 2), (0, 3, 1)])
    assert h.edges == ((1, 2), (0, 1, 3))
    assert h.uniformity() is None
    assert h.degrees() == [1, 2, 1, 1]
    with pytest.raises(ValueError):
        Hypergraph.build(3, [(0,)])
    with pytest.raises(ValueError):
        Hypergraph.build(3, [(0, 3)])


def test_berge_examples():
    w = has_berge_cycle(TRIANGLE, 3)
    assert w is not None and w.is_valid(TRIANGLE)
    w = has_berge_cycle(DOUBLE, 2)
    assert w is not None and w.is_valid(DOUBLE) and set(w.vertices) == {1, 2}
    assert has_berge_cycle(LINEAR_PATH, 3) is None
    assert has_berge_cycle(TRIANGLE, 2) is None
    with pytest.raises(ValueError):
        has_berge_cycle(TRIANGLE, 1)


def test_girth_examples():
    assert hypergraph_girth(TRIANGLE, 6) == 3
    assert hypergraph_girth(DOUBLE, 6) == 2
    matching = Hypergraph.build(9, [(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert hypergraph_girth(matching, 9) is None


def test_matches_exhaustive_enumeration():
    for h in random_hypergraphs(300):
        edges = [set(e) for e in h.edges]
        for k in range(2, 6):
            w = has_berge_cycle(h, k)
            assert (w is not None) == brute_berge_cycle(edges, k), (h, k)
            if w is not None:
                assert w.is_valid(h) and len(w.vertices) == k
        assert hypergraph_girth(h, 5) == brute_hypergraph_girth(edges, 5)


def test_two_uniform_matches_graph_cycles():
    for h in random_hypergraphs(150, seed=5):
        pairs = [e for e in h.edges if len(e) == 2]
        h2 = Hypergraph.build(h.order, pairs)
        g = build_graph(h.order, pairs)
        for k in range(3, 6):
            assert (has_berge_cycle(h2, k) is not None) == has_cycle_of_length(g, k)


@pytest.mark.parametrize("n, r, g, m, seed", [(25, 5, 7, 10, 1), (25, 5, 7, 10, 2), (20, 3, 5, 15, 3),
                                              (30, 5, 9, 12, 4), (12, 2, 5, 10, 5)])
def test_greedy_generator_certifies(n, r, g, m, seed):
    h = random_greedy_hypergraph(n, r, g, m, seed)
    assert 0 < h.m <= m and h.uniformity() == r
    assert hypergraph_girth(h, g - 1) is None
    assert h == random_greedy_hypergraph(n, r, g, m, seed)


def test_greedy_single_possible_edge():
    h = random_greedy_hypergraph(5, 5, 3, 2, 9)
    assert h.m == 1 and h.edges == ((0, 1, 2, 3, 4),)


def test_regular_generator():
    h = regular_uniform_high_girth(2, 2, 5, seed=0)
    assert h is not None and set(h.degrees()) == {2} and hypergraph_girth(h, 4) is None
    h = regular_uniform_high_girth(3, 2, 3, seed=1)
    if h is not None:
        assert set(h.degrees()) == {2} and h.uniformity() == 3
        assert hypergraph_girth(h, 2) is None


def test_regular_not_found_is_explicit():
    assert regular_uniform_high_girth(5, 3, 8, seed=0, restarts=1, max_order=6) is None


def test_ellis_linial_order():
    assert ellis_linial_order(2, 5, 2) == 11
    for r, g, d in [(3, 5, 2), (4, 6, 3), (3, 4, 5)]:
        x = (d - 1) * (r - 1)
        quotient = (r - 1) * (1 + d * (r - 1) * (x ** g - 1) // (x - 1))
        assert ellis_linial_order(r, g, d) == quotient
        assert quotient < 4 * x ** (g + 1)


def test_sum_edge_sizes():
    assert sum_edge_sizes(TRIANGLE) == 6
    assert sum_edge_sizes(Hypergraph.build(3, [])) == 0
    h = random_greedy_hypergraph(60, 5, 3, 10, 0)
    assert h.m == 10 and sum_edge_sizes(h) == 50
