import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import naive_common_paths, naive_cycle_count, naive_path_count, naive_walk_count
from turanlab.constructions import complete_bipartite
from turanlab.counting import (CountReport, Pattern, c4_identity_check, closed_form_bipartite_cycles,
                               count_cycles, count_paths, count_pattern, count_walks, cycle,
                               falling_factorial, iter_cycles, odd_cycles_through_vertex,
                               p3_from_vertex, p3_layer_identity, pair_counts, path)
from turanlab.graph import (bipartition, build_graph, complete_graph, cycle_graph, empty_graph,
                            path_graph, petersen_graph, random_graph, star_graph)


@pytest.mark.parametrize("g, k, expected", [
    (complete_graph(5), 4, 15),
    (complete_bipartite(2, 3), 4, 3),
    (petersen_graph(), 5, 12),
    (complete_graph(4), 5, 0),
])
def test_cycle_examples(g, k, expected):
    assert count_cycles(g, k).count == expected


def test_cycle_length_below_three():
    with pytest.raises(ValueError):
        count_cycles(complete_graph(4), 2)


@pytest.mark.parametrize("g, k, expected", [
    (complete_graph(3), 3, 3),
    (complete_bipartite(2, 3), 4, 12),
    (empty_graph(4), 2, 0),
    (path_graph(4), 1, 4),
])
def test_path_examples(g, k, expected):
    assert count_paths(g, k).count == expected


def test_path_k_zero():
    with pytest.raises(ValueError):
        count_paths(complete_graph(3), 0)


def test_walk_examples():
    assert count_walks(complete_graph(2), 3).count == 2
    assert count_walks(cycle_graph(4), 3).count == 16


@given(graphs(max_n=9))
def test_walk_two_is_twice_edges(g):
    assert count_walks(g, 2).count == 2 * g.m


@settings(max_examples=60)
@given(graphs(max_n=6), st.integers(2, 6))
def test_walks_match_matrix_power_and_dominate_paths(g, k):
    w = count_walks(g, k).count
    assert w == naive_walk_count(g, k)
    assert 2 * count_paths(g, k).count <= w


@settings(max_examples=80)
@given(graphs(max_n=7), st.integers(3, 7))
def test_counts_match_permutation_oracle(g, k):
    assert count_cycles(g, k).count == naive_cycle_count(g, k)
    assert count_paths(g, k).count == naive_path_count(g, k)


def test_sharded_counts_equal_serial():
    g = random_graph(18, 0.4, 3)
    for k in (4, 5):
        assert count_cycles(g, k, workers=3).count == count_cycles(g, k, workers=1).count
        assert count_paths(g, k, workers=3).count == count_paths(g, k, workers=1).count


def test_iter_cycles_lists_each_once():
    g = complete_graph(5)
    cycles = list(iter_cycles(g, 4))
    assert len(cycles) == 15
    assert len({frozenset(zip(c, c[1:] + c[:1])) for c in cycles}) == 15


def test_count_report_json():
    rep = count_cycles(complete_bipartite(2, 8), 4)
    d = json.loads(rep.to_json())
    assert d == {"pattern": "cycle", "k": 4, "count": "28", "n": 10, "m": 16}
    assert CountReport.from_json(rep.to_json()) == rep


def test_pattern_parse():
    assert Pattern.parse("cycle:4") == cycle(4)
    assert Pattern.parse("path:3") == path(3)
    assert str(cycle(5)) == "cycle:5"
    with pytest.raises(ValueError):
        Pattern.parse("star:3")
    assert count_pattern(complete_graph(4), cycle(3)).count == 4


def test_pair_counts_examples():
    assert pair_counts(complete_bipartite(2, 3), 2)[(0, 1)] == 3
    assert pair_counts(cycle_graph(6), 3)[(0, 3)] == 2
    assert pair_counts(cycle_graph(5), 2)[(0, 1)] == 0


@settings(max_examples=40)
@given(graphs(max_n=7), st.integers(1, 4))
def test_pair_counts_match_oracle(g, l):
    table = pair_counts(g, l)
    for a in range(g.n):
        for b in range(a + 1, g.n):
            assert table[(a, b)] == table[(b, a)] == naive_common_paths(g, a, b, l)
    if l == 1:
        assert all(table[(a, b)] == int(g.has_edge(a, b))
                   for a in range(g.n) for b in range(a + 1, g.n))


@pytest.mark.parametrize("g, expected", [
    (complete_bipartite(2, 3), (3, 3)),
    (cycle_graph(5), (0, 0)),
    (complete_graph(4), (3, 3)),
])
def test_c4_identity_examples(g, expected):
    assert c4_identity_check(g) == expected


@given(graphs(max_n=9))
def test_c4_identity_property(g):
    lhs, rhs = c4_identity_check(g)
    assert lhs == rhs


def test_p3_from_vertex_examples():
    s = star_graph(3)
    assert p3_from_vertex(s, 0) == 0
    assert p3_from_vertex(s, 1) == 2
    assert all(p3_from_vertex(complete_graph(3), a) == 2 for a in range(3))


@given(graphs(min_n=1, max_n=8))
def test_p3_identities(g):
    total = sum(p3_from_vertex(g, a) for a in range(g.n))
    assert total == 2 * count_paths(g, 3).count
    assert all(p3_layer_identity(g, a) == p3_from_vertex(g, a) for a in range(g.n))


def test_odd_cycles_through_vertex_examples():
    p = petersen_graph()
    assert all(odd_cycles_through_vertex(p, v, 2) == (6, 6) for v in range(10))
    assert all(odd_cycles_through_vertex(cycle_graph(7), v, 3) == (1, 1) for v in range(7))
    tree = build_graph(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)])
    assert all(odd_cycles_through_vertex(tree, v, l) == (0, 0) for v in range(6) for l in (1, 2, 3))


@pytest.mark.parametrize("a, b, l, expected", [(2, 8, 2, 28), (3, 5, 3, 60), (1, 9, 2, 0)])
def test_closed_form_examples(a, b, l, expected):
    assert closed_form_bipartite_cycles(a, b, l) == expected


def test_closed_form_matches_counter_grid():
    for a in range(1, 9):
        for b in range(a, 9):
            g = complete_bipartite(a, b)
            for l in range(2, 5):
                assert count_cycles(g, 2 * l).count == closed_form_bipartite_cycles(a, b, l)


def test_closed_form_rejects_small_l():
    with pytest.raises(ValueError):
        closed_form_bipartite_cycles(3, 3, 1)


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(7, 0) == 1


@given(graphs(max_n=8))
def test_bipartite_graphs_have_no_odd_cycles(g):
    if bipartition(g) is not None:
        assert all(count_cycles(g, k).count == 0 for k in range(3, g.n + 1, 2))


def test_counts_are_exact_big_integers():
    n = count_paths(complete_graph(12), 6).count
    assert n == falling_factorial(12, 6) // 2
    assert isinstance(n, int)
    assert count_cycles(complete_bipartite(20, 20), 4).count == comb(20, 2) ** 2
    assert count_walks(complete_graph(30), 40).count == 30 * 29 ** 39
