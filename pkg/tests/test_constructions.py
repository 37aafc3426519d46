from math import comb

import pytest

from oracles import naive_cycle_count, naive_path_count
from turanlab.berge import Hypergraph, random_greedy_hypergraph
from turanlab.constructions import (blown_up_cycle, blown_up_cycle_for_order, blown_up_path,
                                    complete_bipartite, construction_spec, hyperedge_cycle_expansion,
                                    incidence_expansion, polarity_graph, projective_points,
                                    spec_grid, theta_graph, theta_multiplicity, theta_of_graph)
from turanlab.counting import count_cycles, count_paths
from turanlab.forbidden import ForbiddenSet, cycle_spectrum, girth, is_free
from turanlab.graph import GraphError, bipartition, complete_graph, cycle_graph, path_graph


def test_complete_bipartite():
    g = complete_bipartite(2, 8)
    assert (g.n, g.m) == (10, 16)
    assert count_cycles(g, 4).count == 28
    assert complete_bipartite(0, 5).m == 0
    assert count_cycles(complete_bipartite(3, 3), 6).count > 0
    assert set(g.neighbors(0)) == set(range(2, 10))


def test_complete_bipartite_c4_and_ratio_trend():
    k = 3
    ratios = []
    for n in (10, 20, 40, 80):
        c4 = count_cycles(complete_bipartite(k - 1, n - k + 1), 4).count
        assert c4 == comb(k - 1, 2) * comb(n - k + 1, 2)
        ratios.append(c4 * 4 / ((k - 1) * (k - 2) * n * n))
    assert ratios == sorted(ratios) and ratios[-1] >= 0.9


def test_theta_graph():
    g = theta_graph(3, 3)
    assert (g.n, g.m) == (8, 9)
    assert count_cycles(g, 6).count == 3
    assert theta_graph(2, 4) == complete_bipartite(2, 4)
    assert count_cycles(theta_graph(2, 4), 4).count == comb(4, 2)
    assert bipartition(theta_graph(2, 4)) is not None
    assert sorted(theta_graph(5, 1).degrees()) == sorted(path_graph(6).degrees())
    assert girth(theta_graph(5, 1)) == float("inf")
    with pytest.raises(ValueError):
        theta_graph(1, 3)


@pytest.mark.parametrize("l, t", [(2, 2), (3, 2), (3, 4), (4, 3), (5, 2)])
def test_theta_girth_and_count(l, t):
    g = theta_graph(l, t)
    assert girth(g) == 2 * l
    assert count_cycles(g, 2 * l).count == comb(t, 2)


def test_theta_of_graph_examples():
    g = theta_of_graph(20, cycle_graph(3), 3)
    assert theta_multiplicity(20, cycle_graph(3), 3) == 2
    assert g.n == 20 and count_cycles(g, 9).count >= 8
    g = theta_of_graph(11, complete_graph(2), 3)
    assert theta_multiplicity(11, complete_graph(2), 3) == 4
    assert g.n == 11 and g.degrees().count(0) == 1
    g = theta_of_graph(12, cycle_graph(3), 2)
    assert theta_multiplicity(12, cycle_graph(3), 2) == 3
    assert count_cycles(g, 4).count == 3 * comb(3, 2)
    with pytest.raises(GraphError):
        theta_of_graph(4, cycle_graph(3), 3)


@pytest.mark.parametrize("n, m, l", [(20, 3, 3), (27, 4, 3), (17, 4, 2), (25, 5, 2)])
def test_theta_of_cycle_properties(n, m, l):
    g = theta_of_graph(n, cycle_graph(m), l)
    t = theta_multiplicity(n, cycle_graph(m), l)
    assert count_cycles(g, m * l).count >= t ** m
    assert is_free(g, ForbiddenSet.up_to(2 * l - 1))
    for two_k in range(2 * l + 2, m * l + 3, 2):
        if two_k != m * l:
            assert is_free(g, {two_k}), two_k


def test_blown_up_cycle():
    g = blown_up_cycle(6, 3)
    assert g.n == 12
    assert cycle_spectrum(g, 8).lengths() == {4, 6}
    assert count_cycles(g, 6).count == 27
    assert blown_up_cycle(6, 1).m == 6 and girth(blown_up_cycle(6, 1)) == 6
    with pytest.raises(ValueError):
        blown_up_cycle(7, 2)
    with pytest.raises(ValueError):
        blown_up_cycle(4, 2)


@pytest.mark.parametrize("two_l, b", [(6, 2), (8, 2), (8, 3), (10, 2)])
def test_blown_up_cycle_spectrum(two_l, b):
    assert cycle_spectrum(blown_up_cycle(two_l, b), two_l + 2).lengths() <= {4, two_l}


def test_blown_up_cycle_for_order():
    g = blown_up_cycle_for_order(20, 8)
    assert g.n == 20
    assert cycle_spectrum(g, 10).lengths() <= {4, 8}


def test_blown_up_path():
    g = blown_up_path(5, 2)
    assert g.n == 8
    assert count_paths(g, 5).count >= 8
    assert count_paths(g, 5).count == naive_path_count(g, 5)
    assert count_paths(blown_up_path(3, 3), 3).count >= 9
    assert blown_up_path(4, 1) == path_graph(4)
    assert cycle_spectrum(blown_up_path(6, 2), 8).lengths() <= {4}


def test_polarity_graph():
    g2 = polarity_graph(2)
    assert g2.n == 7 and is_free(g2, {4})
    g3 = polarity_graph(3)
    assert g3.n == 13 and girth(g3) == 3 and is_free(g3, {4})
    assert count_cycles(g3, 6).count > 0
    assert len(projective_points(5)) == 31
    with pytest.raises(ValueError):
        polarity_graph(4)


def test_hyperedge_cycle_expansion():
    assert hyperedge_cycle_expansion(Hypergraph.build(5, [range(5)]), 5) == cycle_graph(5)
    two = hyperedge_cycle_expansion(Hypergraph.build(10, [range(5), range(5, 10)]), 5)
    assert count_cycles(two, 5).count == 2
    h = random_greedy_hypergraph(25, 5, 7, 10, 1)
    spec = cycle_spectrum(hyperedge_cycle_expansion(h, 5), 6).lengths()
    assert spec == {5}
    with pytest.raises(ValueError):
        hyperedge_cycle_expansion(Hypergraph.build(6, [(0, 1, 2), (2, 3, 4, 5)]), 3)


def test_incidence_expansion():
    g = incidence_expansion(Hypergraph.build(2, [(0, 1)]), 3)
    assert g.n == 5 and sorted(g.degrees()) == [2, 2, 2, 3, 3]
    assert bipartition(g) is not None and count_cycles(g, 4).count == 3
    spec = construction_spec("incidence", r=3, d=2, s=2, seed=1)
    h_order = spec.graph.n - spec.graph.degrees().count(3)
    assert is_free(spec.graph, {8})
    assert all(d == 3 for d in spec.graph.degrees()[h_order:])


def test_every_spec_in_grid_checks_out():
    for spec in spec_grid():
        ok, detail = spec.check()
        assert ok, (spec.name, spec.params, detail)


def test_spec_json():
    spec = construction_spec("complete_bipartite", a=2, b=8)
    d = spec.to_dict()
    assert d["guaranteed"] == {"pattern": "cycle", "k": 4, "count": "28"}
    assert 6 in d["expected_free"]
    with pytest.raises(ValueError):
        construction_spec("nope")


def test_small_constructions_against_oracle():
    for g, k in [(theta_graph(3, 2), 6), (blown_up_cycle(6, 2), 6), (polarity_graph(2), 3)]:
        assert count_cycles(g, k).count == naive_cycle_count(g, k)
