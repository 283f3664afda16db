"""
Tests for covers, transversal counting and the DP color function.
"""

import networkx as nx
import pytest

from ChromaCount.graph_core import Graph, build_graph
from ChromaCount.color_count import ListAssignment, count_list_colorings, count_proper_colorings
from ChromaCount.chroma_exceptions import (ChromaError, FoldSizeError, HypothesisError, DivisibilityError,
                                           UniverseError)
from ChromaCount.list_search import SearchConfig, Status, list_color_function
from ChromaCount.witnesses import theta_witness_assignment
from ChromaCount import dp_color
from ChromaCount.dp_color import (Cover, count_dp_colorings, cover_from_list_assignment, complete_cover,
                                  dp_color_function, theta_dp_formula, iter_transversals, spanning_forest_edges)


def test_theta_dp_value():
    report = dp_color_function(build_graph('theta:2,2,4'), 3)
    assert report.status == Status.EXACT
    assert report.value == 78
    assert report.value == theta_dp_formula(2, 3)
    assert report.stats.visited == 36
    assert count_dp_colorings(build_graph('theta:2,2,4'), report.witness) == 78


def test_theta_dp_in_parallel():
    report = dp_color_function(build_graph('theta:2,2,4'), 3, config=SearchConfig(threads=2))
    assert report.value == 78
    assert report.stats.visited == 36


@pytest.mark.parametrize('text,m,expected', [('path:4', 3, 24), ('cycle:4', 2, 0), ('cycle:5', 3, 30),
                                             ('complete:3', 2, 0), ('path:1', 4, 4)])
def test_small_dp_values(text, m, expected):
    assert dp_color_function(build_graph(text), m).value == expected


def test_dp_list_sandwich():
    # P_DP(G, m) <= P_l(G, m) <= P(G, m)
    for G in nx.graph_atlas_g()[1:19]:
        if not nx.is_connected(G):
            continue
        g = Graph.from_networkx(G)
        for m in (2, 3):
            dp = dp_color_function(g, m).value
            listed = list_color_function(g, m).value
            assert dp <= listed <= count_proper_colorings(g, m).value


def test_identity_cover_counts_colorings():
    g = build_graph('theta:2,2,4')
    for m in range(1, 5):
        assert count_dp_colorings(g, Cover.identity(g, m)) == count_proper_colorings(g, m).value


def test_relabelled_cover_keeps_count():
    g = build_graph('cycle:4')
    cover = Cover(3, tuple(g.edges()), ((0, 1, 2), (0, 1, 2), (0, 1, 2), (1, 2, 0)))
    pis = [(2, 0, 1), (0, 1, 2), (1, 0, 2), (2, 1, 0)]
    assert count_dp_colorings(g, cover.relabel(pis)) == count_dp_colorings(g, cover)


def test_transversals_agree_with_count():
    g = build_graph('theta:2,2,4')
    cover = dp_color_function(g, 3).witness
    transversals = list(iter_transversals(g, cover))
    assert len(transversals) == 78
    assert len(set(transversals)) == 78


def test_cover_validation():
    g = build_graph('path:2')
    with pytest.raises(FoldSizeError):
        Cover(2, tuple(g.edges()), ((0, 1, 2),))
    with pytest.raises(ChromaError):
        Cover(2, tuple(g.edges()), ((0, 0),))
    with pytest.raises(ChromaError):
        Cover(2, tuple(g.edges()), ())
    with pytest.raises(ChromaError):
        count_dp_colorings(build_graph('path:3'), Cover.identity(g, 2))


def test_cover_of_a_list_assignment():
    g = build_graph('theta:2,2,4')
    assignment = theta_witness_assignment(2)
    cover = cover_from_list_assignment(g, assignment)
    assert not cover.is_full
    # the partial cover of H_L has exactly the L-colorings as transversals
    assert count_dp_colorings(g, cover) == count_list_colorings(g, assignment)

    full = complete_cover(cover)
    assert full.is_full
    assert count_dp_colorings(g, full) <= count_dp_colorings(g, cover).value


def test_complete_cover_pairs_lowest_first():
    cover = Cover(3, ((0, 1),), ((-1, 0, -1),))
    assert complete_cover(cover).perms == ((1, 0, 2),)
    assert cover.without(0, 1).perms == ((-1, -1, -1),)
    assert cover.describe() == {'0-1': [-1, 0, -1]}


def test_uneven_lists_have_no_cover():
    g = build_graph('path:2')
    with pytest.raises(FoldSizeError):
        cover_from_list_assignment(g, ListAssignment.from_lists([(0,), (0, 1)]))


def test_spanning_forest():
    g = build_graph('theta:2,2,4')
    tree = spanning_forest_edges(g)
    assert len(tree) == g.n - 1
    assert tree <= set(g.edges())


def test_theta_dp_formula():
    assert theta_dp_formula(2, 3) == 78
    # difference to the chromatic polynomial
    assert 102 - theta_dp_formula(2, 3) == 2 ** 4 + 2 * 2 ** 2 + 2 - 2
    with pytest.raises(HypothesisError):
        theta_dp_formula(1, 3)
    with pytest.raises(HypothesisError):
        theta_dp_formula(2, 1)


def test_theta_dp_formula_divisibility():
    for k in range(2, 6):
        for m in range(2, 9):
            numerator = (m - 1) ** (2 * k + 4) - (m - 1) ** (2 * k) - 2 * (m - 1) ** 2 + 2
            if numerator % m:
                with pytest.raises(DivisibilityError):
                    theta_dp_formula(k, m)
            else:
                assert theta_dp_formula(k, m) * m == numerator


def test_dp_bounds():
    with pytest.raises(UniverseError):
        dp_color_function(build_graph('cycle:4'), dp_color.MAX_FOLD + 1)
    with pytest.raises(ChromaError):
        dp_color_function(build_graph('cycle:4'), 0)


def test_random_covers_when_over_budget():
    g = build_graph('theta:2,2,4')
    report = dp_color_function(g, 3, budget=10)
    assert report.stats.visited == 10
    assert report.status == Status.BUDGET_EXHAUSTED
    assert report.lo <= 78 <= report.hi
    assert count_dp_colorings(g, report.witness) == report.hi
