"""
Tests for the counting engine, the closed forms and the list assignment
type.
"""

import networkx as nx
import pytest

from ChromaCount.graph_core import Graph, build_graph
from ChromaCount.color_count import (WideCount, ListAssignment, count_proper_colorings, count_list_colorings,
                                     count_assignments, iter_list_colorings, chromatic_polynomial_dc, closed_form,
                                     falling_factorial, stirling2, theta_chromatic_polynomial, greedy_lower_bound)
from ChromaCount.chroma_exceptions import (ChromaError, UniverseError, UnsupportedFamilyError, CountOverflowError,
                                           HypothesisError)
from ChromaCount.witnesses import theta_witness_assignment
from ChromaCount.chroma_tools import make_rng


def test_wide_count_semantics():
    assert WideCount(5) == 5
    assert WideCount(5, capped=True) != 5
    assert str(WideCount(5, capped=True)) == '>=5'
    assert WideCount(3) < WideCount(4)
    big = WideCount(1 << 128)
    assert big.overflowed
    with pytest.raises(CountOverflowError):
        big.to_u128()
    assert WideCount((1 << 128) - 1).to_u128() == (1 << 128) - 1
    with pytest.raises(ChromaError):
        WideCount(-1)


def test_list_assignment_basics():
    L = ListAssignment.from_lists([(0, 1), (1, 2), (2, 5)])
    assert L.m == 2
    assert L.lists == ((0, 1), (1, 2), (2, 5))
    assert L.colors() == [0, 1, 2, 5]
    assert L.pin(0, 1).sizes == (1, 2, 2)
    assert ListAssignment.from_lists([(0,), (0, 1)]).m is None
    assert ListAssignment.constant(2, 3).lists == ((0, 1, 2), (0, 1, 2))
    assert L.relabel({0: 3, 1: 4, 2: 0, 5: 1}).lists == ((3, 4), (0, 4), (0, 1))
    assert L.to_text() == 'v0: {0,1}\nv1: {1,2}\nv2: {2,5}\n'


def test_list_assignment_errors():
    with pytest.raises(UniverseError):
        ListAssignment.from_lists([(0, 128)])
    with pytest.raises(ChromaError):
        ListAssignment.from_lists([()])


@pytest.mark.parametrize('text,m,expected', [('theta:2,2,4', 2, 2), ('theta:2,2,4', 3, 102),
                                             ('multipartite:2,2,4', 3, 6), ('complete:4', 4, 24),
                                             ('cycle:5', 3, 30), ('path:1', 7, 7),
                                             ('join:complete:1+theta:2,2,4', 3, 6)])
def test_known_chromatic_values(text, m, expected):
    assert count_proper_colorings(build_graph(text), m) == expected


def test_zero_colors():
    assert count_proper_colorings(build_graph('path:3'), 0) == 0
    with pytest.raises(ChromaError):
        count_proper_colorings(build_graph('path:3'), -1)


def test_closed_forms_agree_with_counting():
    for n in range(3, 11):
        for m in range(0, 7):
            assert count_proper_colorings(build_graph('cycle:%i' % n), m) == closed_form('cycle:%i' % n, m)
    for n in range(1, 7):
        for m in range(0, 7):
            assert count_proper_colorings(build_graph('complete:%i' % n), m) == closed_form('complete:%i' % n, m)
    for n in range(1, 7):
        for m in range(0, 6):
            spec = 'bipartite:2,%i' % n
            assert count_proper_colorings(build_graph(spec), m) == closed_form(spec, m)
    for k in range(1, 5):
        for m in range(0, 7):
            spec = 'theta:2,2,%i' % (2 * k)
            assert count_proper_colorings(build_graph(spec), m) == closed_form(spec, m)


def test_trees_have_path_polynomial():
    for G in nx.graph_atlas_g()[1:209]:
        if not nx.is_tree(G):
            continue
        g = Graph.from_networkx(G)
        for m in range(0, 5):
            assert count_proper_colorings(g, m) == closed_form('path:%i' % g.n, m)


@pytest.mark.parametrize('spec', ['theta:1,2,3', 'theta:3,3,3', 'theta:2,3,5,2', 'multipartite:1,2,3',
                                  'multipartite:2,2,2', 'join:complete:2+cycle:5', 'join:cycle:4+complete:1',
                                  'pendant:2+cycle:5', 'pendant:1+theta:2,2,4', 'bipartite:1,6', 'bipartite:3,3'])
def test_more_closed_forms(spec):
    g = build_graph(spec)
    for m in range(0, 6):
        assert count_proper_colorings(g, m) == closed_form(spec, m)


def test_closed_form_join_identity():
    # P(K_1 join G, m) = m P(G, m - 1)
    assert closed_form('join:complete:1+theta:2,2,4', 3).value == 3 * closed_form('theta:2,2,4', 2).value
    assert closed_form('theta:2,2,4', 3).value == 4 * (2 ** 4 + 2) + 2 ** 5 - 2


def test_unsupported_closed_forms():
    with pytest.raises(UnsupportedFamilyError):
        closed_form('g6:A_', 2)
    with pytest.raises(UnsupportedFamilyError):
        closed_form('join:cycle:4+cycle:4', 3)


def test_deletion_contraction_matches_counter():
    for G in nx.graph_atlas_g()[1:120]:
        g = Graph.from_networkx(G)
        for m in range(0, 4):
            assert chromatic_polynomial_dc(g, m) == count_proper_colorings(g, m).value


def test_theta_polynomial_formula():
    for k in range(2, 6):
        g = build_graph('theta:2,2,%i' % (2 * k))
        for m in range(1, 6):
            assert theta_chromatic_polynomial(k, m) == count_proper_colorings(g, m).value


def test_theta_witness_count():
    for k in range(2, 9):
        g = build_graph('theta:2,2,%i' % (2 * k))
        assert count_list_colorings(g, theta_witness_assignment(k)) == 1


def test_counting_with_cap():
    g = build_graph('complete:3')
    capped = count_list_colorings(g, ListAssignment.constant(3, 3), cap=2)
    assert capped.capped and capped.value == 2
    exact = count_list_colorings(g, ListAssignment.constant(3, 3), cap=10)
    assert exact == 6
    assert count_list_colorings(g, ListAssignment.constant(3, 3), cap=0).capped


def test_uneven_lists_and_length_check():
    g = build_graph('path:3')
    L = ListAssignment.from_lists([(0,), (0, 1), (0, 1, 2)])
    # v0 = 0 forces v1 = 1, then v2 has two colors
    assert count_list_colorings(g, L) == 2
    with pytest.raises(ChromaError):
        count_list_colorings(g, ListAssignment.constant(2, 2))


def test_iter_list_colorings_agrees():
    g = build_graph('theta:2,2,4')
    L = ListAssignment.from_lists([(0, 1, 2), (1, 2, 3), (0, 2, 3), (0, 1, 3), (1, 2, 3), (0, 1, 2), (2, 3, 4)])
    colorings = list(iter_list_colorings(g, L))
    assert len(colorings) == count_list_colorings(g, L).value
    for coloring in colorings:
        assert all(coloring[u] != coloring[v] for u, v in g.edges())
        assert all(coloring[v] in L.lists[v] for v in range(g.n))


def test_color_renaming_invariance():
    # P(G, L) does not change when every list goes through the same color permutation
    rng = make_rng(11)
    atlas = [G for G in nx.graph_atlas_g()[2:120] if nx.is_connected(G)]
    for _ in range(200):
        g = Graph.from_networkx(atlas[int(rng.integers(len(atlas)))])
        m = int(rng.integers(1, 4))
        pool = m + 3
        lists = [[int(c) for c in rng.choice(pool, size=m, replace=False)] for _ in range(g.n)]
        L = ListAssignment.from_lists(lists)
        perm = [int(c) for c in rng.permutation(pool)]
        renamed = L.relabel(perm)
        assert sorted(renamed.colors()) == sorted(perm[c] for c in L.colors())
        assert count_list_colorings(g, renamed) == count_list_colorings(g, L)


def test_count_assignments_edge_maps():
    # a single edge whose cover matches value i with value (i + 1) mod 3
    g = build_graph('path:2')
    forward = [1 << 1, 1 << 2, 1 << 0]
    backward = [1 << 2, 1 << 0, 1 << 1]
    count = count_assignments(g, [7, 7], edge_maps={(0, 1): forward, (1, 0): backward})
    assert count == 6


def test_small_helpers():
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(2, 3) == 0
    assert stirling2(4, 2) == 7
    assert stirling2(5, 5) == 1


def test_greedy_lower_bound():
    assert greedy_lower_bound(build_graph('path:5'), 2) == 2
    assert greedy_lower_bound(build_graph('complete:3'), 3) == 6
    assert greedy_lower_bound(build_graph('theta:2,2,4'), 2) == 0
    assert greedy_lower_bound(build_graph('theta:2,2,4'), 3) >= 1
    with pytest.raises(HypothesisError):
        greedy_lower_bound(build_graph('path:2'), 0)
