"""
Unit tests for graphs, the family spec language, graph6 I/O and the
structural queries.
"""

import networkx as nx
import pytest

from ChromaCount import graph_core
from ChromaCount.graph_core import Graph, build_graph, parse_family_spec
from ChromaCount.color_count import count_proper_colorings
from ChromaCount.chroma_exceptions import (ChromaError, FamilySpecError, Graph6Error, GraphSizeError,
                                           StructureError)


def test_theta_build_order_and_size():
    g = build_graph('theta:2,2,4')
    assert g.n == 7
    assert g.num_edges == 8
    assert g.labels == ('u', 'x1', 'y1', 'z1', 'z2', 'z3', 'v')
    assert g.edges() == [(0, 1), (0, 2), (0, 3), (1, 6), (2, 6), (3, 4), (4, 5), (5, 6)]


def test_join_and_pendant_sizes():
    g = build_graph('join:complete:1+theta:2,2,4')
    assert (g.n, g.num_edges) == (8, 15)
    assert g.degree(0) == 7

    h = build_graph('pendant:3+cycle:4')
    assert (h.n, h.num_edges) == (7, 7)
    assert h.degrees()[4:] == [1, 1, 1]


def test_join_keeps_labels():
    g = build_graph('join:complete:1+theta:2,2,4')
    assert g.labels == ('v0', 'u', 'x1', 'y1', 'z1', 'z2', 'z3', 'v')
    assert build_graph('join:complete:1+cycle:5').labels is None
    theta = build_graph('theta:2,2,4')
    doubled = theta.join(theta)
    assert doubled.labels[:7] == theta.labels
    assert doubled.labels[7:] == tuple(name + "'" for name in theta.labels)
    assert doubled.label(8) == "x1'"


def test_multipartite_labels():
    g = build_graph('multipartite:2,2,4')
    assert g.labels == ('x1', 'x2', 'y1', 'y2', 'z1', 'z2', 'z3', 'z4')
    assert g.num_edges == 4 + 8 + 8
    assert graph_core.multipartite_parts(g) == [(0, 1), (2, 3), (4, 5, 6, 7)]


def test_spec_str_round_trip():
    for text in ['theta:2,2,4', 'join:complete:1+theta:2,2,4', 'pendant:3+cycle:4', 'bipartite:2,5',
                 'multipartite:1,2,3', 'path:1']:
        assert str(parse_family_spec(text)) == text


@pytest.mark.parametrize('text', ['cycle:2', 'path:0', 'theta:1,1,2', 'theta:3', 'bipartite:0,3', 'foo:3'])
def test_arity_errors(text):
    with pytest.raises(FamilySpecError):
        parse_family_spec(text)


def test_parse_error_offsets():
    with pytest.raises(FamilySpecError) as err:
        parse_family_spec('cycle:2')
    assert err.value.offset == 0
    assert 'byte 0' in str(err.value)

    with pytest.raises(FamilySpecError) as err:
        parse_family_spec('join:path:3+cycle:2')
    assert err.value.offset == 12


def test_trailing_input_and_non_ascii():
    with pytest.raises(FamilySpecError):
        parse_family_spec('theta:2,2,4x')
    with pytest.raises(FamilySpecError):
        parse_family_spec('path:3é')


def test_vertex_overflow():
    with pytest.raises(FamilySpecError):
        parse_family_spec('path:32')
    with pytest.raises(FamilySpecError):
        parse_family_spec('join:complete:16+complete:16')
    with pytest.raises(GraphSizeError):
        Graph.from_edges(32, [])


def test_graph_validation():
    with pytest.raises(ChromaError):
        Graph(2, (1, 0))
    with pytest.raises(ChromaError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(GraphSizeError):
        Graph(0, ())


def test_graph6_known_strings():
    k1 = graph_core.from_graph6('@')
    assert k1.n == 1 and k1.num_edges == 0
    k2 = graph_core.from_graph6('A_')
    assert k2.edges() == [(0, 1)]
    assert graph_core.to_graph6(k2) == 'A_'
    assert graph_core.to_graph6(k1) == '@'
    assert graph_core.from_graph6('>>graph6<<A_\n') == k2


@pytest.mark.parametrize('text', ['theta:2,2,4', 'multipartite:2,2,4', 'cycle:7', 'path:31', 'complete:6'])
def test_graph6_round_trip(text):
    g = build_graph(text)
    h = graph_core.from_graph6(graph_core.to_graph6(g))
    assert h.edges() == g.edges()


def test_graph6_matches_networkx_atlas():
    for G in nx.graph_atlas_g()[1:60]:
        g = Graph.from_networkx(G)
        expected = nx.to_graph6_bytes(G, header=False).decode('ascii').strip()
        assert graph_core.to_graph6(g) == expected


@pytest.mark.parametrize('text,error', [('A', Graph6Error), ('A_x', Graph6Error), ('A`', Graph6Error),
                                        ('a', GraphSizeError), ('~?@?', GraphSizeError), ('', Graph6Error),
                                        ('A ', Graph6Error)])
def test_graph6_errors(text, error):
    with pytest.raises(error):
        graph_core.from_graph6(text)


def test_read_graph6_file(tmp_path):
    path = tmp_path / 'small.g6'
    path.write_text('>>graph6<<A_\n\nBw\n')
    graphs = graph_core.read_graph6_file(str(path))
    assert [g.n for g in graphs] == [2, 3]
    assert graphs[1].num_edges == 3


def test_g6_family_spec():
    assert build_graph('g6:Bw').num_edges == 3


def test_core_of():
    assert graph_core.core_of(build_graph('path:6')).n == 1
    assert graph_core.core_of(build_graph('bipartite:1,5')).n == 1
    core = graph_core.core_of(build_graph('cycle:6').add_pendant(2))
    assert (core.n, core.num_edges) == (6, 6)
    theta = build_graph('theta:2,2,4')
    assert graph_core.core_of(theta).edges() == theta.edges()
    with pytest.raises(StructureError):
        graph_core.core_of(Graph.from_edges(3, [(0, 1)]))


def test_core_independent_of_leaf_order():
    g = build_graph('cycle:4').add_pendant_path(0, 3).add_pendant(2)
    relabelled = g.relabel([7, 6, 5, 4, 3, 2, 1, 0])
    assert graph_core.is_isomorphic(graph_core.core_of(g), graph_core.core_of(relabelled))


def test_bipartition():
    assert graph_core.bipartition(build_graph('cycle:6')) == ((0, 2, 4), (1, 3, 5))
    assert graph_core.bipartition(build_graph('cycle:5')) is None
    assert graph_core.bipartition(build_graph('path:1')) == ((0,), ())


@pytest.mark.parametrize('text,chi', [('path:1', 1), ('path:4', 2), ('cycle:5', 3), ('complete:5', 5),
                                      ('theta:2,2,4', 2), ('multipartite:2,2,4', 3),
                                      ('join:complete:1+cycle:5', 4)])
def test_chromatic_number(text, chi):
    assert graph_core.chromatic_number(build_graph(text)) == chi


def test_chromatic_number_matches_brute_force():
    for G in nx.graph_atlas_g()[1:200]:
        g = Graph.from_networkx(G)
        chi = graph_core.chromatic_number(g)
        # a proper chi-coloring exists and none with chi - 1 colors
        assert count_proper_colorings(g, chi).value > 0
        assert count_proper_colorings(g, chi - 1).value == 0


@pytest.mark.parametrize('text,kind,k', [('path:5', 'K1', None), ('cycle:6', 'EvenCycle', 2),
                                         ('bipartite:2,3', 'K23', None), ('theta:2,2,4', 'Theta222k', 2),
                                         ('theta:2,2,6', 'Theta222k', 3), ('bipartite:3,3', 'Other', None),
                                         ('theta:2,4,4', 'Other', None), ('pendant:2+theta:2,2,4', 'Theta222k', 2)])
def test_core_class(text, kind, k):
    found = graph_core.core_class(build_graph(text))
    assert found.kind == kind
    assert found.k == k


def test_core_class_rejects():
    with pytest.raises(StructureError):
        graph_core.core_class(build_graph('cycle:5'))
    with pytest.raises(StructureError):
        graph_core.core_class(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_core_class_str():
    assert str(graph_core.core_class(build_graph('cycle:8'))) == 'C8'
    assert str(graph_core.core_class(build_graph('theta:2,2,4'))) == 'theta:2,2,4'


def test_theta_paths():
    a, b, paths = graph_core.theta_paths(build_graph('theta:2,2,4'))
    assert (a, b) == (0, 6)
    assert paths == [(1,), (2,), (3, 4, 5)]
    assert graph_core.theta_paths(build_graph('cycle:6')) is None


def test_isomorphism():
    assert graph_core.is_isomorphic(build_graph('cycle:4'), build_graph('bipartite:2,2'))
    assert not graph_core.is_isomorphic(build_graph('path:4'), build_graph('bipartite:1,3'))


def test_induced_subgraph_keeps_labels():
    g = build_graph('theta:2,2,4')
    h = g.induced_subgraph([0, 1, 6])
    assert h.labels == ('u', 'x1', 'v')
    assert h.edges() == [(0, 1), (1, 2)]
    assert g.delete_vertex(3).n == 6
