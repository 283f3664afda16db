##
## witnesses.py
##
## explicit list assignments certifying gaps between list colorings and
## ordinary colorings, and the three-path decomposition of theta counts
##

import logging
from dataclasses import dataclass

from ChromaCount.chroma_exceptions import StructureError, HypothesisError, ChromaError
from ChromaCount.color_count import ListAssignment, count_list_colorings
from ChromaCount import graph_core


logger = logging.getLogger(__name__)


def theta_witness_assignment(k):
    """
    Function that returns the 2-assignment of theta(2,2,2k) with exactly one
    proper coloring.

    Vertex order is the one ``build_graph('theta:2,2,2k')`` uses: u, x1, y1,
    z1..z_{2k-1}, v. Colors are 1, 2 and 3.

    Parameters
    ----------
    k : int
        Half the length of the long path, k >= 2.

    Returns
    -------
    ListAssignment
    """
    if k < 2:
        raise HypothesisError('theta witness needs k >= 2, got %i' % k)
    long_path = [(1, 3)] + [(2, 3)] * (2 * k - 3) + [(1, 2)]
    lists = [(1, 3), (1, 2), (2, 3)] + long_path + [(1, 2)]
    return ListAssignment.from_lists(lists)


def k224_witness():
    """
    Return K_{2,2,4} (parts x1,x2 / y1,y2 / z1..z4) and a 3-assignment with
    exactly four proper colorings, every one of which colors all of Z with 1.
    """
    g = graph_core.build_graph('multipartite:2,2,4')
    lists = [(1, 2, 3), (1, 4, 5),
             (1, 2, 3), (1, 4, 5),
             (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
    return g, ListAssignment.from_lists(lists)


def map_theta_witness(core, k=None):
    """
    Map ``theta_witness_assignment`` onto a graph isomorphic to
    theta(2,2,2k) in any vertex order.

    Returns
    -------
    ListAssignment
        Lists indexed by the vertices of ``core``.
    """
    found = graph_core.theta_paths(core)
    if found is None:
        raise StructureError('graph is not a theta graph')
    a, b, paths = found
    lengths = [len(p) + 1 for p in paths]
    if lengths[0] != 2 or lengths[1] != 2 or lengths[2] % 2 or lengths[2] < 4:
        raise StructureError('theta graph has path lengths %s, expected 2,2,2k with k >= 2' % lengths)
    if k is not None and lengths[2] != 2 * k:
        raise StructureError('theta graph has a long path of length %i, expected %i' % (lengths[2], 2 * k))
    k = lengths[2] // 2
    source = theta_witness_assignment(k)
    # canonical order: u, x1, y1, z1.., v
    image = [a, paths[0][0], paths[1][0]] + list(paths[2]) + [b]
    masks = [0] * core.n
    for canonical, vertex in enumerate(image):
        masks[vertex] = source.masks[canonical]
    return ListAssignment(tuple(masks))


def pendant_extension_witness(g, core_assignment=None):
    """
    Function that lifts a one-coloring assignment of the core of ``g`` to all
    of ``g``. Vertices are restored in reverse leaf-deletion order and each
    restored leaf copies the list of its neighbour, which keeps the coloring
    unique.

    Parameters
    ----------
    g : Graph
        Connected graph whose core is theta(2,2,2k), k >= 2.

    core_assignment : ListAssignment or None
        Lists indexed by the core's vertices (increasing original index).
        Defaults to the theta witness mapped onto the core.

    Returns
    -------
    ListAssignment
    """
    if not g.is_connected():
        raise StructureError('pendant_extension_witness needs a connected graph')
    kept, deletions = graph_core.leaf_deletion_order(g)
    core = g.induced_subgraph(kept)
    if core_assignment is None:
        core_assignment = map_theta_witness(core)
    elif len(core_assignment) != core.n:
        raise StructureError('core assignment has %i lists, core has %i vertices' % (len(core_assignment), core.n))
    masks = [0] * g.n
    for i, v in enumerate(kept):
        masks[v] = core_assignment.masks[i]
    for leaf, parent in reversed(deletions):
        masks[leaf] = masks[parent]
    return ListAssignment(tuple(masks))


def structured_candidates(g, m):
    """
    Yield the known low-count assignments that apply to ``g`` at ``m``:
    the theta witness (lifted through pendant trees) at m = 2 and the
    K_{2,2,4} witness at m = 3.
    """
    if m == 2 and g.is_connected() and graph_core.bipartition(g) is not None:
        kept, _ = graph_core.leaf_deletion_order(g)
        core = g.induced_subgraph(kept)
        try:
            yield pendant_extension_witness(g, map_theta_witness(core))
        except StructureError:
            pass
    if m == 3 and g.n == 8:
        parts = graph_core.multipartite_parts(g)
        if parts is not None and sorted(len(p) for p in parts) == [2, 2, 4]:
            _, source = k224_witness()
            pairs = [p for p in parts if len(p) == 2]
            big = [p for p in parts if len(p) == 4][0]
            image = list(pairs[0]) + list(pairs[1]) + list(big)
            masks = [0] * g.n
            for canonical, vertex in enumerate(image):
                masks[vertex] = source.masks[canonical]
            yield ListAssignment(tuple(masks))


# ..........................................................................................
#
# theta decomposition
#

def path_pair_counts(lists):
    """
    Count colorings of a path whose vertex lists are ``lists`` (endpoint to
    endpoint), for every pair of endpoint colors.

    Returns
    -------
    dict
        (first color, last color) -> count, zero pairs included.
    """
    first = lists[0]
    last = lists[-1]
    table = {}
    for c in first:
        # ways to reach each color of the current vertex
        ways = {c: 1}
        for colors in lists[1:-1]:
            nxt = {}
            for x in colors:
                nxt[x] = sum(w for y, w in ways.items() if y != x)
            ways = nxt
        for d in last:
            table[(c, d)] = sum(w for y, w in ways.items() if y != d)
    return table


@dataclass(frozen=True)
class ThetaDecomposition:
    """
    Colorings of theta(2,2,2k) split by the colors (c, d) of the branch
    vertices u and v. ``tables[i][(c, d)]`` counts colorings of path i with
    those end colors.
    """
    u: int
    v: int
    paths: tuple
    pairs: tuple
    tables: tuple

    def product(self, pair):
        out = 1
        for table in self.tables:
            out *= table[pair]
        return out

    def total(self):
        return sum(self.product(pair) for pair in self.pairs)

    def overlaps(self, assignment, path_index):
        """(k1, k2, k3) for a length-2 path with middle w: |L(w) & L(u) & L(v)|, |L(w) & (L(u) - L(v))|, |L(w) & (L(v) - L(u))|."""
        path = self.paths[path_index]
        if len(path) != 1:
            raise HypothesisError('overlaps are defined for length-2 paths only')
        lu = set(assignment.lists[self.u])
        lv = set(assignment.lists[self.v])
        lw = set(assignment.lists[path[0]])
        return len(lw & lu & lv), len(lw & (lu - lv)), len(lw & (lv - lu))


def theta_decomposition(g, assignment, check=True):
    """
    Function that decomposes P(G, L) for G = theta(2,2,2k) as the sum over
    pairs (c, d) with c in L(u), d in L(v) (c != d when u and v are
    adjacent) of the product of the three path counts.

    Raises
    ------
    StructureError
        When ``g`` is not theta(2,2,2k).
    ChromaError
        When the decomposition disagrees with the direct count.
    """
    found = graph_core.theta_paths(g)
    if found is None:
        raise StructureError('theta_decomposition needs a theta graph')
    u, v, paths = found
    lists = assignment.lists
    tables = []
    for path in paths:
        seq = [lists[u]] + [lists[w] for w in path] + [lists[v]]
        tables.append(path_pair_counts(seq))
    pairs = tuple((c, d) for c in lists[u] for d in lists[v] if not (g.has_edge(u, v) and c == d))
    result = ThetaDecomposition(u, v, tuple(paths), pairs, tuple(tables))
    if not check:
        return result
    direct = count_list_colorings(g, assignment).value
    if result.total() != direct:
        raise ChromaError('theta decomposition gives %i, direct count gives %i' % (result.total(), direct))
    return result
