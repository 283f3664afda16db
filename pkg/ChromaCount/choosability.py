##
## choosability.py
##
## search for an m-assignment with no proper coloring, with an independent
## set of vertices handled as a covering problem
##

import logging
from itertools import combinations

import networkx as nx

from ChromaCount.color_count import ListAssignment, iter_list_colorings
from ChromaCount.chroma_exceptions import UniverseError
from ChromaCount.chroma_tools import popcount, mask_to_colors
from ChromaCount.canonical_lists import iter_canonical

logger = logging.getLogger(__name__)


class ChoosabilityBudgetExceeded(Exception):
    """Internal signal: the covering search ran out of budget."""


def _independent_set(g):
    """A maximum independent set (largest clique of the complement)."""
    clique, _ = nx.max_weight_clique(nx.complement(g.to_networkx()), weight=None)
    return tuple(sorted(clique))


class SinkCoverSearch:
    """
    Decide whether some m-assignment of ``g`` has no proper coloring.

    An independent set I is split off. For each canonical assignment of
    G - I, every coloring phi of G - I is reduced to the color sets
    phi(N(z)) for z in I. A vertex z with list S kills phi exactly when S is
    contained in phi(N(z)), so the assignment extends to a bad one iff the
    lists of I can kill every phi. That covering question is answered by
    branching on an uncovered phi. Vertices of I with equal neighbourhoods
    are interchangeable and only the first unassigned one is branched on.

    Parameters
    ----------
    g : Graph

    m : int

    budget : int or None
        Maximum number of canonical assignments plus covering nodes.
    """

    def __init__(self, g, m, budget=None, stabilizer=True):
        if m * g.n > 128:
            raise UniverseError('m * n = %i exceeds the 128-color universe' % (m * g.n))
        self.g = g
        self.m = m
        self.budget = budget
        self.stabilizer = stabilizer
        self.work = 0
        self.sinks = _independent_set(g)
        self.rest = tuple(v for v in range(g.n) if v not in self.sinks)
        self.h = g.induced_subgraph(self.rest) if self.rest else None
        index = {v: i for i, v in enumerate(self.rest)}
        self.sink_nbrs = [tuple(index[w] for w in g.neighbors(z)) for z in self.sinks]
        # twin classes by neighbourhood
        self.twin_of = []
        seen = {}
        for z, nbrs in enumerate(self.sink_nbrs):
            self.twin_of.append(seen.setdefault(nbrs, z))

    def _tick(self):
        self.work += 1
        if self.budget is not None and self.work > self.budget:
            raise ChoosabilityBudgetExceeded()

    def solve(self):
        """
        Returns
        -------
        ListAssignment or None
            An assignment with no proper coloring, or None when ``g`` is
            m-choosable.
        """
        m = self.m
        if self.h is None:
            # edgeless: every vertex has a color
            return None
        for rest_masks in iter_canonical(self.h.n, m, stabilizer=self.stabilizer):
            self._tick()
            rest_assignment = ListAssignment(rest_masks)
            patterns = set()
            for coloring in iter_list_colorings(self.h, rest_assignment):
                pattern = []
                for nbrs in self.sink_nbrs:
                    mask = 0
                    for w in nbrs:
                        mask |= 1 << coloring[w]
                    pattern.append(mask)
                patterns.add(tuple(pattern))
            used = 0
            for mask in rest_masks:
                used |= mask
            if not patterns:
                return self._assemble(rest_masks, {}, used)
            # a coloring no sink can ever kill rules this assignment out
            if any(all(popcount(mask) < m for mask in pattern) for pattern in patterns):
                continue
            cover = self._cover(sorted(patterns), frozenset(range(len(self.sinks))))
            if cover is not None:
                return self._assemble(rest_masks, cover, used)
        return None

    def _cover(self, remaining, free):
        if not remaining:
            return {}
        self._tick()
        # branch on the coloring with the fewest ways to kill it
        best_options = None
        for pattern in remaining:
            options = []
            for z in sorted(free):
                if self.twin_of[z] != z and any(t in free and self.twin_of[t] == self.twin_of[z] and t < z
                                                for t in free):
                    continue
                colors = mask_to_colors(pattern[z])
                for pick in combinations(colors, self.m):
                    mask = 0
                    for x in pick:
                        mask |= 1 << x
                    options.append((z, mask))
            if best_options is None or len(options) < len(best_options):
                best_options = options
                if not options:
                    return None
        for z, mask in best_options:
            left = [p for p in remaining if p[z] & mask != mask]
            sub = self._cover(left, free - {z})
            if sub is not None:
                sub[z] = mask
                return sub
        return None

    def _assemble(self, rest_masks, cover, used):
        masks = [0] * self.g.n
        for i, v in enumerate(self.rest):
            masks[v] = rest_masks[i]
        fresh = used.bit_length()
        for z, vertex in enumerate(self.sinks):
            if z in cover:
                masks[vertex] = cover[z]
            else:
                masks[vertex] = ((1 << self.m) - 1) << fresh
        return ListAssignment(tuple(masks))
