##
## dp_color.py
##
## correspondence (DP) colorings: covers, transversal counting and the
## DP color function by enumeration of co-tree permutations
##

import math
import time
import logging
import itertools
from dataclasses import dataclass
from concurrent.futures import ProcessPoolExecutor

import networkx as nx
from tqdm import tqdm

from ChromaCount.chroma_exceptions import (ChromaError, FoldSizeError, HypothesisError,
                                           DivisibilityError, UniverseError)
from ChromaCount.color_count import count_assignments, count_proper_colorings, greedy_lower_bound
from ChromaCount.list_search import SearchReport, SearchStats, Status, resolve_config
from ChromaCount.chroma_tools import make_rng, mask_to_colors

logger = logging.getLogger(__name__)

# largest fold size whose permutations are enumerated
MAX_FOLD = 8


@dataclass(frozen=True)
class Cover:
    """
    An m-fold cover of a graph. For edge ``edges[e] = (u, v)`` with u < v,
    ``perms[e][i] = j`` matches (u, i) with (v, j); -1 leaves (u, i)
    unmatched, which only happens in partial covers.
    """
    m: int
    edges: tuple
    perms: tuple

    def __post_init__(self):
        if len(self.edges) != len(self.perms):
            raise ChromaError('cover has %i edges but %i matchings' % (len(self.edges), len(self.perms)))
        for e, perm in enumerate(self.perms):
            if len(perm) != self.m:
                raise FoldSizeError('matching of edge %s has %i entries, fold is %i' % (self.edges[e], len(perm), self.m))
            image = [j for j in perm if j != -1]
            if len(set(image)) != len(image) or any(not 0 <= j < self.m for j in image):
                raise ChromaError('matching of edge %s is not injective' % (self.edges[e],))

    @classmethod
    def identity(cls, g, m):
        ident = tuple(range(m))
        return cls(m, tuple(g.edges()), tuple(ident for _ in g.edges()))

    @property
    def is_full(self):
        return all(-1 not in perm for perm in self.perms)

    def edge_maps(self):
        """Forbidden-value masks for the counting engine, both directions."""
        maps = {}
        for (u, v), perm in zip(self.edges, self.perms):
            forward = [0] * self.m
            backward = [0] * self.m
            for i, j in enumerate(perm):
                if j != -1:
                    forward[i] = 1 << j
                    backward[j] = 1 << i
            maps[(u, v)] = forward
            maps[(v, u)] = backward
        return maps

    def relabel(self, pis):
        """
        Rename the fiber of every vertex v by the permutation ``pis[v]``;
        the number of transversals does not change.
        """
        perms = []
        for (u, v), perm in zip(self.edges, self.perms):
            new = [-1] * self.m
            for i, j in enumerate(perm):
                if j != -1:
                    new[pis[u][i]] = pis[v][j]
            perms.append(tuple(new))
        return Cover(self.m, self.edges, tuple(perms))

    def without(self, e, i):
        """Remove the matching edge leaving (u, i) on cover edge ``e``."""
        perms = list(self.perms)
        perm = list(perms[e])
        perm[i] = -1
        perms[e] = tuple(perm)
        return Cover(self.m, self.edges, tuple(perms))

    def describe(self):
        return {'%i-%i' % edge: list(perm) for edge, perm in zip(self.edges, self.perms)}


def count_dp_colorings(g, cover, cap=None):
    """
    Function that counts the transversals of ``cover``: one fiber vertex per
    graph vertex with no two chosen vertices adjacent in the cover.

    Returns
    -------
    WideCount
    """
    if tuple(cover.edges) != tuple(g.edges()):
        raise ChromaError('cover edges do not match the graph')
    domains = [(1 << cover.m) - 1] * g.n
    return count_assignments(g, domains, edge_maps=cover.edge_maps(), cap=cap)


def cover_from_list_assignment(g, assignment):
    """
    Function that builds the cover H_L of an m-assignment: fiber vertex
    (v, i) is the i-th smallest color of L(v) and (u, i), (v, j) are
    adjacent when they name the same color. The result is usually partial.

    Raises
    ------
    FoldSizeError
        When the lists do not all have the same size.
    """
    m = assignment.m
    if m is None:
        raise FoldSizeError('lists have different sizes %s' % (sorted(set(assignment.sizes)),))
    lists = assignment.lists
    perms = []
    for u, v in g.edges():
        index_v = {c: j for j, c in enumerate(lists[v])}
        perms.append(tuple(index_v.get(c, -1) for c in lists[u]))
    return Cover(m, tuple(g.edges()), tuple(perms))


def complete_cover(cover):
    """
    Function that extends every partial matching of ``cover`` to a perfect
    one: unmatched fiber vertices are paired in increasing order with the
    lowest free partner.
    """
    perms = []
    for perm in cover.perms:
        free = [j for j in range(cover.m) if j not in perm]
        out = []
        for j in perm:
            if j == -1:
                j = free.pop(0)
            out.append(j)
        perms.append(tuple(out))
    return Cover(cover.m, cover.edges, tuple(perms))


def spanning_forest_edges(g):
    """Breadth-first spanning forest, each component rooted at its lowest vertex."""
    G = g.to_networkx()
    tree = set()
    for comp in sorted(nx.connected_components(G), key=min):
        for a, b in nx.bfs_edges(G, min(comp)):
            tree.add((min(a, b), max(a, b)))
    return tree


def _cover_unit(args):
    """Minimise over co-tree permutations with the first one fixed; runs in worker processes."""
    g, m, first, incumbent = args
    edges = g.edges()
    tree = spanning_forest_edges(g)
    cotree = [e for e, edge in enumerate(edges) if edge not in tree]
    ident = tuple(range(m))
    perms_all = list(itertools.permutations(range(m)))
    best = incumbent
    best_perms = None
    visited = 0
    rest = cotree[1:] if first is not None else cotree
    for combo in itertools.product(perms_all, repeat=len(rest)):
        perms = [ident] * len(edges)
        if first is not None:
            perms[cotree[0]] = first
        for e, perm in zip(rest, combo):
            perms[e] = perm
        visited += 1
        cover = Cover(m, tuple(edges), tuple(perms))
        count = count_dp_colorings(g, cover, cap=best)
        if not count.capped and count.value < best:
            best, best_perms = count.value, tuple(perms)
            if best == 0:
                break
    return best, best_perms, visited


def dp_color_function(g, m, config=None, budget=None):
    """
    Function that computes the DP color function P_DP(G, m), the minimum
    number of transversals over all m-fold covers.

    Every cover is equivalent to one whose spanning-forest edges carry the
    identity matching, so only the co-tree edges are enumerated over all m!
    permutations. When (m!)^(co-tree edges) exceeds the budget, ``budget``
    seeded random covers are tried instead and the report is an interval.

    Returns
    -------
    SearchReport
        The witness is a Cover.
    """
    if m < 1:
        raise ChromaError('m must be positive, got %i' % m)
    if m > MAX_FOLD:
        raise UniverseError('fold sizes above %i are not enumerated' % MAX_FOLD)
    config = resolve_config(config, budget=budget)
    stats = SearchStats()
    started = time.perf_counter()
    edges = g.edges()
    tree = spanning_forest_edges(g)
    cotree = [e for e, edge in enumerate(edges) if edge not in tree]
    identity = Cover.identity(g, m)
    best = count_proper_colorings(g, m).value
    witness = identity
    lower = greedy_lower_bound(g, m)
    total = math.factorial(m) ** len(cotree)
    logger.info('DP search on %i vertices, m=%i: %i co-tree edges, %i covers', g.n, m, len(cotree), total)

    if best == 0 or best <= lower:
        status = Status.EXACT
    elif total > config.budget:
        best, witness = _random_covers(g, m, cotree, best, witness, config, stats)
        status = Status.EXACT if best <= lower else Status.BUDGET_EXHAUSTED
    else:
        threads = config.workers
        if threads > 1 and cotree:
            jobs = [(g, m, perm, best) for perm in itertools.permutations(range(m))]
            with ProcessPoolExecutor(max_workers=threads) as pool:
                results = list(tqdm(pool.map(_cover_unit, jobs), total=len(jobs), disable=not config.progress))
        else:
            results = [_cover_unit((g, m, None, best))]
        for value, perms, visited in results:
            stats.visited += visited
            if perms is not None and value < best:
                best, witness = value, Cover(m, tuple(edges), perms)
        status = Status.EXACT
    stats.wall_time = time.perf_counter() - started
    lo = best if status == Status.EXACT else lower
    return SearchReport(lo, best, witness, status, stats)


def _random_covers(g, m, cotree, best, witness, config, stats):
    rng = make_rng(config.seed)
    edges = g.edges()
    ident = tuple(range(m))
    for _ in tqdm(range(config.budget), disable=not config.progress):
        perms = [ident] * len(edges)
        for e in cotree:
            perms[e] = tuple(int(j) for j in rng.permutation(m))
        cover = Cover(m, tuple(edges), tuple(perms))
        stats.visited += 1
        count = count_dp_colorings(g, cover, cap=best)
        if not count.capped and count.value < best:
            best, witness = count.value, cover
    return best, witness


def theta_dp_formula(k, m):
    """
    Function that evaluates the DP color function of theta(2,2,2k) in closed
    form, ((m-1)^(2k+4) - (m-1)^(2k) - 2(m-1)^2 + 2) / m.

    Raises
    ------
    DivisibilityError
        When the numerator is not divisible by m.
    """
    if k < 2 or m < 2:
        raise HypothesisError('theta DP formula needs k >= 2 and m >= 2, got k=%i, m=%i' % (k, m))
    numerator = (m - 1) ** (2 * k + 4) - (m - 1) ** (2 * k) - 2 * (m - 1) ** 2 + 2
    if numerator % m:
        raise DivisibilityError('numerator %i is not divisible by m=%i' % (numerator, m))
    return numerator // m


def iter_transversals(g, cover):
    """Yield every transversal as a tuple of fiber indices, in vertex order."""
    maps = cover.edge_maps()
    chosen = [-1] * g.n

    def extend(v):
        if v == g.n:
            yield tuple(chosen)
            return
        blocked = 0
        for w in g.neighbors(v):
            if w < v:
                blocked |= maps[(w, v)][chosen[w]]
        for i in mask_to_colors(((1 << cover.m) - 1) & ~blocked):
            chosen[v] = i
            yield from extend(v + 1)
        chosen[v] = -1

    yield from extend(0)
