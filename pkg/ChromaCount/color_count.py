##
## color_count.py
##
## exact counting of proper colorings, list colorings and (through the
## generic engine) transversal colorings, plus the closed-form oracles
##

import logging
import functools
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from ChromaCount.chroma_exceptions import (ChromaError, CountOverflowError, UniverseError,
                                           UnsupportedFamilyError, HypothesisError)
from ChromaCount.chroma_tools import popcount, mask_to_colors, colors_to_mask, format_witness
from ChromaCount import graph_core

logger = logging.getLogger(__name__)

# colors are bit positions in a 128-bit universe
UNIVERSE = 128

U128_LIMIT = 1 << 128


@functools.total_ordering
class WideCount:
    """
    Non-negative count that may exceed 128 bits. ``capped`` means the
    counter stopped early and the true count is at least ``value``.
    """
    __slots__ = ('value', 'capped')

    def __init__(self, value, capped=False):
        if value < 0:
            raise ChromaError('counts are non-negative, got %i' % value)
        self.value = int(value)
        self.capped = bool(capped)

    @property
    def overflowed(self):
        """True when the count does not fit in an unsigned 128-bit word."""
        return self.value >= U128_LIMIT

    def to_u128(self):
        if self.overflowed:
            raise CountOverflowError('count %i does not fit in 128 bits' % self.value)
        return self.value

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, WideCount):
            return self.value == other.value and self.capped == other.capped
        if isinstance(other, int):
            return not self.capped and self.value == other
        return NotImplemented

    def __lt__(self, other):
        return self.value < int(other)

    def __hash__(self):
        return hash((self.value, self.capped))

    def __repr__(self):
        return 'WideCount(%i%s)' % (self.value, ', capped=True' if self.capped else '')

    def __str__(self):
        return ('>=%i' if self.capped else '%i') % self.value


@dataclass(frozen=True)
class ListAssignment:
    """
    Per-vertex color lists stored as bitmasks over the universe 0..127.
    Lists may have different sizes (singletons pin a vertex).
    """
    masks: tuple

    def __post_init__(self):
        for v, mask in enumerate(self.masks):
            if mask <= 0:
                raise ChromaError('list of vertex %i is empty' % v)
            if mask >> UNIVERSE:
                raise UniverseError('list of vertex %i uses a color outside 0..%i' % (v, UNIVERSE - 1))

    @classmethod
    def from_lists(cls, lists):
        for colors in lists:
            for c in colors:
                if not 0 <= int(c) < UNIVERSE:
                    raise UniverseError('color %s is outside 0..%i' % (c, UNIVERSE - 1))
        return cls(tuple(colors_to_mask(colors) for colors in lists))

    @classmethod
    def constant(cls, n, m):
        """Every vertex gets the colors 0..m-1."""
        if m > UNIVERSE:
            raise UniverseError('%i colors do not fit in the universe' % m)
        return cls(((1 << m) - 1,) * n)

    def __len__(self):
        return len(self.masks)

    @property
    def lists(self):
        return tuple(tuple(mask_to_colors(mask)) for mask in self.masks)

    @property
    def sizes(self):
        return tuple(popcount(mask) for mask in self.masks)

    @property
    def m(self):
        """Common list size, or None when sizes differ."""
        sizes = set(self.sizes)
        return sizes.pop() if len(sizes) == 1 else None

    def colors(self):
        union = 0
        for mask in self.masks:
            union |= mask
        return mask_to_colors(union)

    def relabel(self, sigma):
        """Apply a color map (dict or sequence indexed by color) to every list."""
        out = []
        for colors in self.lists:
            out.append([sigma[c] for c in colors])
        return ListAssignment.from_lists(out)

    def restrict(self, vertices):
        return ListAssignment(tuple(self.masks[v] for v in vertices))

    def pin(self, v, c):
        masks = list(self.masks)
        masks[v] = 1 << c
        return ListAssignment(tuple(masks))

    def extend(self, colors):
        return ListAssignment(self.masks + (colors_to_mask(colors),))

    def to_text(self):
        return format_witness(self.lists)


# ..........................................................................................
#
# counting engine
#

@dataclass(frozen=True)
class _Plan:
    order: tuple
    # vertices earlier in the order adjacent to order[i]
    back: tuple
    # vertices colored before position i that still have an uncolored neighbour
    frontier: tuple


@lru_cache(maxsize=4096)
def elimination_plan(g):
    """Max-degree-first order (ties by index) with back neighbours and frontiers."""
    order = tuple(sorted(range(g.n), key=lambda v: (-g.degree(v), v)))
    position = {v: i for i, v in enumerate(order)}
    back = tuple(tuple(w for w in g.neighbors(v) if position[w] < i) for i, v in enumerate(order))
    frontier = []
    for i in range(g.n + 1):
        frontier.append(tuple(order[j] for j in range(i)
                              if any(position[w] >= i for w in g.neighbors(order[j]))))
    return _Plan(order, back, tuple(frontier))


def count_assignments(g, domains, edge_maps=None, cap=None):
    """
    Count the choices of one value per vertex from ``domains`` (bitmasks)
    such that no edge is in conflict, by memoised backtracking along the
    elimination plan. The memo key is the values on the current frontier.

    ``edge_maps[(v, w)][x]`` is the mask of values forbidden at w when v
    takes x; without maps the forbidden value is x itself (list coloring).

    Returns
    -------
    WideCount
        Exact count, or ``cap`` flagged as capped once the count reaches it.
    """
    plan = elimination_plan(g)
    n = g.n
    value = [0] * n
    memo = {}

    def forbidden(i, v):
        mask = 0
        for w in plan.back[i]:
            if edge_maps is None:
                mask |= 1 << value[w]
            else:
                mask |= edge_maps[(w, v)][value[w]]
        return mask

    def walk(i):
        if i == n:
            return 1
        key = (i, tuple(value[w] for w in plan.frontier[i]))
        hit = memo.get(key)
        if hit is not None:
            return hit
        v = plan.order[i]
        avail = domains[v] & ~forbidden(i, v)
        if i == n - 1:
            total = popcount(avail)
        else:
            total = 0
            x = 0
            while avail:
                if avail & 1:
                    value[v] = x
                    total += walk(i + 1)
                    if cap is not None and total >= cap:
                        total = cap
                        break
                avail >>= 1
                x += 1
        if cap is not None and total > cap:
            total = cap
        memo[key] = total
        return total

    total = walk(0)
    capped = cap is not None and total >= cap
    return WideCount(total, capped=capped)


def count_list_colorings(g, assignment, cap=None):
    """
    Function that counts the proper colorings of ``g`` from the lists of
    ``assignment``.

    Parameters
    ----------
    g : Graph

    assignment : ListAssignment
        One list per vertex; sizes may differ.

    cap : int or None
        Stop once this many colorings are found; the result is then
        flagged ``capped`` and means "at least cap".

    Returns
    -------
    WideCount
    """
    if len(assignment) != g.n:
        raise ChromaError('assignment has %i lists for %i vertices' % (len(assignment), g.n))
    if cap is not None and cap <= 0:
        return WideCount(0, capped=True)
    return count_assignments(g, assignment.masks, cap=cap)


def count_proper_colorings(g, m):
    """P(G, m): the number of proper m-colorings of ``g``."""
    if m < 0:
        raise ChromaError('m must be non-negative')
    if m == 0:
        return WideCount(0)
    return count_list_colorings(g, ListAssignment.constant(g.n, m))


def iter_list_colorings(g, assignment):
    """Yield every proper coloring from ``assignment`` as a tuple of colors, in vertex order."""
    colors = [-1] * g.n

    def extend(v):
        if v == g.n:
            yield tuple(colors)
            return
        used = 0
        for w in g.neighbors(v):
            if w < v:
                used |= 1 << colors[w]
        for c in mask_to_colors(assignment.masks[v] & ~used):
            colors[v] = c
            yield from extend(v + 1)
        colors[v] = -1

    yield from extend(0)


# ..........................................................................................
#
# deletion / contraction
#

def chromatic_polynomial_dc(g, m):
    """P(G, m) by memoised deletion and contraction; independent of the backtracking counter."""

    @lru_cache(maxsize=None)
    def solve(n, edges):
        if not edges:
            return m ** n
        if len(edges) == n * (n - 1) // 2:
            return falling_factorial(m, n)
        u, v = edges[0]
        deleted = edges[1:]
        # contract v into u and renumber the vertices above v
        merged = set()
        for a, b in deleted:
            a = u if a == v else a
            b = u if b == v else b
            a = a - 1 if a > v else a
            b = b - 1 if b > v else b
            merged.add((min(a, b), max(a, b)))
        return solve(n, deleted) - solve(n - 1, tuple(sorted(merged)))

    return solve(g.n, tuple(g.edges()))


# ..........................................................................................
#
# closed forms
#

def falling_factorial(m, p):
    out = 1
    for i in range(p):
        out *= m - i
    return out


@lru_cache(maxsize=None)
def stirling2(n, k):
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def _multipartite(parts, m):
    total = 0

    def walk(i, classes, weight):
        nonlocal total
        if i == len(parts):
            total += weight * falling_factorial(m, classes)
            return
        for j in range(1, parts[i] + 1):
            walk(i + 1, classes + j, weight * stirling2(parts[i], j))

    walk(0, 0, 1)
    return total


def _path_ends(length, m, same):
    # colorings of a path with both end colors fixed, equal or distinct
    if same:
        return ((m - 1) ** length + (-1) ** length * (m - 1)) // m
    return ((m - 1) ** length - (-1) ** length) // m


def theta_chromatic_polynomial(k, m):
    """P(theta(2,2,2k), m) in closed form."""
    return (m - 2) ** 2 * ((m - 1) ** (2 * k + 1) - (m - 1)) + (m - 1) ** 2 * ((m - 1) ** (2 * k) + (m - 1))


def closed_form(family, m):
    """
    Function that evaluates P(G, m) in closed form for a supported family.

    Supported: paths (trees), cycles, complete graphs, complete bipartite
    and multipartite graphs, theta graphs, joins with a complete graph and
    pendant extensions of any supported family.

    Returns
    -------
    WideCount

    Raises
    ------
    UnsupportedFamilyError
        For graph6 input and joins where neither side is complete.
    """
    if isinstance(family, str):
        family = graph_core.parse_family_spec(family)
    if m < 0:
        raise ChromaError('m must be non-negative')
    return WideCount(_closed(family, m))


def _closed(spec, m):
    if isinstance(spec, graph_core.PathSpec):
        return m * (m - 1) ** (spec.n - 1)
    if isinstance(spec, graph_core.CycleSpec):
        return (m - 1) ** spec.n + (-1) ** spec.n * (m - 1)
    if isinstance(spec, graph_core.CompleteSpec):
        return falling_factorial(m, spec.n)
    if isinstance(spec, graph_core.MultipartiteSpec):
        if len(spec.parts) == 2 and 2 in spec.parts:
            other = spec.parts[1] if spec.parts[0] == 2 else spec.parts[0]
            return m * (m - 1) ** other + m * (m - 1) * (m - 2) ** other
        return _multipartite(spec.parts, m)
    if isinstance(spec, graph_core.ThetaSpec):
        lengths = tuple(sorted(spec.lengths))
        if len(lengths) == 3 and lengths[:2] == (2, 2) and lengths[2] % 2 == 0 and lengths[2] >= 4:
            return theta_chromatic_polynomial(lengths[2] // 2, m)
        if m == 0:
            return 0
        same = 1
        differ = 1
        for length in lengths:
            same *= _path_ends(length, m, True)
            differ *= _path_ends(length, m, False)
        return m * same + m * (m - 1) * differ
    if isinstance(spec, graph_core.JoinSpec):
        if isinstance(spec.left, graph_core.CompleteSpec):
            p, rest = spec.left.n, spec.right
        elif isinstance(spec.right, graph_core.CompleteSpec):
            p, rest = spec.right.n, spec.left
        else:
            raise UnsupportedFamilyError('no closed form for %s' % spec)
        if m < p:
            return 0
        return falling_factorial(m, p) * _closed(rest, m - p)
    if isinstance(spec, graph_core.PendantSpec):
        return (m - 1) ** spec.count * _closed(spec.base, m)
    raise UnsupportedFamilyError('no closed form for %s' % spec)


def greedy_lower_bound(g, m):
    """
    Lower bound on the number of colorings from any m-assignment: coloring
    in smallest-last order, each vertex has at least m minus its back degree
    choices.
    """
    if m < 1:
        raise HypothesisError('m must be positive')
    order = list(nx.coloring.strategy_smallest_last(g.to_networkx(), {}))
    seen = set()
    bound = 1
    for v in order:
        back = sum(1 for w in g.neighbors(v) if w in seen)
        bound *= max(0, m - back)
        seen.add(v)
    return bound
