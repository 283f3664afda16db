##
## lemma_checks.py
##
## validators for the counting identities and inequalities behind the
## list color function results, each with a seeded instance generator
##

import logging
from dataclasses import dataclass, field
from functools import lru_cache

import networkx as nx

from ChromaCount import graph_core
from ChromaCount.graph_core import Graph
from ChromaCount.chroma_exceptions import HypothesisError, BudgetExhausted, ChromaError
from ChromaCount.chroma_tools import make_rng
from ChromaCount.color_count import (ListAssignment, count_list_colorings, count_proper_colorings,
                                     theta_chromatic_polynomial)
from ChromaCount.list_search import list_color_function, SearchConfig
from ChromaCount.dp_color import (theta_dp_formula, count_dp_colorings, cover_from_list_assignment,
                                  complete_cover)
from ChromaCount.witnesses import theta_decomposition, path_pair_counts

logger = logging.getLogger(__name__)

# heuristic evaluations per instance of the join-of-bipartite search
JOIN_SEARCH_BUDGET = 200


@dataclass
class LemmaInstance:
    """One admissible input of a validator; unused fields stay None."""
    graph: Graph
    m: int
    assignment: ListAssignment = None
    k: int = None
    edge: tuple = None
    pin: tuple = None
    offsets: tuple = None
    vertex: int = None
    description: str = ''


@dataclass
class LemmaReport:
    lemma: str
    description: str
    lhs: int
    rhs: int
    relation: str
    holds: bool
    heuristic: bool = False
    counterexample: str = None
    detail: dict = field(default_factory=dict)

    @property
    def verdict(self):
        if not self.holds:
            return 'violated'
        return 'no-violation-found' if self.heuristic else 'holds'


@dataclass
class LemmaSummary:
    lemma: str
    trials: int
    violations: int
    first_violation: LemmaReport = None

    @property
    def passed(self):
        return self.violations == 0


def _compare(lhs, rhs, relation):
    if relation == '>=':
        return lhs >= rhs
    if relation == '<=':
        return lhs <= rhs
    return lhs == rhs


def _report(lemma, instance, lhs, rhs, relation, extra_ok=True, heuristic=False, detail=None):
    holds = _compare(lhs, rhs, relation) and extra_ok
    counterexample = None
    if not holds and instance.assignment is not None:
        counterexample = instance.assignment.to_text()
    return LemmaReport(lemma, instance.description, lhs, rhs, relation, holds, heuristic, counterexample,
                       detail or {})


@lru_cache(maxsize=256)
def _theta(k):
    return graph_core.build_graph('theta:2,2,%i' % (2 * k))


@lru_cache(maxsize=4096)
def _exact_list_cf(g, m, config):
    report = list_color_function(g, m, mode='exact', config=config)
    if not report.is_exact:
        raise BudgetExhausted('P_l(G, %i) on %i vertices not settled within the budget' % (m, g.n), report)
    return report.value


def _require_theta(instance):
    if instance.k is None or instance.k < 2:
        raise HypothesisError('instance must be theta(2,2,2k) with k >= 2')
    if graph_core.theta_paths(instance.graph) is None:
        raise HypothesisError('instance graph is not a theta graph')


def _require_assignment(instance, sizes=None):
    if instance.assignment is None or len(instance.assignment) != instance.graph.n:
        raise HypothesisError('instance needs one list per vertex')
    if sizes is None:
        sizes = (instance.m,) * instance.graph.n
    if instance.assignment.sizes != tuple(sizes):
        raise HypothesisError('list sizes %s do not match %s' % (instance.assignment.sizes, tuple(sizes)))


# ..........................................................................................
#
# validators
#

def check_pendant(instance, config):
    """Adding a pendant vertex multiplies P_l(G, m) by m - 1 (exact on both sides)."""
    g, m = instance.graph, instance.m
    if not g.is_connected() or instance.vertex is None:
        raise HypothesisError('pendant check needs a connected graph and an attachment vertex')
    extended = g.add_pendant(instance.vertex)
    lhs = _exact_list_cf(extended, m, config)
    base = _exact_list_cf(g, m, config)
    return _report('pendant', instance, lhs, (m - 1) * base, '==', detail={'base': base})


def check_amgm(instance, config):
    """P(G, L)^(m^2) >= m^(2 m^2) times the product of every path count over all pairs."""
    _require_theta(instance)
    _require_assignment(instance)
    m = instance.m
    dec = theta_decomposition(instance.graph, instance.assignment, check=False)
    total = dec.total()
    product = 1
    for pair in dec.pairs:
        product *= dec.product(pair)
    lhs = total ** (m * m)
    rhs = m ** (2 * m * m) * product
    return _report('amgm', instance, lhs, rhs, '>=', detail={'count': total, 'pairs': len(dec.pairs)})


def check_path_pairs(instance, config):
    """
    On a path u, w, v every N(c, d) lies in [m - 2, m], exactly
    (k1 + k3)(k1 + k2) - k1 pairs reach m - 2, and that number is at most
    (a + m)^2 / 4 - a with a = |L(u) & L(v)|.
    """
    _require_assignment(instance)
    m = instance.m
    if instance.graph.n != 3 or instance.graph.edges() != [(0, 1), (1, 2)]:
        raise HypothesisError('path-pairs needs the path u, w, v')
    lu, lw, lv = (set(c) for c in instance.assignment.lists)
    table = path_pair_counts([sorted(lu), sorted(lw), sorted(lv)])
    in_range = all(m - 2 <= val <= m for val in table.values())
    minimal = sum(1 for val in table.values() if val == m - 2)
    k1 = len(lw & lu & lv)
    k2 = len(lw & (lu - lv))
    k3 = len(lw & (lv - lu))
    a = len(lu & lv)
    formula = (k1 + k3) * (k1 + k2) - k1
    detail = {'minimal_pairs': minimal, 'formula': formula, 'a': a, 'k': [k1, k2, k3], 'in_range': in_range}
    return _report('path-pairs', instance, 4 * minimal, (a + m) ** 2 - 4 * a, '<=',
                   extra_ok=in_range and minimal == formula, detail=detail)


def check_same_list(instance, config):
    """
    L(u) = L(v) gives P(G, L) >= P(G, m); on the long path the sums over
    distinct and equal end colors are at least the odd and even cycle counts.
    """
    _require_theta(instance)
    _require_assignment(instance)
    g, m, k = instance.graph, instance.m, instance.k
    lists = instance.assignment.lists
    dec = theta_decomposition(g, instance.assignment, check=False)
    if lists[dec.u] != lists[dec.v]:
        raise HypothesisError('same-list needs L(u) = L(v)')
    count = count_list_colorings(g, instance.assignment).value
    long_table = dec.tables[2]
    distinct = sum(val for (c, d), val in long_table.items() if c != d)
    equal = sum(val for (c, d), val in long_table.items() if c == d)
    odd_cycle = (m - 1) ** (2 * k + 1) - (m - 1)
    even_cycle = (m - 1) ** (2 * k) + (m - 1)
    internal = distinct >= odd_cycle and equal >= even_cycle
    detail = {'distinct_ends': distinct, 'equal_ends': equal, 'odd_cycle': odd_cycle, 'even_cycle': even_cycle}
    return _report('same-list', instance, count, theta_chromatic_polynomial(k, m), '>=', extra_ok=internal,
                   detail=detail)


def check_even_path(instance, config):
    """
    On a path with 2k edges, N(c, d) m (m - 1) >= (m-1)^(2k+1) - (m-1) for
    every pair, and at least m pairs have N(c, d) m >= (m-1)^(2k) + (m-1).
    """
    _require_assignment(instance)
    m, k = instance.m, instance.k
    if m < 3 or k is None or instance.graph.n != 2 * k + 1:
        raise HypothesisError('even-path needs m >= 3 and a path on 2k + 1 vertices')
    table = path_pair_counts([list(c) for c in instance.assignment.lists])
    low = (m - 1) ** (2 * k + 1) - (m - 1)
    high = (m - 1) ** (2 * k) + (m - 1)
    all_low = all(val * m * (m - 1) >= low for val in table.values())
    reaching = sum(1 for val in table.values() if val * m >= high)
    detail = {'min_count': min(table.values()), 'all_pairs_bounded': all_low}
    return _report('even-path', instance, reaching, m, '>=', extra_ok=all_low, detail=detail)


def _theta_distinct_ends(instance, m_required):
    _require_theta(instance)
    _require_assignment(instance)
    if not m_required(instance.m):
        raise HypothesisError('list size %i outside the lemma range' % instance.m)
    dec = theta_decomposition(instance.graph, instance.assignment, check=False)
    lists = instance.assignment.lists
    if lists[dec.u] == lists[dec.v]:
        raise HypothesisError('needs L(u) != L(v)')
    count = count_list_colorings(instance.graph, instance.assignment).value
    return count, theta_chromatic_polynomial(instance.k, instance.m)


def check_three_lists(instance, config):
    """m = 3 and L(u) != L(v) gives P(G, L) >= P(G, 3)."""
    count, target = _theta_distinct_ends(instance, lambda m: m == 3)
    return _report('three-lists', instance, count, target, '>=')


def check_four_lists(instance, config):
    """m >= 4 and L(u) != L(v) gives P(G, L) >= P(G, m)."""
    count, target = _theta_distinct_ends(instance, lambda m: m >= 4)
    return _report('four-lists', instance, count, target, '>=')


def _pinned_count(g, assignment, w, z, x, y):
    return count_list_colorings(g, assignment.pin(w, x).pin(z, y)).value


def _check_separated_edge(instance):
    if instance.edge is None or instance.pin is None:
        raise HypothesisError('instance needs an edge wz and colors x, y')
    w, z = instance.edge
    x, y = instance.pin
    if not instance.graph.has_edge(w, z):
        raise HypothesisError('(%i, %i) is not an edge' % (w, z))
    lists = instance.assignment.lists
    if x not in lists[w] or x in lists[z] or y not in lists[z] or y in lists[w]:
        raise HypothesisError('needs x in L(w) - L(z) and y in L(z) - L(w)')
    return w, z, x, y


def greedy_constant(k, m):
    return (m - 1) ** (2 * k - 1) * (m - 2) ** 2


def check_greedy(instance, config):
    """Pinning w to x and z to y still leaves (m-1)^(2k-1) (m-2)^2 colorings when m >= 4."""
    _require_theta(instance)
    _require_assignment(instance)
    if instance.m < 4:
        raise HypothesisError('greedy bound needs m >= 4')
    w, z, x, y = _check_separated_edge(instance)
    pinned = _pinned_count(instance.graph, instance.assignment, w, z, x, y)
    return _report('greedy', instance, pinned, greedy_constant(instance.k, instance.m), '>=')


def check_dp_gap(instance, config):
    """
    P(G, L) >= P_DP(G, m) + C d with d = |L(w) - L(z)| and C the greedy
    constant; also checked against the completed cover H_L with C the least
    pinned count over x in L(w), y in L(z), x != y.
    """
    _require_theta(instance)
    _require_assignment(instance)
    g, m, k = instance.graph, instance.m, instance.k
    if m < 4:
        raise HypothesisError('dp-gap uses the theta DP formula in the m >= 4 range')
    w, z, _, _ = _check_separated_edge(instance)
    lists = instance.assignment.lists
    d = len(set(lists[w]) - set(lists[z]))
    count = count_list_colorings(g, instance.assignment).value
    rhs = theta_dp_formula(k, m) + greedy_constant(k, m) * d

    completed = complete_cover(cover_from_list_assignment(g, instance.assignment))
    transversals = count_dp_colorings(g, completed).value
    least = min(_pinned_count(g, instance.assignment, w, z, x, y)
                for x in lists[w] for y in lists[z] if x != y)
    general = count >= transversals + least * d
    detail = {'d': d, 'completed_cover': transversals, 'least_pinned': least}
    return _report('dp-gap', instance, count, rhs, '>=', extra_ok=general, detail=detail)


def check_deletion(instance, config):
    """P(G, L) m^n >= P_l(G, m) prod(m + d_i) for lists of sizes m + d_i."""
    g, m = instance.graph, instance.m
    offsets = instance.offsets
    if offsets is None or len(offsets) != g.n or min(offsets) < 0:
        raise HypothesisError('deletion check needs a non-negative offset per vertex')
    _require_assignment(instance, sizes=[m + d for d in offsets])
    count = count_list_colorings(g, instance.assignment).value
    base = _exact_list_cf(g, m, config)
    product = 1
    for d in offsets:
        product *= m + d
    return _report('deletion', instance, count * m ** g.n, base * product, '>=', detail={'count': count, 'base': base})


def check_star(instance, config):
    """A star with 2-lists that are not all equal has at least 3 colorings."""
    g = instance.graph
    _require_assignment(instance)
    if instance.m != 2:
        raise HypothesisError('star check uses 2-assignments')
    if g.num_edges != g.n - 1 or g.degree(0) != g.n - 1:
        raise HypothesisError('star check needs K_{1,n} with the centre first')
    if len(set(instance.assignment.masks)) == 1:
        raise HypothesisError('star check needs lists that are not all equal')
    count = count_list_colorings(g, instance.assignment).value
    return _report('star', instance, count, 3, '>=')


def check_join_bipartite(instance, config, search_budget=JOIN_SEARCH_BUDGET, seed=0):
    """
    For connected bipartite G with P_l(G, 2) >= 1, a seeded heuristic looks
    for a 3-assignment of K_1 join G with fewer than 6 colorings.
    """
    g = instance.graph
    if not g.is_connected() or graph_core.bipartition(g) is None:
        raise HypothesisError('join-bipartite needs a connected bipartite graph')
    if _exact_list_cf(g, 2, config) < 1:
        raise HypothesisError('join-bipartite needs P_l(G, 2) >= 1')
    joined = Graph(1, (0,)).join(g)
    report = list_color_function(joined, 3, mode='heuristic', budget=search_budget, seed=seed)
    counterexample = report.witness.to_text() if report.hi < 6 else None
    out = LemmaReport('join-bipartite', instance.description, report.hi, 6, '>=', report.hi >= 6, True,
                      counterexample, {'evaluations': report.stats.visited})
    return out


def check_join(instance, config):
    """P(K_1 join G, m) = m P(G, m - 1)."""
    g, m = instance.graph, instance.m
    if m < 1:
        raise HypothesisError('join identity needs m >= 1')
    joined = Graph(1, (0,)).join(g)
    lhs = count_proper_colorings(joined, m).value
    rhs = m * count_proper_colorings(g, m - 1).value
    return _report('join', instance, lhs, rhs, '==')


def check_decomposition(instance, config):
    """The pair decomposition of a theta graph sums to P(G, L)."""
    _require_theta(instance)
    _require_assignment(instance)
    dec = theta_decomposition(instance.graph, instance.assignment, check=False)
    direct = count_list_colorings(instance.graph, instance.assignment).value
    return _report('decomposition', instance, dec.total(), direct, '==')


def check_dp_difference(instance, config):
    """P(G, m) - P_DP(G, m) = (m-1)^(2k) + 2(m-1)^2 + (m-1) - 2 for theta(2,2,2k)."""
    k, m = instance.k, instance.m
    if k is None or k < 2 or m < 2:
        raise HypothesisError('dp-difference needs k >= 2 and m >= 2')
    lhs = theta_chromatic_polynomial(k, m) - theta_dp_formula(k, m)
    rhs = (m - 1) ** (2 * k) + 2 * (m - 1) ** 2 + (m - 1) - 2
    return _report('dp-difference', instance, lhs, rhs, '==')


# ..........................................................................................
#
# instance generators
#

def random_lists(rng, sizes, pool):
    lists = []
    for size in sizes:
        lists.append(sorted(int(c) for c in rng.choice(pool, size=size, replace=False)))
    return ListAssignment.from_lists(lists)


def random_connected_graph(rng, n_min, n_max, p=0.5):
    n = int(rng.integers(n_min, n_max + 1))
    while True:
        G = nx.gnp_random_graph(n, p, seed=int(rng.integers(2 ** 31)))
        if nx.is_connected(G):
            return Graph.from_networkx(G)


def random_connected_bipartite(rng, n_min, n_max, p=0.6):
    n = int(rng.integers(n_min, n_max + 1))
    left = max(1, n // 2)
    while True:
        G = nx.bipartite.random_graph(left, n - left, p, seed=int(rng.integers(2 ** 31)))
        if nx.is_connected(G):
            return Graph.from_networkx(G)


def _theta_instance(rng, ks, ms, description):
    k = int(rng.choice(ks))
    m = int(rng.choice(ms))
    g = _theta(k)
    return k, m, g, '%s theta:2,2,%i m=%i' % (description, 2 * k, m)


def _gen_pendant(rng):
    m = 3 if rng.random() < 0.2 else 2
    g = random_connected_graph(rng, 2, 5 if m == 2 else 4)
    vertex = int(rng.integers(g.n))
    return LemmaInstance(g, m, vertex=vertex, description='n=%i m=%i pendant at v%i' % (g.n, m, vertex))


def _gen_amgm(rng):
    k, m, g, text = _theta_instance(rng, [2, 3], [2, 3], 'random lists on')
    return LemmaInstance(g, m, random_lists(rng, [m] * g.n, m + 3), k=k, description=text)


def _gen_path_pairs(rng):
    m = int(rng.choice([3, 4]))
    g = graph_core.build_graph('path:3')
    return LemmaInstance(g, m, random_lists(rng, [m] * 3, m + 3), description='path u,w,v m=%i' % m)


def _gen_same_list(rng):
    k, m, g, text = _theta_instance(rng, [2, 3], [3, 4], 'L(u)=L(v) on')
    lists = [list(c) for c in random_lists(rng, [m] * g.n, m + 3).lists]
    lists[g.n - 1] = lists[0]
    return LemmaInstance(g, m, ListAssignment.from_lists(lists), k=k, description=text)


def _gen_even_path(rng):
    k = int(rng.choice([1, 2, 3]))
    m = int(rng.choice([3, 4]))
    g = graph_core.build_graph('path:%i' % (2 * k + 1))
    return LemmaInstance(g, m, random_lists(rng, [m] * g.n, m + 3), k=k,
                         description='path with %i edges m=%i' % (2 * k, m))


def _gen_distinct_ends(rng, ms, description):
    k, m, g, text = _theta_instance(rng, [2, 3], ms, description)
    while True:
        assignment = random_lists(rng, [m] * g.n, m + 3)
        if assignment.masks[0] != assignment.masks[g.n - 1]:
            return LemmaInstance(g, m, assignment, k=k, description=text)


def _gen_three_lists(rng):
    return _gen_distinct_ends(rng, [3], 'L(u)!=L(v) on')


def _gen_four_lists(rng):
    return _gen_distinct_ends(rng, [4], 'L(u)!=L(v) on')


def _gen_separated(rng, ms):
    k, m, g, text = _theta_instance(rng, [2, 3], ms, 'separated edge on')
    while True:
        assignment = random_lists(rng, [m] * g.n, m + 3)
        lists = assignment.lists
        options = []
        for w, z in g.edges():
            for a, b in ((w, z), (z, w)):
                only_a = sorted(set(lists[a]) - set(lists[b]))
                only_b = sorted(set(lists[b]) - set(lists[a]))
                if only_a and only_b:
                    options.append((a, b, only_a, only_b))
        if not options:
            continue
        w, z, only_w, only_z = options[int(rng.integers(len(options)))]
        x = only_w[int(rng.integers(len(only_w)))]
        y = only_z[int(rng.integers(len(only_z)))]
        return LemmaInstance(g, m, assignment, k=k, edge=(w, z), pin=(x, y),
                             description='%s edge v%i-v%i' % (text, w, z))


def _gen_greedy(rng):
    return _gen_separated(rng, [4, 5])


def _gen_dp_gap(rng):
    return _gen_separated(rng, [4])


def _gen_deletion(rng):
    m = 2
    g = random_connected_graph(rng, 2, 5)
    offsets = tuple(int(d) for d in rng.integers(0, 3, size=g.n))
    assignment = random_lists(rng, [m + d for d in offsets], m + 3)
    return LemmaInstance(g, m, assignment, offsets=offsets, description='n=%i m=2 offsets %s' % (g.n, offsets))


def _gen_star(rng):
    leaves = int(rng.integers(1, 6))
    g = graph_core.build_graph('bipartite:1,%i' % leaves)
    while True:
        assignment = random_lists(rng, [2] * g.n, 4)
        if len(set(assignment.masks)) > 1:
            return LemmaInstance(g, 2, assignment, description='K_{1,%i}' % leaves)


def _gen_join_bipartite(rng, config=None):
    config = config or SearchConfig()
    while True:
        g = random_connected_bipartite(rng, 2, 5)
        if _exact_list_cf(g, 2, config) >= 1:
            return LemmaInstance(g, 3, description='K_1 join bipartite n=%i' % g.n)


def _gen_join(rng):
    n = int(rng.integers(1, 7))
    G = nx.gnp_random_graph(n, 0.5, seed=int(rng.integers(2 ** 31)))
    m = int(rng.integers(2, 6))
    return LemmaInstance(Graph.from_networkx(G), m, description='n=%i m=%i' % (n, m))


def _gen_decomposition(rng):
    k, m, g, text = _theta_instance(rng, [2, 3], [2, 3], 'random lists on')
    return LemmaInstance(g, m, random_lists(rng, [m] * g.n, m + 3), k=k, description=text)


def _gen_dp_difference(rng):
    k = int(rng.integers(2, 7))
    m = int(rng.integers(2, 9))
    return LemmaInstance(_theta(k), m, k=k, description='theta:2,2,%i m=%i' % (2 * k, m))


VALIDATORS = {
    'pendant': (check_pendant, _gen_pendant),
    'amgm': (check_amgm, _gen_amgm),
    'path-pairs': (check_path_pairs, _gen_path_pairs),
    'same-list': (check_same_list, _gen_same_list),
    'even-path': (check_even_path, _gen_even_path),
    'three-lists': (check_three_lists, _gen_three_lists),
    'four-lists': (check_four_lists, _gen_four_lists),
    'dp-gap': (check_dp_gap, _gen_dp_gap),
    'greedy': (check_greedy, _gen_greedy),
    'deletion': (check_deletion, _gen_deletion),
    'star': (check_star, _gen_star),
    'join-bipartite': (check_join_bipartite, _gen_join_bipartite),
    'join': (check_join, _gen_join),
    'decomposition': (check_decomposition, _gen_decomposition),
    'dp-difference': (check_dp_difference, _gen_dp_difference),
}


# reference tags accepted in place of the validator ids
LEMMA_REFS = {
    'pendant': 'L2.3',
    'amgm': 'C3.2',
    'path-pairs': 'L3.3ii',
    'same-list': 'L3.4',
    'even-path': 'L3.5',
    'three-lists': 'L3.6',
    'dp-gap': 'L3.7',
    'greedy': 'L3.8',
    'four-lists': 'L3.9',
    'dp-difference': 'L3.9dp',
    'deletion': 'L4.1',
    'star': 'O4.3',
    'join-bipartite': 'P4.4',
    'join': 'T1.6/T4.2',
    'decomposition': 'L3.1',
}

LEMMA_ALIASES = {ref: name for name, ref in LEMMA_REFS.items()}
LEMMA_ALIASES.update({'T1.6': 'join', 'T4.2': 'join'})


def resolve_lemma_id(lemma_id):
    """
    Function that maps a validator id or one of its reference tags
    (``LEMMA_ALIASES``) onto the key of ``VALIDATORS``.

    Raises
    ------
    ChromaError
        When ``lemma_id`` is neither.
    """
    if lemma_id in VALIDATORS:
        return lemma_id
    if lemma_id in LEMMA_ALIASES:
        return LEMMA_ALIASES[lemma_id]
    raise ChromaError('unknown lemma id [%s]; choose from %s' % (lemma_id, ', '.join(sorted(VALIDATORS))))


def _lookup(lemma_id):
    return VALIDATORS[resolve_lemma_id(lemma_id)]


def validate_lemma(lemma_id, instance, config=None):
    """
    Function that checks one validator on one instance.

    Parameters
    ----------
    lemma_id : str
        One of the keys of ``VALIDATORS`` or ``LEMMA_ALIASES``.

    instance : LemmaInstance

    config : SearchConfig or None
        Used for the exact list color function searches some checks need.

    Returns
    -------
    LemmaReport

    Raises
    ------
    HypothesisError
        When the instance is outside the validator's hypotheses.
    """
    check, _ = _lookup(lemma_id)
    return check(instance, config or SearchConfig())


def random_instance(lemma_id, rng, config=None):
    """Draw one admissible instance for ``lemma_id`` from ``rng``."""
    lemma_id = resolve_lemma_id(lemma_id)
    _, generate = _lookup(lemma_id)
    if lemma_id == 'join-bipartite':
        return generate(rng, config)
    return generate(rng)


def run_lemma(lemma_id, trials, seed, config=None, search_budget=JOIN_SEARCH_BUDGET):
    """
    Function that runs a validator on ``trials`` seeded random instances.
    Trial t draws from the generator seeded with (seed, t), so single
    trials can be replayed.

    Returns
    -------
    LemmaSummary
    """
    lemma_id = resolve_lemma_id(lemma_id)
    check, _ = _lookup(lemma_id)
    config = config or SearchConfig()
    violations = 0
    first = None
    for t in range(trials):
        rng = make_rng([seed, t])
        instance = random_instance(lemma_id, rng, config)
        if lemma_id == 'join-bipartite':
            report = check(instance, config, search_budget=search_budget, seed=seed + t)
        else:
            report = check(instance, config)
        if not report.holds:
            violations += 1
            if first is None:
                first = report
                logger.warning('%s violated on %s', lemma_id, instance.description)
    logger.info('%s: %i trials, %i violations', lemma_id, trials, violations)
    return LemmaSummary(lemma_id, trials, violations, first)
