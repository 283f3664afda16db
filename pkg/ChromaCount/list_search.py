##
## list_search.py
##
## the list color function P_l(G, m): exact and heuristic minimisation over
## m-assignments, choosability, list chromatic number, nu / tau and the
## enumeratively chromatic-choosable (ECC) queries
##

import enum
import time
import logging
from dataclasses import dataclass, field, replace
from concurrent.futures import ProcessPoolExecutor

import networkx as nx
from tqdm import tqdm

from ChromaCount import graph_core
from ChromaCount.chroma_exceptions import BudgetExhausted, UniverseError, ChromaError
from ChromaCount.chroma_tools import default_threads, make_rng
from ChromaCount.color_count import (ListAssignment, count_assignments, count_proper_colorings, count_list_colorings,
                                     greedy_lower_bound, UNIVERSE)
from ChromaCount.canonical_lists import iter_canonical, canonical_prefixes, count_canonical_assignments
from ChromaCount.frontier_search import FrontierSearch, FrontierBudgetExceeded
from ChromaCount.choosability import SinkCoverSearch, ChoosabilityBudgetExceeded
from ChromaCount.witnesses import structured_candidates, pendant_extension_witness

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 2000000
DEFAULT_SEED = 42

# heuristic search restarts from a random assignment this often
RESTART_EVERY = 64

# heuristic lists are drawn from this many colors beyond m
POOL_EXTRA = 3

# core classes of connected bipartite graphs with P_l(G, m) = P(G, m) for every m
ECC_CORES = ('K1', 'EvenCycle', 'K23')


class Status(str, enum.Enum):
    EXACT = 'exact'
    UPPER_BOUND = 'upper-bound'
    BUDGET_EXHAUSTED = 'budget-exhausted'


@dataclass(frozen=True)
class SearchConfig:
    """Search settings shared by the exact and heuristic modes."""
    budget: int = DEFAULT_BUDGET
    threads: int = None
    seed: int = DEFAULT_SEED
    strategy: str = 'frontier'
    stabilizer_pruning: bool = False
    progress: bool = False

    def __post_init__(self):
        if self.strategy not in ('frontier', 'leaves'):
            raise ChromaError('strategy must be "frontier" or "leaves", got [%s]' % self.strategy)
        if self.budget < 1:
            raise ChromaError('budget must be positive')

    @property
    def workers(self):
        return default_threads() if self.threads is None else self.threads


def resolve_config(config, **overrides):
    config = config or SearchConfig()
    overrides = {key: val for key, val in overrides.items() if val is not None}
    return replace(config, **overrides) if overrides else config


@dataclass
class SearchStats:
    visited: int = 0
    prunes: int = 0
    states: int = 0
    wall_time: float = 0.0

    def as_dict(self, timings=False):
        out = {'visited': self.visited, 'prunes': self.prunes, 'states': self.states}
        if timings:
            out['wall_time'] = round(self.wall_time, 6)
        return out


@dataclass
class SearchReport:
    """
    Result of a minimisation. ``lo <= true value <= hi``; when the status is
    exact the two agree and ``witness`` attains them.
    """
    lo: int
    hi: int
    witness: object
    status: Status
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def value(self):
        return self.hi if self.status == Status.EXACT else None

    @property
    def is_exact(self):
        return self.status == Status.EXACT


def _check_universe(g, m):
    if m < 1:
        raise ChromaError('m must be positive, got %i' % m)
    if m * g.n > UNIVERSE:
        raise UniverseError('m * n = %i exceeds the %i-color universe' % (m * g.n, UNIVERSE))


# ..........................................................................................
#
# enumeration
#

def enumerate_canonical_assignments(g, m, visitor, prefix=None, stabilizer=False):
    """
    Function that calls ``visitor`` on every canonical m-assignment of ``g``
    (colors renamed by first occurrence, vertices in index order) until it
    returns False.

    Parameters
    ----------
    g : Graph

    m : int

    visitor : callable
        Called with a ListAssignment; returning False stops the walk.

    prefix : ListAssignment or None
        Fixes the lists of the first vertices; must itself be canonical.

    stabilizer : bool
        Skip assignments that differ only by swapping colors that no earlier
        list separates.

    Returns
    -------
    int
        Number of assignments visited.
    """
    _check_universe(g, m)
    start = () if prefix is None else tuple(prefix.masks)
    visited = 0
    for masks in iter_canonical(g.n, m, prefix=start, stabilizer=stabilizer):
        visited += 1
        if visitor(ListAssignment(masks)) is False:
            break
    return visited


def _leaf_unit(args):
    """Minimise over the completions of one prefix; runs in worker processes."""
    g, m, prefix, incumbent, stabilizer = args
    best = incumbent
    best_masks = None
    visited = 0
    prunes = 0
    for masks in iter_canonical(g.n, m, prefix=prefix, stabilizer=stabilizer):
        visited += 1
        count = count_assignments(g, masks, cap=best)
        if count.capped:
            prunes += 1
            continue
        if count.value < best:
            best = count.value
            best_masks = masks
            if best == 0:
                break
    return best, best_masks, visited, prunes


def _split_depth(g, m, threads):
    depth = 0
    while depth < g.n and len(canonical_prefixes(g.n, m, depth)) < 4 * threads:
        depth += 1
    return depth


def _search_leaves(g, m, incumbent, witness, config, stats):
    total = count_canonical_assignments(g.n, m)
    if total > config.budget:
        return None
    threads = config.workers
    depth = _split_depth(g, m, threads) if threads > 1 else 0
    prefixes = canonical_prefixes(g.n, m, depth, stabilizer=config.stabilizer_pruning)
    logger.info('leaves search on %i vertices, m=%i: %i assignments in %i units', g.n, m, total, len(prefixes))

    results = []
    if threads > 1:
        jobs = [(g, m, prefix, incumbent, config.stabilizer_pruning) for prefix in prefixes]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for res in tqdm(pool.map(_leaf_unit, jobs), total=len(jobs), disable=not config.progress):
                results.append(res)
    else:
        current = incumbent
        for prefix in tqdm(prefixes, disable=not config.progress):
            res = _leaf_unit((g, m, prefix, current, config.stabilizer_pruning))
            current = min(current, res[0])
            results.append(res)

    best, best_witness = incumbent, witness
    for value, masks, visited, prunes in results:
        stats.visited += visited
        stats.prunes += prunes
        # lowest unit index wins ties, so the witness does not depend on scheduling
        if masks is not None and value < best:
            best, best_witness = value, ListAssignment(masks)
    return best, best_witness


# ..........................................................................................
#
# list color function
#

def _incumbent(g, m, stats):
    """Best of the constant lists and the structured witnesses."""
    constant = ListAssignment.constant(g.n, m)
    best = count_proper_colorings(g, m).value
    witness = constant
    for candidate in structured_candidates(g, m):
        stats.visited += 1
        count = count_assignments(g, candidate.masks, cap=best)
        if not count.capped and count.value < best:
            best, witness = count.value, candidate
    return best, witness


def _random_masks(rng, n, m, pool):
    masks = []
    for _ in range(n):
        mask = 0
        for c in rng.choice(pool, size=m, replace=False):
            mask |= 1 << int(c)
        masks.append(mask)
    return masks


def _mutate(rng, masks, pool):
    masks = list(masks)
    v = int(rng.integers(len(masks)))
    inside = [c for c in range(pool) if (masks[v] >> c) & 1]
    outside = [c for c in range(pool) if not (masks[v] >> c) & 1]
    if not outside:
        return masks
    drop = inside[int(rng.integers(len(inside)))]
    add = outside[int(rng.integers(len(outside)))]
    masks[v] = (masks[v] & ~(1 << drop)) | (1 << add)
    return masks


def _heuristic(g, m, config, stats):
    best, witness = _incumbent(g, m, stats)
    lower = greedy_lower_bound(g, m)
    rng = make_rng(config.seed)
    pool = min(m + POOL_EXTRA, UNIVERSE)
    current = None
    current_value = None
    for step in tqdm(range(config.budget), disable=not config.progress):
        if best <= lower:
            break
        if current is None or step % RESTART_EVERY == 0:
            candidate = _random_masks(rng, g.n, m, pool)
            threshold = best + 1
        else:
            candidate = _mutate(rng, current, pool)
            threshold = current_value + 1
        stats.visited += 1
        count = count_assignments(g, candidate, cap=threshold)
        if count.capped:
            stats.prunes += 1
            if current is None or step % RESTART_EVERY == 0:
                current, current_value = candidate, count.value
            continue
        current, current_value = candidate, count.value
        if count.value < best:
            best, witness = count.value, ListAssignment(tuple(candidate))
            logger.debug('heuristic step %i: new best %i', step, best)
    status = Status.EXACT if best <= lower else Status.UPPER_BOUND
    return SearchReport(min(lower, best), best, witness, status, stats)


def list_color_function(g, m, mode='exact', config=None, budget=None, seed=None):
    """
    Function that computes the list color function P_l(G, m), the minimum
    over all m-assignments L of the number of proper L-colorings.

    Parameters
    ----------
    g : Graph

    m : int
        List size, m >= 1 and m * n <= 128.

    mode : str
        'exact' searches every canonical m-assignment (sharing work through
        frontier states, or leaf by leaf with strategy 'leaves').
        'heuristic' evaluates ``budget`` seeded random and hill-climbing
        candidates on top of the structured witnesses.

    config : SearchConfig or None

    budget, seed : int or None
        Override the matching config fields.

    Returns
    -------
    SearchReport
        Exact, or an interval with the best witness when the budget ran out
        (exact mode) or for heuristic runs.
    """
    _check_universe(g, m)
    if mode not in ('exact', 'heuristic'):
        raise ChromaError('mode must be "exact" or "heuristic", got [%s]' % mode)
    config = resolve_config(config, budget=budget, seed=seed)
    stats = SearchStats()
    started = time.perf_counter()
    if mode == 'heuristic':
        report = _heuristic(g, m, config, stats)
    else:
        report = _exact(g, m, config, stats)
    stats.wall_time = time.perf_counter() - started
    logger.info('P_l(G, %i) on %i vertices: [%i, %i] %s', m, g.n, report.lo, report.hi, report.status.value)
    return report


def _exact(g, m, config, stats):
    best, witness = _incumbent(g, m, stats)
    lower = greedy_lower_bound(g, m)
    if best == 0 or best <= lower:
        return SearchReport(best, best, witness, Status.EXACT, stats)

    if config.strategy == 'leaves':
        found = _search_leaves(g, m, best, witness, config, stats)
        if found is None:
            return SearchReport(lower, best, witness, Status.BUDGET_EXHAUSTED, stats)
        best, witness = found
        return SearchReport(best, best, witness, Status.EXACT, stats)

    try:
        if best == 1:
            solver = SinkCoverSearch(g, m, budget=config.budget)
            try:
                bad = solver.solve()
            finally:
                stats.states += solver.work
            if bad is not None:
                return SearchReport(0, 0, bad, Status.EXACT, stats)
            return SearchReport(1, 1, witness, Status.EXACT, stats)
        search = FrontierSearch(g, m, best, budget=config.budget)
        try:
            value, found = search.solve()
        finally:
            stats.states += search.expanded
            stats.prunes += search.hits
    except (FrontierBudgetExceeded, ChoosabilityBudgetExceeded):
        logger.warning('exact search budget of %i exhausted; P_l in [%i, %i]', config.budget, lower, best)
        return SearchReport(lower, best, witness, Status.BUDGET_EXHAUSTED, stats)
    if found is not None:
        best, witness = value, found
    return SearchReport(best, best, witness, Status.EXACT, stats)


def is_m_choosable(g, m, config=None, budget=None):
    """
    Function that decides whether every m-assignment of ``g`` admits a proper
    coloring.

    Raises
    ------
    BudgetExhausted
        When the search could not finish; ``report`` carries what is known.
    """
    _check_universe(g, m)
    config = resolve_config(config, budget=budget)
    if count_proper_colorings(g, m).value == 0:
        return False
    if greedy_lower_bound(g, m) > 0:
        return True
    solver = SinkCoverSearch(g, m, budget=config.budget)
    try:
        bad = solver.solve()
    except ChoosabilityBudgetExceeded:
        report = SearchReport(0, 1, None, Status.BUDGET_EXHAUSTED, SearchStats(states=solver.work))
        raise BudgetExhausted('choosability search for m=%i exhausted its budget' % m, report)
    logger.debug('choosability m=%i: %s after %i steps', m, bad is None, solver.work)
    return bad is None


def list_chromatic_number(g, config=None, budget=None):
    """Smallest m with ``g`` m-choosable; starts from the chromatic number."""
    m = graph_core.chromatic_number(g)
    while True:
        if m * g.n > UNIVERSE:
            raise UniverseError('list chromatic number search reached m * n > %i' % UNIVERSE)
        if is_m_choosable(g, m, config=config, budget=budget):
            return m
        m += 1


# ..........................................................................................
#
# nu, tau and ECC
#

def theorem_certificate(g, m):
    """
    Name of a known result that guarantees P_l(G, m) = P(G, m), or None.

    - 'edge-bound': m >= |E| - 1
    - 'chordal': chordal graphs, every m
    - 'cycle': cycles, every m
    - 'bipartite-core': connected bipartite graphs whose core is K1, an even
      cycle or K_{2,3}, every m
    """
    if m >= g.num_edges - 1:
        return 'edge-bound'
    G = g.to_networkx()
    if nx.is_chordal(G):
        return 'chordal'
    if not g.is_connected():
        return None
    if all(d == 2 for d in g.degrees()):
        return 'cycle'
    if graph_core.bipartition(g) is not None and graph_core.core_class(g).kind in ECC_CORES:
        return 'bipartite-core'
    return None


@dataclass
class NuTauPoint:
    """One m of the nu / tau scan. ``equal`` is None while undecided."""
    m: int
    chromatic: int
    lo: int
    hi: int
    status: str
    equal: bool
    witness: object = None
    source: str = None


@dataclass
class NuTau:
    nu: tuple
    tau: tuple
    points: list

    @property
    def certified(self):
        return self.nu[0] == self.nu[1] and self.tau[0] == self.tau[1]


def _point(g, m, config):
    p = count_proper_colorings(g, m).value
    source = theorem_certificate(g, m)
    report = list_color_function(g, m, mode='exact', config=config)
    if report.is_exact:
        equal = report.value == p
        return NuTauPoint(m, p, report.lo, report.hi, 'exact', equal, None if equal else report.witness)
    if report.hi < p:
        # a witness below P(G, m) settles the gap without finishing the search
        return NuTauPoint(m, p, report.lo, report.hi, 'exact-gap', False, report.witness)
    if source is not None:
        return NuTauPoint(m, p, p, p, 'theorem', True, None, source)
    return NuTauPoint(m, p, report.lo, report.hi, 'heuristic', None)


def nu_tau(g, config=None, budget=None):
    """
    Function that scans m from the chromatic number to |E| - 1 and reports
    nu (least m with P_l(G, m) = P(G, m)) and tau (least m from which
    equality always holds), each as an interval (lo, hi).

    Every point is computed exactly when the budget allows, including
    m >= |E| - 1. A point that could not be finished is labelled 'theorem'
    when a known result covers it, otherwise 'heuristic' and the intervals
    widen.
    """
    config = resolve_config(config, budget=budget)
    chi = graph_core.chromatic_number(g)
    cap = max(chi, g.num_edges - 1)
    points = []
    for m in range(chi, cap + 1):
        if m * g.n > UNIVERSE:
            break
        points.append(_point(g, m, config))
        logger.debug('nu/tau point m=%i: %s', m, points[-1].status)

    last = points[-1].m if points else chi
    nu_lo = next((p.m for p in points if p.equal is not False), last + 1)
    nu_hi = next((p.m for p in points if p.equal is True), cap)
    gaps = [p.m for p in points if p.equal is False]
    tau_lo = max(gaps) + 1 if gaps else chi
    tau_hi = chi
    for p in points:
        if p.equal is not True:
            tau_hi = p.m + 1
    tau_hi = min(max(tau_hi, tau_lo), cap)
    return NuTau((nu_lo, max(nu_lo, nu_hi)), (tau_lo, tau_hi), points)


@dataclass
class EccVerdict:
    """``answer`` is True, False or None (undecided within the budget)."""
    answer: bool
    reason: str
    witness: object = None
    detail: object = None


def is_weakly_ecc(g, config=None, budget=None):
    """
    Function that decides whether P_l(G, chi) = P(G, chi). A structured
    witness below P(G, chi) answers False immediately; otherwise the exact
    search runs within the budget.
    """
    config = resolve_config(config, budget=budget)
    chi = graph_core.chromatic_number(g)
    p = count_proper_colorings(g, chi).value
    stats = SearchStats()
    best, witness = _incumbent(g, chi, stats)
    if best < p:
        return EccVerdict(False, 'witness', witness, {'m': chi, 'P': p, 'witness_count': best})
    report = list_color_function(g, chi, mode='exact', config=config)
    if report.is_exact:
        if report.value == p:
            return EccVerdict(True, 'exact', None, {'m': chi, 'P': p, 'P_l': report.value})
        return EccVerdict(False, 'exact', report.witness, {'m': chi, 'P': p, 'P_l': report.value})
    if report.hi < p:
        return EccVerdict(False, 'witness', report.witness, {'m': chi, 'P': p, 'witness_count': report.hi})
    source = theorem_certificate(g, chi)
    if source is not None:
        return EccVerdict(True, 'theorem:%s' % source, None, {'m': chi, 'P': p})
    return EccVerdict(None, 'budget', report.witness, {'m': chi, 'P': p, 'lo': report.lo, 'hi': report.hi})


def is_ecc(g, config=None, budget=None):
    """
    Function that decides whether P_l(G, m) = P(G, m) for every m: False with
    a witness at the first certified gap, True when every scanned point is
    certified equal, None otherwise.
    """
    result = nu_tau(g, config=config, budget=budget)
    for p in result.points:
        if p.equal is False:
            return EccVerdict(False, p.status, p.witness, result)
    if all(p.equal is True for p in result.points):
        return EccVerdict(True, 'scan', None, result)
    return EccVerdict(None, 'budget', None, result)


@dataclass
class BipartiteClass:
    """
    Classification of a connected bipartite graph. ``reason`` is the core
    class (K1, C<2k+2>, K23, theta:2,2,<2k> or Other). Graphs with a
    theta(2,2,2k) core carry a 2-assignment with exactly one coloring.
    """
    label: str
    reason: str
    witness: object = None
    witness_count: int = None

    @property
    def is_ecc(self):
        return self.label == 'ECC'


def classify_bipartite(g):
    """
    Function that classifies a connected bipartite graph as 'ECC' (core is
    K1, an even cycle or K_{2,3}) or 'NotECC'.

    For a theta(2,2,2k) core the theta witness is lifted through the pendant
    trees and its count is checked to be 1 < 2 = P(G, 2).

    Returns
    -------
    BipartiteClass

    Raises
    ------
    StructureError
        When ``g`` is disconnected or not bipartite.
    """
    core = graph_core.core_class(g)
    if core.kind in ECC_CORES:
        return BipartiteClass('ECC', str(core))
    if core.kind != 'Theta222k':
        return BipartiteClass('NotECC', str(core))
    witness = pendant_extension_witness(g)
    count = count_list_colorings(g, witness).value
    p = count_proper_colorings(g, 2).value
    if count != 1 or p != 2:
        raise ChromaError('lifted theta witness gives %i colorings against P(G, 2) = %i' % (count, p))
    return BipartiteClass('NotECC', str(core), witness, count)


def verify_classification(g, config=None, budget=None):
    """
    Check a bipartite classification against an exact P_l(G, 2): ECC graphs
    must have P_l(G, 2) = P(G, 2), NotECC graphs a strict gap.

    Returns
    -------
    tuple
        (BipartiteClass, SearchReport, agrees)
    """
    verdict = classify_bipartite(g)
    report = list_color_function(g, 2, mode='exact', config=config, budget=budget)
    if not report.is_exact:
        raise BudgetExhausted('P_l(G, 2) not settled within the budget', report)
    p = count_proper_colorings(g, 2).value
    agrees = (report.value == p) if verdict.is_ecc else (report.value < p)
    return verdict, report, agrees
