##
## reports.py
##
## report records shared by every command, the graph6 stream classifier and
## the reproduction suite of the published counts, witnesses and bounds
##

import time
import logging
from dataclasses import dataclass, field

import networkx as nx
from tqdm import tqdm

from ChromaCount._version import __version__
from ChromaCount import graph_core
from ChromaCount.graph_core import Graph
from ChromaCount.chroma_exceptions import ChromaError
from ChromaCount.chroma_tools import make_rng, dumps_report
from ChromaCount.color_count import (ListAssignment, count_list_colorings, count_proper_colorings, closed_form,
                                     iter_list_colorings, theta_chromatic_polynomial)
from ChromaCount.list_search import (list_color_function, is_m_choosable, classify_bipartite, SearchConfig,
                                     DEFAULT_SEED, ECC_CORES)
from ChromaCount.dp_color import Cover, dp_color_function, theta_dp_formula, iter_transversals
from ChromaCount.witnesses import theta_witness_assignment, k224_witness
from ChromaCount.lemma_checks import run_lemma, random_connected_graph, LEMMA_REFS

logger = logging.getLogger(__name__)

TOOL = 'chromacount'

PASS = 'pass'
FAIL = 'fail'
NO_VIOLATION = 'no-violation-found'

# default sizes of the randomized rows
DEFAULT_TRIALS = 1000
DEFAULT_SEARCH_BUDGET = 100000
SANDWICH_INSTANCES = 50

# core classes that are 2-choosable
CHOOSABLE_CORES = ('K1', 'EvenCycle', 'K23', 'Theta222k')


def portable_witness(witness):
    """Witness in a JSON friendly form: list assignments as witness text, covers as matchings."""
    if witness is None:
        return None
    if isinstance(witness, ListAssignment):
        return witness.to_text()
    if isinstance(witness, Cover):
        return witness.describe()
    return str(witness)


@dataclass
class Record:
    anchor: str
    graph: str = None
    m: int = None
    value: int = None
    lo: int = None
    hi: int = None
    status: str = None
    verdict: str = PASS
    witness: object = None
    detail: dict = None
    wall_time: float = None
    ref: str = None

    @property
    def passed(self):
        return self.verdict != FAIL

    def as_dict(self, timings=False):
        out = {'anchor': self.anchor,
               'ref': self.ref,
               'graph': self.graph,
               'm': self.m,
               'value': self.value,
               'lo': self.lo,
               'hi': self.hi,
               'status': self.status,
               'verdict': self.verdict,
               'witness': portable_witness(self.witness),
               'detail': self.detail}
        if timings:
            out['wall_time'] = None if self.wall_time is None else round(self.wall_time, 6)
        return out


def record_from_search(anchor, graph, m, report, verdict=PASS, detail=None):
    """Record for a SearchReport (list or DP color function)."""
    return Record(anchor, graph, m, report.value, report.lo, report.hi, report.status.value, verdict,
                  report.witness, detail, report.stats.wall_time)


@dataclass
class Report:
    command: str
    seed: int = None
    records: list = field(default_factory=list)

    @property
    def passed(self):
        return all(rec.passed for rec in self.records)

    def add(self, record):
        self.records.append(record)
        return record

    def as_dict(self, timings=False):
        return {'tool': TOOL,
                'version': __version__,
                'command': self.command,
                'seed': self.seed,
                'records': [rec.as_dict(timings) for rec in self.records],
                'passed': self.passed}

    def to_json(self, timings=False):
        return dumps_report(self.as_dict(timings))

    def to_table(self, timings=False):
        """Plain text table, one row per record."""
        columns = ['anchor', 'ref', 'graph', 'm', 'value', 'lo', 'hi', 'status', 'verdict']
        if timings:
            columns.append('wall_time')
        rows = []
        for rec in self.records:
            entry = rec.as_dict(timings)
            rows.append(['-' if entry[c] is None else str(entry[c]) for c in columns])
        widths = [max([len(c)] + [len(r[i]) for r in rows]) for i, c in enumerate(columns)]
        lines = ['  '.join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
        for row in rows:
            lines.append('  '.join(val.ljust(w) for val, w in zip(row, widths)).rstrip())
        lines.append('passed: %s' % ('yes' if self.passed else 'no'))
        return '\n'.join(lines) + '\n'


def _timed(func, *args, **kwargs):
    started = time.perf_counter()
    records = func(*args, **kwargs)
    elapsed = time.perf_counter() - started
    for rec in records:
        if rec.wall_time is None:
            rec.wall_time = elapsed
    return records


def _verdict(ok):
    return PASS if ok else FAIL


# ..........................................................................................
#
# graph6 stream classification
#

def classify_graph(g, verify=False, config=None, name=None):
    """
    Function that classifies one connected bipartite graph by its core.

    With ``verify`` the label is checked against an exact P_l(G, 2) and
    2-choosability against the core class.

    Returns
    -------
    Record
        ``status`` is the label and ``detail['core']`` the core class.
        Theta(2,2,2k) cores carry the lifted one-coloring witness. ``value``
        holds P_l(G, 2) when verified; ``verdict`` is 'fail' on a
        disagreement.
    """
    name = name or graph_core.to_graph6(g)
    core = graph_core.core_class(g)
    verdict = classify_bipartite(g)
    detail = {'core': verdict.reason, 'n': g.n, 'edges': g.num_edges}
    if verdict.witness is not None:
        detail['witness_count'] = verdict.witness_count
    if not verify:
        return Record('classify', name, 2, status=verdict.label, witness=verdict.witness, detail=detail)
    report = list_color_function(g, 2, mode='exact', config=config)
    p = count_proper_colorings(g, 2).value
    choosable = is_m_choosable(g, 2, config=config)
    ok = report.is_exact and ((report.value == p) == (core.kind in ECC_CORES))
    ok = ok and (choosable == (core.kind in CHOOSABLE_CORES))
    detail.update({'P': p, 'choosable': choosable})
    witness = verdict.witness
    if witness is None and report.is_exact and report.value < p:
        witness = report.witness
    return Record('classify', name, 2, report.value, report.lo, report.hi, verdict.label, _verdict(ok), witness,
                  detail)


def classify_stream(lines, verify=False, config=None, progress=False):
    """
    Classify every graph in a graph6 stream (one graph per line, optional
    ``>>graph6<<`` header, blank lines skipped).
    """
    records = []
    for line_no, line in enumerate(tqdm(list(lines), disable=not progress)):
        text = line.strip()
        if text == '':
            continue
        g = graph_core.from_graph6(text)
        if text.startswith('>>graph6<<'):
            text = text[len('>>graph6<<'):]
        if not g.is_connected() or graph_core.bipartition(g) is None:
            records.append(Record('classify', text, 2, status='skipped',
                                  detail={'line': line_no + 1, 'reason': 'not connected and bipartite'}))
            continue
        records.append(classify_graph(g, verify=verify, config=config, name=text))
    return records


def atlas_bipartite_graphs(max_vertices=7):
    """Connected bipartite graphs on 1..max_vertices vertices from the networkx graph atlas."""
    out = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        if nx.is_connected(G) and nx.is_bipartite(G):
            out.append(Graph.from_networkx(G))
    return out


# ..........................................................................................
#
# reproduction rows
#

def _theta224():
    return graph_core.build_graph('theta:2,2,4')


def row_theta224_witness(ctx):
    g = _theta224()
    assignment = theta_witness_assignment(2)
    count = count_list_colorings(g, assignment).value
    return [Record('theta224-witness', 'theta:2,2,4', 2, count, count, count, 'exact', _verdict(count == 1),
                   assignment)]


def row_theta_family(ctx):
    records = []
    for k in range(2, 9):
        g = graph_core.build_graph('theta:2,2,%i' % (2 * k))
        assignment = theta_witness_assignment(k)
        count = count_list_colorings(g, assignment).value
        records.append(Record('theta-family', 'theta:2,2,%i' % (2 * k), 2, count, count, count, 'exact',
                              _verdict(count == 1), detail={'k': k}))
    return records


def row_theta224_m2(ctx):
    g = _theta224()
    report = list_color_function(g, 2, mode='exact', config=ctx.config)
    p = count_proper_colorings(g, 2).value
    ok = report.is_exact and report.value == 1 and p == 2
    return [record_from_search('theta224-m2', 'theta:2,2,4', 2, report, _verdict(ok), {'P': p})]


def _closed_form_points():
    for n in range(3, 11):
        for m in range(0, 7):
            yield 'cycle:%i' % n, m
    for n in range(1, 7):
        for m in range(0, 7):
            yield 'complete:%i' % n, m
    for n in range(1, 11):
        for m in range(0, 5):
            yield 'path:%i' % n, m
    for n in range(1, 7):
        for m in range(0, 6):
            yield 'bipartite:2,%i' % n, m
    for k in range(1, 5):
        for m in range(0, 7):
            yield 'theta:2,2,%i' % (2 * k), m


def _random_tree(rng, n):
    edges = [(v, int(rng.integers(v))) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def row_closed_forms(ctx):
    records = []
    by_family = {}
    for text, m in _closed_form_points():
        family = text.split(':')[0]
        g = graph_core.build_graph(text)
        counted = count_proper_colorings(g, m).value
        expected = closed_form(text, m).value
        total, bad = by_family.get(family, (0, []))
        if counted != expected:
            bad = bad + ['%s m=%i: %i != %i' % (text, m, counted, expected)]
        by_family[family] = (total + 1, bad)

    # trees other than paths: every tree on n vertices has P = m (m-1)^(n-1)
    rng = make_rng([ctx.seed, 0])
    total, bad = 0, []
    for _ in range(20):
        n = int(rng.integers(1, 11))
        tree = _random_tree(rng, n)
        for m in range(0, 5):
            expected = m * (m - 1) ** (n - 1) if n > 1 else m
            counted = count_proper_colorings(tree, m).value
            total += 1
            if counted != expected:
                bad.append('%s m=%i: %i != %i' % (graph_core.to_graph6(tree), m, counted, expected))
    by_family['tree'] = (total, bad)

    for family in sorted(by_family):
        total, bad = by_family[family]
        records.append(Record('closed-forms', family, value=total - len(bad), status='exact',
                              verdict=_verdict(not bad), detail={'points': total, 'mismatches': bad[:5]}))
    p = count_proper_colorings(_theta224(), 3).value
    formula = 4 * (2 ** 4 + 2) + 2 ** 5 - 2
    ok = p == 102 == formula == theta_chromatic_polynomial(2, 3)
    records.append(Record('closed-forms', 'theta:2,2,4', 3, p, p, p, 'exact', _verdict(ok)))
    return records


def row_dp_theta224(ctx):
    g = _theta224()
    report = dp_color_function(g, 3, config=ctx.config)
    formula = theta_dp_formula(2, 3)
    # recount the minimizing cover by listing its transversals
    listed = None if report.witness is None else sum(1 for _ in iter_transversals(g, report.witness))
    ok = report.is_exact and report.value == 78 == formula == listed and report.stats.visited == 36
    return [record_from_search('dp-theta224', 'theta:2,2,4', 3, report, _verdict(ok),
                               {'formula': formula, 'covers': report.stats.visited, 'transversals': listed})]


def row_dp_sandwich(ctx):
    rng = make_rng([ctx.seed, 1])
    failures = []
    for t in range(SANDWICH_INSTANCES):
        g = random_connected_graph(rng, 1, 5)
        dp = dp_color_function(g, 2, config=ctx.config)
        listcf = list_color_function(g, 2, mode='exact', config=ctx.config)
        p = count_proper_colorings(g, 2).value
        if not (dp.is_exact and listcf.is_exact and dp.value <= listcf.value <= p):
            failures.append({'trial': t, 'graph': graph_core.to_graph6(g), 'dp': dp.hi, 'list': listcf.hi, 'P': p})
    return [Record('dp-sandwich', 'random n<=5', 2, SANDWICH_INSTANCES - len(failures), status='exact',
                   verdict=_verdict(not failures), detail={'instances': SANDWICH_INSTANCES, 'failures': failures[:5]})]


def row_k224(ctx):
    g, assignment = k224_witness()
    p = count_proper_colorings(g, 3).value
    count = count_list_colorings(g, assignment).value
    z_part = [v for v in range(g.n) if g.label(v).startswith('z')]
    z_one = all(all(coloring[v] == 1 for v in z_part) for coloring in iter_list_colorings(g, assignment))
    ok = p == 6 and count == 4 and z_one
    return [Record('k224', 'multipartite:2,2,4', 3, count, count, count, 'exact', _verdict(ok), assignment,
                   {'P': p, 'z_colored_1': z_one})]


def row_bipartite_classification(ctx):
    graphs = ctx.corpus if ctx.corpus is not None else atlas_bipartite_graphs(7)
    records = classify_stream_graphs(graphs, ctx)
    mismatches = [rec.graph for rec in records if not rec.passed]
    ecc = sum(1 for rec in records if rec.status == 'ECC')
    return [Record('bipartite-classification', 'connected bipartite n<=7', 2, len(records) - len(mismatches),
                   status='exact', verdict=_verdict(not mismatches),
                   detail={'graphs': len(records), 'ecc': ecc, 'not_ecc': len(records) - ecc,
                           'mismatches': mismatches[:5]})]


def classify_stream_graphs(graphs, ctx):
    records = []
    for g in tqdm(graphs, disable=not ctx.config.progress):
        if g.is_connected() and graph_core.bipartition(g) is not None:
            records.append(classify_graph(g, verify=True, config=ctx.config))
    return records


def _lemma_row(anchor, lemma_id, trials, ctx, **kwargs):
    summary = run_lemma(lemma_id, trials, ctx.seed, config=ctx.config, **kwargs)
    heuristic = lemma_id == 'join-bipartite'
    if not summary.passed:
        verdict = FAIL
    else:
        verdict = NO_VIOLATION if heuristic else PASS
    witness = None
    detail = {'trials': summary.trials, 'violations': summary.violations}
    if summary.first_violation is not None:
        witness = summary.first_violation.counterexample
        detail['first_violation'] = summary.first_violation.description
    return Record(anchor, lemma_id, value=summary.trials - summary.violations,
                  status='heuristic' if heuristic else 'exact', verdict=verdict, witness=witness, detail=detail,
                  ref=LEMMA_REFS[lemma_id])


def row_pendant(ctx):
    return [_lemma_row('pendant', 'pendant', max(1, ctx.trials // 20), ctx)]


def row_join(ctx):
    return [_lemma_row('join', 'join', max(1, ctx.trials // 20), ctx)]


VALIDATOR_ROWS = ('amgm', 'path-pairs', 'same-list', 'even-path', 'three-lists', 'four-lists', 'dp-gap', 'greedy',
                  'deletion', 'star', 'decomposition', 'dp-difference', 'join-bipartite')


def row_validators(ctx):
    records = []
    for lemma_id in VALIDATOR_ROWS:
        records.append(_lemma_row('validators', lemma_id, ctx.trials, ctx))
    return records


def row_searches(ctx):
    records = []
    for text, target, ref in (('theta:2,2,4', 102, 'T3'), ('join:complete:1+theta:2,2,4', 6, 'P4.4')):
        g = graph_core.build_graph(text)
        p = count_proper_colorings(g, 3).value
        report = list_color_function(g, 3, mode='heuristic', config=ctx.config, budget=ctx.search_budget,
                                     seed=ctx.seed)
        if p != target:
            verdict = FAIL
        elif report.hi < p:
            verdict = FAIL
        else:
            verdict = PASS if report.is_exact else NO_VIOLATION
        rec = record_from_search('searches', text, 3, report, verdict, {'P': p, 'evaluations': report.stats.visited})
        rec.ref = ref
        records.append(rec)
    return records


ROWS = {
    'theta224-witness': row_theta224_witness,
    'theta-family': row_theta_family,
    'theta224-m2': row_theta224_m2,
    'closed-forms': row_closed_forms,
    'dp-theta224': row_dp_theta224,
    'dp-sandwich': row_dp_sandwich,
    'k224': row_k224,
    'bipartite-classification': row_bipartite_classification,
    'pendant': row_pendant,
    'join': row_join,
    'validators': row_validators,
    'searches': row_searches,
}

# reference tag of each row; validator and search records carry their own
ROW_REFS = {
    'theta224-witness': 'Fig1',
    'theta-family': 'L2.2',
    'theta224-m2': 'P1.8',
    'closed-forms': 'AC4',
    'dp-theta224': 'AC5',
    'dp-sandwich': 'AC5',
    'k224': 'Fig3',
    'bipartite-classification': 'T1.7@n<=7',
    'pendant': 'L2.3',
    'join': 'T1.6/T4.2',
}

ROW_ALIASES = {
    'Fig1': ('theta224-witness',),
    'L2.2': ('theta-family',),
    'P1.8': ('theta224-m2',),
    'AC4': ('closed-forms',),
    'AC5': ('dp-theta224', 'dp-sandwich'),
    'Fig3': ('k224',),
    'P4.5': ('k224',),
    'T1.7': ('bipartite-classification',),
    'T1.7@n<=7': ('bipartite-classification',),
    'T1.7@n≤7': ('bipartite-classification',),
    'T2.1': ('bipartite-classification',),
    'L2.3': ('pendant',),
    'T1.6': ('join',),
    'T4.2': ('join',),
    'T1.6/T4.2': ('join',),
    'T3': ('searches',),
    'P4.4': ('searches',),
}


def resolve_anchors(only=None):
    """
    Function that turns row names or reference tags (``ROW_ALIASES``) into
    the ordered, duplicate free list of ``ROWS`` keys to run.

    Raises
    ------
    ChromaError
        On a name that is neither.
    """
    if not only:
        return list(ROWS)
    anchors = []
    for name in only:
        if name in ROWS:
            keys = (name,)
        elif name in ROW_ALIASES:
            keys = ROW_ALIASES[name]
        else:
            raise ChromaError('unknown anchor [%s]; choose from %s' % (name, ', '.join(list(ROWS) + list(ROW_ALIASES))))
        for key in keys:
            if key not in anchors:
                anchors.append(key)
    return anchors


@dataclass
class SuiteContext:
    config: SearchConfig
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    search_budget: int = DEFAULT_SEARCH_BUDGET
    corpus: list = None


def reproduce(only=None, seed=DEFAULT_SEED, config=None, trials=DEFAULT_TRIALS, search_budget=DEFAULT_SEARCH_BUDGET,
              corpus=None, command='reproduce-paper'):
    """
    Function that runs the reproduction suite and collects one Report.

    Parameters
    ----------
    only : list of str or None
        Rows to run, as keys of ``ROWS`` or reference tags of
        ``ROW_ALIASES``; all rows when None.

    seed : int
        Seed of every randomized row. Trial t of a validator uses (seed, t).

    config : SearchConfig or None

    trials : int
        Random instances per validator; the pendant and join rows use a
        twentieth of this.

    search_budget : int
        Heuristic evaluations per search row.

    corpus : list of Graph or None
        Graphs for the bipartite classification row; defaults to the
        connected bipartite graphs of the networkx atlas on at most 7
        vertices.

    Returns
    -------
    Report
    """
    config = config or SearchConfig(seed=seed)
    anchors = resolve_anchors(only)
    ctx = SuiteContext(config, seed, trials, search_budget, corpus)
    report = Report(command, seed)
    for anchor in anchors:
        logger.info('reproduce: %s', anchor)
        for rec in _timed(ROWS[anchor], ctx):
            if rec.ref is None:
                rec.ref = ROW_REFS.get(anchor)
            report.add(rec)
            if not rec.passed:
                logger.warning('row %s (%s) failed', anchor, rec.graph)
    return report
