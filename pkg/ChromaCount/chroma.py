##
## chroma.py
##
## contains user facing functionality
##

# NOTE - any new functions must be added to this list!
__all__ = ['load_graph', 'chromatic_polynomial', 'closed_form', 'count_list_colorings', 'list_color_function',
           'dp_color_function', 'is_m_choosable', 'list_chromatic_number', 'nu_tau', 'is_weakly_ecc', 'is_ecc',
           'classify_bipartite', 'classify_graph6_file', 'theta_witness', 'k224_witness', 'validate_lemma',
           'reproduce_paper', 'Graph', 'ListAssignment', 'Cover', 'SearchConfig', 'ChromaError']

from ChromaCount import graph_core as _graph_core
from ChromaCount import list_search as _list_search
from ChromaCount import dp_color as _dp_color
from ChromaCount import witnesses as _witnesses
from ChromaCount import lemma_checks as _lemma_checks
from ChromaCount import reports as _reports
from ChromaCount import chroma_tools as _chroma_tools
from ChromaCount.color_count import count_proper_colorings as _count_proper_colorings
from ChromaCount.color_count import count_list_colorings as _count_list_colorings
from ChromaCount.color_count import closed_form as _closed_form

from ChromaCount.graph_core import Graph
from ChromaCount.color_count import ListAssignment
from ChromaCount.dp_color import Cover
from ChromaCount.list_search import SearchConfig
from ChromaCount.chroma_exceptions import ChromaError


def load_graph(graph):
    """
    Function that turns a family spec (``theta:2,2,4``), a graph6 string
    prefixed with ``g6:`` or an existing Graph into a Graph.

    Parameters
    ----------
    graph : str or Graph

    Returns
    -------
    Graph
    """
    if isinstance(graph, Graph):
        return graph
    if not isinstance(graph, str):
        raise TypeError('graph must be a family spec string or a Graph')
    return _graph_core.build_graph(graph.strip())


def _as_lists(graph, lists):
    if isinstance(lists, ListAssignment):
        assignment = lists
    elif isinstance(lists, str):
        assignment = ListAssignment.from_lists(_chroma_tools.parse_witness(lists))
    else:
        assignment = ListAssignment.from_lists(lists)
    if len(assignment) != graph.n:
        raise ChromaError('%i lists given for a graph on %i vertices' % (len(assignment), graph.n))
    return assignment


def _config(budget=None, seed=None, threads=None, strategy=None, config=None):
    if threads is not None:
        _chroma_tools.valid_range(threads, 1, 1024, name='threads')
    return _list_search.resolve_config(config, budget=budget, seed=seed, threads=threads, strategy=strategy)


def chromatic_polynomial(graph, m):
    """
    Function that counts the proper m-colorings of a graph, P(G, m).

    Parameters
    ----------
    graph : str or Graph
        Family spec or Graph.

    m : int
        Number of colors, m >= 0.

    Returns
    -------
    int
    """
    return _count_proper_colorings(load_graph(graph), m).value


def closed_form(family, m):
    """P(G, m) from the closed form of a supported family spec (no enumeration)."""
    return _closed_form(family, m).value


def count_list_colorings(graph, lists):
    """
    Function that counts the proper colorings of a graph from per-vertex
    lists.

    Parameters
    ----------
    graph : str or Graph

    lists : ListAssignment, sequence of color lists or witness text
        Witness text is the ``v<i>: {c1,c2,...}`` format.

    Returns
    -------
    int
    """
    graph = load_graph(graph)
    return _count_list_colorings(graph, _as_lists(graph, lists)).value


def list_color_function(graph, m, mode='exact', budget=None, seed=None, threads=None, strategy=None, config=None):
    """
    Function that computes the list color function P_l(G, m), the fewest
    proper colorings any m-assignment allows.

    Parameters
    ----------
    graph : str or Graph

    m : int
        List size.

    mode : str
        'exact' (default) or 'heuristic'.

    budget : int
        Work budget: frontier states for exact searches, leaf evaluations for
        the 'leaves' strategy and for heuristic searches.

    seed : int
        Seed of the heuristic search.

    threads : int
        Worker processes; defaults to CHROMACOUNT_THREADS or 1.

    strategy : str
        'frontier' (default) or 'leaves'.

    config : SearchConfig
        Base settings the other arguments override.

    Returns
    -------
    SearchReport
        ``lo`` and ``hi`` bound the value; ``status`` says whether it is
        exact. ``witness`` is an assignment attaining ``hi``.
    """
    return _list_search.list_color_function(load_graph(graph), m, mode=mode,
                                            config=_config(budget, seed, threads, strategy, config))


def dp_color_function(graph, m, budget=None, seed=None, threads=None, config=None):
    """
    Function that computes the DP color function P_DP(G, m), the fewest
    transversals over m-fold covers.

    Returns
    -------
    SearchReport
        The witness is a Cover.
    """
    return _dp_color.dp_color_function(load_graph(graph), m, config=_config(budget, seed, threads, None, config))


def is_m_choosable(graph, m, budget=None):
    """True when every m-assignment of the graph has a proper coloring; raises BudgetExhausted when undecided."""
    return _list_search.is_m_choosable(load_graph(graph), m, budget=budget)


def list_chromatic_number(graph, budget=None):
    """
    Function that returns the list chromatic number, the least m for which
    every m-assignment of the graph admits a proper coloring.

    Parameters
    ----------
    graph : str or Graph
        Family spec, ``g6:`` string or Graph.

    *optional arguments*

    budget : int
        Search budget for each choosability decision. Default is 2,000,000.

    Returns
    -------
    int
        The search starts at the chromatic number.
    """
    return _list_search.list_chromatic_number(load_graph(graph), budget=budget)


def nu_tau(graph, budget=None, threads=None):
    """
    Function that brackets nu(G), the least m with P_l(G, m) = P(G, m), and
    tau(G), the least m from which equality always holds.

    Returns
    -------
    NuTau
        ``nu`` and ``tau`` are (lo, hi) intervals; ``points`` holds one
        NuTauPoint per m scanned.
    """
    return _list_search.nu_tau(load_graph(graph), config=_config(budget, None, threads))


def is_weakly_ecc(graph, budget=None):
    """
    Decide P_l(G, chi) = P(G, chi). Returns an EccVerdict whose ``answer``
    is True, False or None (undecided within the budget).
    """
    return _list_search.is_weakly_ecc(load_graph(graph), budget=budget)


def is_ecc(graph, budget=None):
    """
    Function that decides whether P_l(G, m) = P(G, m) for every m.

    Parameters
    ----------
    graph : str or Graph
        Family spec, ``g6:`` string or Graph.

    *optional arguments*

    budget : int
        Search budget for each point of the scan. Default is 2,000,000.

    Returns
    -------
    EccVerdict
        ``answer`` is False with a witness at the first certified gap, True
        when every scanned point is equal, None when undecided. ``detail``
        holds the NuTau scan.
    """
    return _list_search.is_ecc(load_graph(graph), budget=budget)


def classify_bipartite(graph):
    """
    Function that classifies a connected bipartite graph as 'ECC' or
    'NotECC' from its core.

    Returns
    -------
    BipartiteClass
        ``label``, ``reason`` (the core class) and, for a theta(2,2,2k)
        core, a ``witness`` assignment with exactly one coloring.
    """
    return _list_search.classify_bipartite(load_graph(graph))


def classify_graph6_file(filename, verify=False, budget=None):
    """
    Function that classifies every connected bipartite graph of a graph6
    file (one graph per line).

    Parameters
    ----------
    filename : str
        Path to the graph6 file.

    verify : bool
        Check each label against an exact P_l(G, 2).

    Returns
    -------
    list of Record
    """
    try:
        fh = open(filename, 'r', encoding='ascii')
    except OSError:
        raise ChromaError('Unable to read graph6 file %s' % filename)
    with fh:
        return _reports.classify_stream(fh, verify=verify, config=_config(budget))


def theta_witness(k):
    """
    Return theta(2,2,2k) and its 2-assignment with exactly one proper
    coloring.

    Returns
    -------
    tuple
        (Graph, ListAssignment)
    """
    return _graph_core.build_graph('theta:2,2,%i' % (2 * k)), _witnesses.theta_witness_assignment(k)


def k224_witness():
    """Return K_{2,2,4} and its 3-assignment with four proper colorings."""
    return _witnesses.k224_witness()


def validate_lemma(lemma, trials=100, seed=42, budget=None):
    """
    Function that runs one validator on seeded random admissible instances.

    Parameters
    ----------
    lemma : str
        Validator id, one of ``ChromaCount.lemma_checks.VALIDATORS`` or its
        reference tag (``LEMMA_ALIASES``, e.g. L2.3).

    trials : int
        Number of instances.

    seed : int
        Trial t draws its instance from the generator seeded with (seed, t).

    Returns
    -------
    LemmaSummary
    """
    _chroma_tools.valid_range(trials, 1, 10 ** 7, name='trials')
    return _lemma_checks.run_lemma(lemma, trials, seed, config=_config(budget))


def reproduce_paper(only=None, seed=42, output_file=None, trials=1000, search_budget=100000, threads=None):
    """
    Function that runs the reproduction suite: the witnesses, exact counts,
    closed forms, DP values, the bipartite classification, validator
    regressions and heuristic searches.

    Parameters
    ----------
    only : list of str
        Row anchors to run; every row by default.

    seed : int
        Seed of every randomized row.

    output_file : str
        When given, the JSON report is written there.

    trials : int
        Random instances per validator.

    search_budget : int
        Heuristic evaluations per search.

    Returns
    -------
    Report
    """
    report = _reports.reproduce(only=only, seed=seed, config=_config(seed=seed, threads=threads),
                                trials=trials, search_budget=search_budget)
    if output_file is not None:
        _chroma_tools.write_report(report.as_dict(), output_file)
    return report
