#!/usr/bin/env python

# executing script for chromacount in command line.

import sys
import logging
import argparse

from ChromaCount import graph_core
from ChromaCount import lemma_checks
from ChromaCount.chroma_exceptions import ChromaError, UnsupportedFamilyError
from ChromaCount.chroma_tools import valid_range, write_report, default_threads
from ChromaCount.color_count import count_proper_colorings, count_list_colorings, closed_form
from ChromaCount.list_search import (SearchConfig, DEFAULT_BUDGET, DEFAULT_SEED, list_color_function, nu_tau,
                                     is_weakly_ecc, is_ecc)
from ChromaCount.dp_color import dp_color_function
from ChromaCount.witnesses import theta_witness_assignment, k224_witness
from ChromaCount import reports
from ChromaCount.reports import Report, Record, record_from_search, PASS, FAIL, NO_VIOLATION

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _common_options():
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument('--format', choices=['table', 'json'], default='table',
                        help='Output format on stdout. Default = table')
    parent.add_argument('--out', help='Also write the JSON report to this file.')
    parent.add_argument('--threads', type=int, default=None,
                        help='Worker processes. Default = $CHROMACOUNT_THREADS or 1')
    parent.add_argument('--seed', type=int, default=DEFAULT_SEED, help='Seed for randomized work. Default = 42')
    parent.add_argument('--budget', type=int, default=DEFAULT_BUDGET,
                        help='Work budget (search states or evaluations, never wall time). Default = 2000000')
    parent.add_argument('--timings', action='store_true', help='Include wall times in the output.')
    parent.add_argument('--progress', action='store_true', help='Show progress bars on stderr.')
    parent.add_argument('-v', '--verbose', action='count', default=0, help='-v for INFO, -vv for DEBUG logging.')
    return parent


def build_parser():
    common = _common_options()
    parser = argparse.ArgumentParser(prog='chromacount',
                                     description='Chromatic polynomials, list color functions and DP color '
                                                 'functions of small graphs.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('chrompoly', parents=[common], help='Count proper m-colorings, P(G, m).')
    p.add_argument('graph', help='Family spec, for example theta:2,2,4 or g6:A_')
    p.add_argument('--m', type=int, required=True, help='Number of colors.')

    p = sub.add_parser('listcf', parents=[common], help='List color function P_l(G, m).')
    p.add_argument('graph', help='Family spec.')
    p.add_argument('--m', type=int, required=True, help='List size.')
    mode = p.add_mutually_exclusive_group()
    mode.add_argument('--exact', dest='mode', action='store_const', const='exact', help='Exact search (default).')
    mode.add_argument('--heuristic', dest='mode', action='store_const', const='heuristic',
                      help='Seeded heuristic search, gives an upper bound.')
    p.set_defaults(mode='exact')
    p.add_argument('--strategy', choices=['frontier', 'leaves'], default='frontier',
                   help='Exact search engine. Default = frontier')
    p.add_argument('--stabilizer-pruning', action='store_true',
                   help='Skip assignments that differ by swapping colors no earlier list separates.')
    p.add_argument('--witness', action='store_true', help='Print the witness assignment.')

    p = sub.add_parser('dpcf', parents=[common], help='DP color function P_DP(G, m).')
    p.add_argument('graph', help='Family spec.')
    p.add_argument('--m', type=int, required=True, help='Fold size.')

    p = sub.add_parser('nu-tau', parents=[common], help='Bracket nu(G) and tau(G).')
    p.add_argument('graph', help='Family spec.')

    p = sub.add_parser('check-ecc', parents=[common], help='Decide (weak) enumerative chromatic-choosability.')
    p.add_argument('graph', help='Family spec.')
    p.add_argument('--weak', action='store_true', help='Only check m = chi(G).')

    p = sub.add_parser('classify', parents=[common], help='Classify connected bipartite graphs of a graph6 file.')
    p.add_argument('--in', dest='infile', required=True, help='graph6 file, one graph per line.')
    p.add_argument('--verify', action='store_true', help='Check every label against an exact P_l(G, 2).')

    p = sub.add_parser('witness', parents=[common], help='Print a known low-count list assignment.')
    p.add_argument('family', choices=['theta', 'k224'])
    p.add_argument('--k', type=int, default=2, help='Theta graphs: long path length 2k. Default = 2')

    p = sub.add_parser('validate', parents=[common], help='Run a validator on seeded random instances.')
    lemma_ids = sorted(lemma_checks.VALIDATORS) + sorted(lemma_checks.LEMMA_ALIASES)
    p.add_argument('--lemma', required=True, choices=lemma_ids,
                   help='Validator id or its reference tag (e.g. L2.3).')
    p.add_argument('--trials', type=int, default=100, help='Number of instances. Default = 100')

    p = sub.add_parser('reproduce-paper', parents=[common], help='Run the reproduction suite.')
    p.add_argument('--only', action='append', choices=list(reports.ROWS) + list(reports.ROW_ALIASES),
                   help='Run only this row or reference tag, e.g. Fig1 (repeatable).')
    p.add_argument('--trials', type=int, default=reports.DEFAULT_TRIALS,
                   help='Instances per validator. Default = 1000')
    p.add_argument('--search-budget', type=int, default=reports.DEFAULT_SEARCH_BUDGET,
                   help='Heuristic evaluations per search. Default = 100000')
    p.add_argument('--corpus', help='graph6 file replacing the atlas corpus of the classification row.')
    return parser


def _configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')


def _config(args, **extra):
    threads = default_threads() if args.threads is None else args.threads
    valid_range(threads, 1, 1024, name='threads')
    return SearchConfig(budget=args.budget, threads=threads, seed=args.seed, progress=args.progress, **extra)


def _emit(report, args, extra_text=None):
    if args.format == 'json':
        sys.stdout.write(report.to_json(args.timings))
    else:
        sys.stdout.write(report.to_table(args.timings))
        if extra_text:
            sys.stdout.write(extra_text)
    if args.out:
        write_report(report.as_dict(args.timings), args.out)


def _command_echo(argv):
    return ' '.join(['chromacount'] + list(argv))


# ..........................................................................................
#
# subcommands
#

def cmd_chrompoly(args, report):
    g = graph_core.build_graph(args.graph)
    value = count_proper_colorings(g, args.m).value
    try:
        expected = closed_form(args.graph, args.m).value
    except UnsupportedFamilyError:
        expected = None
    verdict = FAIL if expected is not None and expected != value else PASS
    report.add(Record('chrompoly', args.graph, args.m, value, value, value, 'exact', verdict,
                      detail={'closed_form': expected}))
    return None


def cmd_listcf(args, report):
    g = graph_core.build_graph(args.graph)
    config = _config(args, strategy=args.strategy, stabilizer_pruning=args.stabilizer_pruning)
    result = list_color_function(g, args.m, mode=args.mode, config=config)
    p = count_proper_colorings(g, args.m).value
    report.add(record_from_search('listcf', args.graph, args.m, result, detail={'P': p}))
    if not args.witness:
        return None
    return result.witness.to_text()


def cmd_dpcf(args, report):
    g = graph_core.build_graph(args.graph)
    result = dp_color_function(g, args.m, config=_config(args))
    report.add(record_from_search('dpcf', args.graph, args.m, result))
    return None


def _nu_tau_detail(result):
    points = []
    for point in result.points:
        points.append({'m': point.m, 'P': point.chromatic, 'lo': point.lo, 'hi': point.hi, 'status': point.status,
                       'equal': point.equal, 'source': point.source})
    return {'nu': list(result.nu), 'tau': list(result.tau), 'certified': result.certified, 'points': points}


def cmd_nu_tau(args, report):
    g = graph_core.build_graph(args.graph)
    result = nu_tau(g, config=_config(args))
    status = 'exact' if result.certified else 'bound'
    report.add(Record('nu', args.graph, value=result.nu[0] if result.certified else None, lo=result.nu[0],
                      hi=result.nu[1], status=status, detail=_nu_tau_detail(result)))
    report.add(Record('tau', args.graph, value=result.tau[0] if result.certified else None, lo=result.tau[0],
                      hi=result.tau[1], status=status))
    return None


def cmd_check_ecc(args, report):
    g = graph_core.build_graph(args.graph)
    if args.weak:
        verdict = is_weakly_ecc(g, config=_config(args))
        detail = dict(verdict.detail)
        anchor = 'weakly-ecc'
    else:
        verdict = is_ecc(g, config=_config(args))
        detail = _nu_tau_detail(verdict.detail)
        anchor = 'ecc'
    answer = {True: 'yes', False: 'no', None: 'unknown'}[verdict.answer]
    detail['reason'] = verdict.reason
    report.add(Record(anchor, args.graph, status=answer, witness=verdict.witness, detail=detail))
    return None


def cmd_classify(args, report):
    try:
        fh = open(args.infile, 'r', encoding='ascii')
    except OSError:
        raise ChromaError('Unable to read graph6 file %s' % args.infile)
    with fh:
        for record in reports.classify_stream(fh, verify=args.verify, config=_config(args), progress=args.progress):
            report.add(record)
    return None


def cmd_witness(args, report):
    if args.family == 'theta':
        if args.k < 2:
            raise ChromaError('theta witnesses need --k >= 2')
        spec = 'theta:2,2,%i' % (2 * args.k)
        g = graph_core.build_graph(spec)
        assignment = theta_witness_assignment(args.k)
        m = 2
    else:
        spec = 'multipartite:2,2,4'
        g, assignment = k224_witness()
        m = 3
    count = count_list_colorings(g, assignment).value
    p = count_proper_colorings(g, m).value
    report.add(Record('witness', spec, m, count, count, count, 'exact', PASS if count < p else FAIL, assignment,
                      {'P': p}))
    return assignment.to_text()


def cmd_validate(args, report):
    valid_range(args.trials, 1, 10 ** 7, name='trials')
    lemma_id = lemma_checks.resolve_lemma_id(args.lemma)
    summary = lemma_checks.run_lemma(lemma_id, args.trials, args.seed, config=_config(args))
    if not summary.passed:
        verdict = FAIL
    else:
        verdict = NO_VIOLATION if lemma_id == 'join-bipartite' else PASS
    detail = {'trials': summary.trials, 'violations': summary.violations}
    witness = None
    if summary.first_violation is not None:
        detail['first_violation'] = summary.first_violation.description
        witness = summary.first_violation.counterexample
    report.add(Record('validate', lemma_id, value=summary.trials - summary.violations, status='exact',
                      verdict=verdict, witness=witness, detail=detail, ref=lemma_checks.LEMMA_REFS[lemma_id]))
    return None


def cmd_reproduce_paper(args, report):
    corpus = None
    if args.corpus:
        corpus = graph_core.read_graph6_file(args.corpus)
    suite = reports.reproduce(only=args.only, seed=args.seed, config=_config(args), trials=args.trials,
                              search_budget=args.search_budget, corpus=corpus, command=report.command)
    report.records.extend(suite.records)
    return None


COMMANDS = {
    'chrompoly': cmd_chrompoly,
    'listcf': cmd_listcf,
    'dpcf': cmd_dpcf,
    'nu-tau': cmd_nu_tau,
    'check-ecc': cmd_check_ecc,
    'classify': cmd_classify,
    'witness': cmd_witness,
    'validate': cmd_validate,
    'reproduce-paper': cmd_reproduce_paper,
}


def main(argv=None):

    # Parse command line arguments.
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)

    report = Report(_command_echo(argv), args.seed)
    try:
        extra_text = COMMANDS[args.command](args, report)
    except ChromaError as err:
        print('Error: %s' % err, file=sys.stderr)
        return EXIT_USAGE

    _emit(report, args, extra_text)
    return EXIT_OK if report.passed else EXIT_VIOLATION


if __name__ == '__main__':
    sys.exit(main())
