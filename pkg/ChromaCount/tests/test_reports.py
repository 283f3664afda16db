"""
Tests for report records, graph6 stream classification and the
reproduction suite (run with small trial counts).
"""

import json

import pytest

from ChromaCount import reports
from ChromaCount.reports import (Report, Record, reproduce, classify_stream, atlas_bipartite_graphs, portable_witness,
                                 PASS, FAIL, NO_VIOLATION)
from ChromaCount.graph_core import build_graph, to_graph6
from ChromaCount.dp_color import Cover
from ChromaCount.chroma_exceptions import ChromaError
from ChromaCount.witnesses import theta_witness_assignment
from ChromaCount.color_count import count_list_colorings


EXACT_ROWS = ['theta224-witness', 'theta-family', 'theta224-m2', 'closed-forms', 'dp-theta224', 'k224']


def test_exact_rows_pass():
    report = reproduce(only=EXACT_ROWS)
    assert report.passed
    anchors = [rec.anchor for rec in report.records]
    assert anchors[0] == 'theta224-witness'
    assert anchors.count('theta-family') == 7
    k224 = [rec for rec in report.records if rec.anchor == 'k224'][0]
    assert (k224.value, k224.detail['P'], k224.detail['z_colored_1']) == (4, 6, True)
    dp = [rec for rec in report.records if rec.anchor == 'dp-theta224'][0]
    assert dp.value == 78
    assert dp.detail['covers'] == 36
    assert dp.detail['transversals'] == 78


def test_closed_form_rows_cover_every_family():
    report = reproduce(only=['closed-forms'])
    graphs = [rec.graph for rec in report.records]
    assert graphs == ['bipartite', 'complete', 'cycle', 'path', 'theta', 'tree', 'theta:2,2,4']
    assert report.records[-1].value == 102


def test_validator_rows():
    report = reproduce(only=['validators', 'pendant', 'join'], trials=2)
    assert report.passed
    by_lemma = {rec.graph: rec for rec in report.records}
    assert len(report.records) == len(reports.VALIDATOR_ROWS) + 2
    assert by_lemma['join-bipartite'].verdict == NO_VIOLATION
    assert by_lemma['amgm'].verdict == PASS
    assert by_lemma['pendant'].detail['trials'] == 1
    assert (by_lemma['amgm'].ref, by_lemma['pendant'].ref, by_lemma['join'].ref) == ('C3.2', 'L2.3', 'T1.6/T4.2')


def test_search_rows():
    report = reproduce(only=['searches'], search_budget=20)
    assert report.passed
    assert [rec.graph for rec in report.records] == ['theta:2,2,4', 'join:complete:1+theta:2,2,4']
    assert [rec.ref for rec in report.records] == ['T3', 'P4.4']
    for rec in report.records:
        assert rec.verdict in (PASS, NO_VIOLATION)
        assert rec.detail['evaluations'] <= 21


def test_sandwich_row():
    (rec,) = reproduce(only=['dp-sandwich']).records
    assert rec.verdict == PASS
    assert rec.value == reports.SANDWICH_INSTANCES


def test_classification_row_on_small_corpus():
    corpus = atlas_bipartite_graphs(5)
    (rec,) = reproduce(only=['bipartite-classification'], corpus=corpus).records
    assert rec.verdict == PASS
    assert rec.detail['graphs'] == len(corpus)
    assert rec.detail['not_ecc'] == 0


def test_atlas_bipartite_graphs():
    # K1, K2, P3, then P4, the claw and C4
    assert len(atlas_bipartite_graphs(4)) == 6


def test_unknown_anchor():
    with pytest.raises(ChromaError):
        reproduce(only=['no-such-row'])


def test_resolve_anchors():
    assert reports.resolve_anchors(None) == list(reports.ROWS)
    assert reports.resolve_anchors(['Fig1']) == ['theta224-witness']
    assert reports.resolve_anchors(['AC5', 'dp-sandwich']) == ['dp-theta224', 'dp-sandwich']
    assert reports.resolve_anchors(['T1.7@n≤7', 'T2.1', 'T1.7']) == ['bipartite-classification']
    assert reports.resolve_anchors(['k224', 'P4.5', 'Fig3']) == ['k224']
    assert set(reports.ROW_REFS) == set(reports.ROWS) - {'validators', 'searches'}
    for keys in reports.ROW_ALIASES.values():
        assert set(keys) <= set(reports.ROWS)


def test_records_carry_reference_tags():
    report = reproduce(only=['Fig1', 'Fig3'])
    assert [(rec.anchor, rec.ref) for rec in report.records] == [('theta224-witness', 'Fig1'), ('k224', 'Fig3')]
    assert report.records[0].value == 1
    assert report.records[0].as_dict()['ref'] == 'Fig1'


def test_report_json_is_deterministic():
    first = reproduce(only=['theta224-witness', 'dp-sandwich'], seed=3).to_json()
    second = reproduce(only=['theta224-witness', 'dp-sandwich'], seed=3).to_json()
    assert first == second
    document = json.loads(first)
    assert document['tool'] == 'chromacount'
    assert document['seed'] == 3
    assert document['passed'] is True
    assert 'wall_time' not in document['records'][0]
    assert document['records'][0]['witness'].startswith('v0: {1,3}\n')


def test_timings_are_optional():
    record = Record('x', wall_time=0.25)
    assert 'wall_time' not in record.as_dict()
    assert record.as_dict(timings=True)['wall_time'] == 0.25


def test_table_output():
    report = Report('chromacount test', 42)
    report.add(Record('chrompoly', 'theta:2,2,4', 3, 102, 102, 102, 'exact'))
    table = report.to_table()
    lines = table.splitlines()
    assert lines[0].split() == ['anchor', 'ref', 'graph', 'm', 'value', 'lo', 'hi', 'status', 'verdict']
    assert lines[1].split() == ['chrompoly', '-', 'theta:2,2,4', '3', '102', '102', '102', 'exact', 'pass']
    assert lines[-1] == 'passed: yes'
    report.add(Record('chrompoly', 'cycle:5', 3, verdict=FAIL))
    assert not report.passed
    assert report.to_table().endswith('passed: no\n')


def test_portable_witness():
    assert portable_witness(None) is None
    assert portable_witness(theta_witness_assignment(2)).startswith('v0: {1,3}')
    cover = Cover(2, ((0, 1),), ((1, 0),))
    assert portable_witness(cover) == {'0-1': [1, 0]}


def test_classify_stream():
    theta = to_graph6(build_graph('theta:2,2,4'))
    lines = ['>>graph6<<A_\n', '\n', 'Bw\n', theta + '\n']
    records = classify_stream(lines)
    assert [rec.status for rec in records] == ['ECC', 'skipped', 'NotECC']
    assert records[0].graph == 'A_'
    assert records[1].detail['line'] == 3
    assert records[2].detail['core'] == 'theta:2,2,4'
    assert records[0].witness is None
    assert records[2].detail['witness_count'] == 1
    assert count_list_colorings(build_graph('theta:2,2,4'), records[2].witness) == 1
    assert records[2].as_dict()['witness'] == records[2].witness.to_text()


def test_classify_stream_verified():
    theta = to_graph6(build_graph('theta:2,2,4'))
    k23 = to_graph6(build_graph('bipartite:2,3'))
    records = classify_stream([theta, k23], verify=True)
    assert all(rec.verdict == PASS for rec in records)
    assert records[0].value == 1
    assert records[0].detail['choosable'] is True
    assert records[1].value == 2
