"""
Tests for the chromacount command line.
"""

import json

import pytest

from ChromaCount.scripts.chromacount import main
from ChromaCount.graph_core import build_graph, to_graph6

THETA_WITNESS = 'v0: {1,3}\nv1: {1,2}\nv2: {2,3}\nv3: {1,3}\nv4: {2,3}\nv5: {1,2}\nv6: {1,2}\n'


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_chrompoly(capsys):
    assert main(['chrompoly', 'theta:2,2,4', '--m', '3', '--format', 'json']) == 0
    document = _json(capsys)
    (record,) = document['records']
    assert record['value'] == 102
    assert record['detail'] == {'closed_form': 102}
    assert document['command'] == 'chromacount chrompoly theta:2,2,4 --m 3 --format json'


def test_chrompoly_table(capsys):
    assert main(['chrompoly', 'g6:Bw', '--m', '3']) == 0
    out = capsys.readouterr().out
    assert '6' in out.splitlines()[1].split()
    assert out.endswith('passed: yes\n')


def test_bad_family_spec(capsys):
    assert main(['chrompoly', 'cycle:2', '--m', '3']) == 2
    err = capsys.readouterr().err
    assert err.startswith('Error:')
    assert 'byte 0' in err


def test_listcf_witness(capsys):
    assert main(['listcf', 'theta:2,2,4', '--m', '2', '--witness']) == 0
    out = capsys.readouterr().out
    assert out.endswith(THETA_WITNESS)


def test_listcf_json(capsys):
    assert main(['listcf', 'theta:2,2,4', '--m', '2', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert (record['value'], record['status'], record['detail']['P']) == (1, 'exact', 2)
    assert record['witness'] == THETA_WITNESS


def test_listcf_heuristic(capsys):
    assert main(['listcf', 'theta:2,2,4', '--m', '2', '--heuristic', '--budget', '30', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert record['status'] == 'upper-bound'
    assert record['hi'] == 1
    assert record['value'] is None


def test_dpcf(capsys):
    assert main(['dpcf', 'theta:2,2,4', '--m', '3', '--format', 'json', '--timings']) == 0
    (record,) = _json(capsys)['records']
    assert record['value'] == 78
    assert 'wall_time' in record


def test_nu_tau(capsys):
    assert main(['nu-tau', 'cycle:4', '--format', 'json']) == 0
    records = _json(capsys)['records']
    assert [rec['anchor'] for rec in records] == ['nu', 'tau']
    assert records[0]['value'] == 2
    assert records[1]['value'] == 2


def test_check_ecc(capsys):
    assert main(['check-ecc', 'multipartite:2,2,4', '--weak', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert record['anchor'] == 'weakly-ecc'
    assert record['status'] == 'no'
    assert record['detail']['reason'] == 'witness'

    assert main(['check-ecc', 'cycle:4', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert record['status'] == 'yes'


def test_classify(tmp_path, capsys):
    path = tmp_path / 'graphs.g6'
    path.write_text('>>graph6<<A_\nBw\n%s\n' % to_graph6(build_graph('theta:2,2,4')))
    assert main(['classify', '--in', str(path), '--format', 'json']) == 0
    records = _json(capsys)['records']
    assert [rec['status'] for rec in records] == ['ECC', 'skipped', 'NotECC']
    assert records[0]['witness'] is None
    assert records[2]['detail']['core'] == 'theta:2,2,4'
    assert records[2]['witness'] == THETA_WITNESS


def test_classify_missing_file(tmp_path, capsys):
    assert main(['classify', '--in', str(tmp_path / 'none.g6')]) == 2
    assert 'Error:' in capsys.readouterr().err


def test_witness(capsys):
    assert main(['witness', 'theta', '--k', '2']) == 0
    assert capsys.readouterr().out.endswith(THETA_WITNESS)
    assert main(['witness', 'k224', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert (record['value'], record['detail']['P']) == (4, 6)
    assert main(['witness', 'theta', '--k', '1']) == 2


def test_validate(capsys):
    assert main(['validate', '--lemma', 'star', '--trials', '5', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert record['verdict'] == 'pass'
    assert record['detail'] == {'trials': 5, 'violations': 0}


def test_validate_by_reference_tag(capsys):
    assert main(['validate', '--lemma', 'O4.3', '--trials', '5', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert (record['graph'], record['ref'], record['verdict']) == ('star', 'O4.3', 'pass')


def test_reproduce_single_row_by_reference_tag(capsys):
    assert main(['reproduce-paper', '--only', 'Fig1', '--format', 'json']) == 0
    (record,) = _json(capsys)['records']
    assert (record['anchor'], record['ref'], record['value']) == ('theta224-witness', 'Fig1', 1)
    assert record['witness'] == THETA_WITNESS


def test_reproduce_is_deterministic(tmp_path, capsys):
    out = tmp_path / 'report.json'
    argv = ['reproduce-paper', '--only', 'theta224-witness', '--only', 'k224', '--format', 'json', '--out', str(out)]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert out.read_text() == first
    document = json.loads(first)
    assert document['passed'] is True
    assert [rec['anchor'] for rec in document['records']] == ['theta224-witness', 'k224']


def test_threads_from_environment(monkeypatch, capsys):
    monkeypatch.setenv('CHROMACOUNT_THREADS', 'lots')
    assert main(['listcf', 'path:3', '--m', '2']) == 2
    assert 'CHROMACOUNT_THREADS' in capsys.readouterr().err


def test_usage_errors():
    with pytest.raises(SystemExit) as err:
        main(['listcf', 'path:3'])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        main(['reproduce-paper', '--only', 'no-such-row'])
