"""
Tests for the shared helpers.
"""

import json

import numpy as np
import pytest

from ChromaCount import chroma_tools
from ChromaCount.chroma_exceptions import ChromaError


def test_witness_text_round_trip():
    lists = [(1, 3), (1, 2), (2, 3)]
    text = chroma_tools.format_witness(lists)
    assert text == 'v0: {1,3}\nv1: {1,2}\nv2: {2,3}\n'
    assert chroma_tools.parse_witness(text) == lists
    assert chroma_tools.parse_witness('v0: {3, 1}\n\nv1:{2}') == [(1, 3), (2,)]


@pytest.mark.parametrize('text', ['v1: {1,2}', 'v0: 1,2', 'x0: {1}', 'v0: {1,a}'])
def test_malformed_witness(text):
    with pytest.raises(ChromaError):
        chroma_tools.parse_witness(text)


def test_masks():
    assert chroma_tools.mask_to_colors(0b10110) == [1, 2, 4]
    assert chroma_tools.colors_to_mask([1, 2, 4]) == 0b10110
    assert chroma_tools.popcount(0b10110) == 3


def test_valid_range():
    chroma_tools.valid_range(3, 1, 3)
    with pytest.raises(ChromaError):
        chroma_tools.valid_range(0, 1, 3, name='threads')


def test_default_threads(monkeypatch):
    monkeypatch.delenv(chroma_tools.THREADS_ENV, raising=False)
    assert chroma_tools.default_threads() == 1
    monkeypatch.setenv(chroma_tools.THREADS_ENV, '4')
    assert chroma_tools.default_threads() == 4
    monkeypatch.setenv(chroma_tools.THREADS_ENV, 'many')
    with pytest.raises(ChromaError):
        chroma_tools.default_threads()
    monkeypatch.setenv(chroma_tools.THREADS_ENV, '0')
    with pytest.raises(ChromaError):
        chroma_tools.default_threads()


def test_make_rng():
    rng = np.random.default_rng(1)
    assert chroma_tools.make_rng(rng) is rng
    assert chroma_tools.make_rng(5).integers(1000) == np.random.default_rng(5).integers(1000)


def test_write_report(tmp_path):
    out = tmp_path / 'report.json'
    chroma_tools.write_report({'b': 1, 'a': [1, 2]}, str(out))
    text = out.read_text()
    assert text.endswith('\n')
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {'a': [1, 2], 'b': 1}
    with pytest.raises(ChromaError):
        chroma_tools.write_report({}, str(tmp_path / 'missing' / 'report.json'))
