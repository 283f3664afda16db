"""
Tests for the restricted-growth enumeration of list assignments.
"""

import itertools

import pytest

from ChromaCount.canonical_lists import (iter_canonical, canonical_prefixes, count_canonical_assignments,
                                         list_choices)
from ChromaCount.color_count import count_assignments
from ChromaCount.graph_core import build_graph


def _first_occurrence_form(lists):
    """Rename colors by first occurrence, vertex by vertex, new colors of one list in increasing order."""
    rename = {}
    masks = []
    for colors in lists:
        for c in sorted(colors):
            if c not in rename:
                rename[c] = len(rename)
        mask = 0
        for c in colors:
            mask |= 1 << rename[c]
        masks.append(mask)
    return tuple(masks)


@pytest.mark.parametrize('n,m', [(1, 1), (2, 2), (3, 2), (3, 1), (2, 3), (4, 2)])
def test_count_matches_enumeration(n, m):
    assert len(list(iter_canonical(n, m))) == count_canonical_assignments(n, m)


def test_known_counts():
    # m = 1 gives restricted growth strings, counted by Bell numbers
    assert [count_canonical_assignments(n, 1) for n in range(1, 6)] == [1, 2, 5, 15, 52]
    assert count_canonical_assignments(2, 2) == 4
    assert count_canonical_assignments(3, 2) == 29


def test_first_assignment_is_constant():
    first = next(iter(iter_canonical(4, 3)))
    assert first == (0b111,) * 4


@pytest.mark.parametrize('n,m', [(2, 2), (3, 2)])
def test_every_assignment_has_its_canonical_form(n, m):
    pool = range(n * m)
    lists = list(itertools.combinations(pool, m))
    forms = set()
    for assignment in itertools.product(lists, repeat=n):
        forms.add(_first_occurrence_form(assignment))
    enumerated = list(iter_canonical(n, m))
    assert len(enumerated) == len(set(enumerated))
    assert forms == set(enumerated)


def test_prefix_split_preserves_order():
    whole = list(iter_canonical(4, 2))
    pieces = []
    for prefix in canonical_prefixes(4, 2, 2):
        pieces.extend(iter_canonical(4, 2, prefix=prefix))
    assert pieces == whole
    assert canonical_prefixes(4, 2, 0) == [()]


def test_list_choices_prefers_old_colors():
    choices = list(list_choices([0b11], 1, 2, 2))
    assert choices == [0b11, 0b101, 0b110, 0b1100]


@pytest.mark.parametrize('text', ['path:3', 'cycle:4', 'bipartite:2,3', 'complete:3'])
def test_stabilizer_keeps_the_minimum(text):
    g = build_graph(text)
    m = 2
    full = list(iter_canonical(g.n, m))
    pruned = list(iter_canonical(g.n, m, stabilizer=True))
    assert len(pruned) <= len(full)
    assert set(pruned) <= set(full)
    best_full = min(count_assignments(g, masks).value for masks in full)
    best_pruned = min(count_assignments(g, masks).value for masks in pruned)
    assert best_full == best_pruned
