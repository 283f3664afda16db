import os
import re
import json

import numpy as np

from ChromaCount.chroma_exceptions import ChromaError

# environment variable holding the default worker count
THREADS_ENV = 'CHROMACOUNT_THREADS'

_WITNESS_LINE = re.compile(r'^v(\d+):\s*\{([0-9,\s]*)\}\s*$')


def valid_range(inval, minval, maxval, name='Value'):
    if inval < minval or inval > maxval:
        raise ChromaError('%s %s is outside of range [%s, %s]' % (name, inval, minval, maxval))


def popcount(mask):
    return bin(mask).count('1')


def mask_to_colors(mask):
    """Return the sorted colors (bit positions) set in ``mask``."""
    colors = []
    c = 0
    while mask:
        if mask & 1:
            colors.append(c)
        mask >>= 1
        c += 1
    return colors


def colors_to_mask(colors):
    mask = 0
    for c in colors:
        mask |= 1 << int(c)
    return mask


def make_rng(seed):
    """
    Function that returns the seeded random generator used for every
    randomized procedure in the package.

    Parameters
    ----------
    seed : int or numpy.random.Generator
        Seed, or an existing generator which is passed through unchanged.

    Returns
    -------
    numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def default_threads():
    """Read the default worker count from CHROMACOUNT_THREADS (1 when unset)."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == '':
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise ChromaError('%s must be an integer, got [%s]' % (THREADS_ENV, raw))
    valid_range(threads, 1, 1024, name=THREADS_ENV)
    return threads


def format_witness(lists):
    """
    Function that writes a list assignment in the witness text format, one
    line per vertex: ``v<i>: {c1,c2,...}``.

    Parameters
    ----------
    lists : sequence of iterables of int
        Per-vertex colors.

    Returns
    -------
    str
        The witness text, newline terminated.
    """
    lines = []
    for idx, colors in enumerate(lists):
        lines.append('v%i: {%s}' % (idx, ','.join(str(c) for c in sorted(colors))))
    return '\n'.join(lines) + '\n'


def parse_witness(text):
    """
    Function that reads the witness text format back into per-vertex color
    tuples. Vertices must appear in order v0, v1, ...

    Parameters
    ----------
    text : str
        Witness text as written by ``format_witness``.

    Returns
    -------
    list of tuple of int
    """
    lists = []
    for line_no, line in enumerate(text.splitlines()):
        if line.strip() == '':
            continue
        match = _WITNESS_LINE.match(line.strip())
        if match is None:
            raise ChromaError('Malformed witness line %i: [%s]' % (line_no + 1, line))
        if int(match.group(1)) != len(lists):
            raise ChromaError('Witness line %i names v%s, expected v%i' % (line_no + 1, match.group(1), len(lists)))
        body = match.group(2).strip()
        colors = tuple(sorted(int(c) for c in body.split(','))) if body else ()
        lists.append(colors)
    return lists


def write_report(document, output_file):
    """
    Function that writes a report document to disk as JSON with sorted keys,
    so repeated runs with the same seed are byte-identical.

    Parameters
    ----------
    document : dict
        JSON-serialisable report.

    output_file : str
        Location and filename for the output file.

    Returns
    -------
    None
        No return value, but writes a .json file to disk
    """
    try:
        fh = open(output_file, 'w', encoding='utf-8')
    except OSError:
        raise ChromaError('Unable to write to file destination %s' % (output_file))

    with fh:
        fh.write(dumps_report(document))


def dumps_report(document):
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + '\n'
