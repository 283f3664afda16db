##
## canonical_lists.py
##
## restricted-growth enumeration of m-assignments: colors are renamed by
## first occurrence, so every assignment is visited once up to renaming
##

from itertools import combinations
from functools import lru_cache
from math import comb


def _compositions(total, limits):
    if not limits:
        if total == 0:
            yield ()
        return
    for t in range(min(total, limits[0]), -1, -1):
        for rest in _compositions(total - t, limits[1:]):
            yield (t,) + rest


def list_choices(masks, i, used, m, stabilizer=False):
    """
    Lists for vertex i when colors 0..used-1 already appear in ``masks[:i]``.
    A list is j old colors plus the next m - j fresh ones; larger j first.

    With ``stabilizer`` the old colors are grouped by the set of earlier
    vertices that contain them, and only the lowest colors of each group
    are used.
    """
    if not stabilizer:
        for j in range(min(m, used), -1, -1):
            fresh = ((1 << (m - j)) - 1) << used
            for pick in combinations(range(used), j):
                mask = fresh
                for x in pick:
                    mask |= 1 << x
                yield mask
        return
    groups = {}
    for x in range(used):
        sig = 0
        for v in range(i):
            if (masks[v] >> x) & 1:
                sig |= 1 << v
        groups.setdefault(sig, []).append(x)
    classes = sorted(groups.values(), key=lambda cls: cls[0])
    for j in range(min(m, used), -1, -1):
        fresh = ((1 << (m - j)) - 1) << used
        for counts in _compositions(j, [len(cls) for cls in classes]):
            mask = fresh
            for cls, t in zip(classes, counts):
                for x in cls[:t]:
                    mask |= 1 << x
            yield mask


def iter_canonical(n, m, prefix=(), stabilizer=False):
    """
    Yield canonical m-assignments on n vertices as tuples of bitmasks, in a
    fixed order; the first one is the constant assignment. ``prefix`` fixes
    the lists of the first vertices.
    """
    masks = list(prefix) + [0] * (n - len(prefix))
    used = 0
    for mask in prefix:
        used = max(used, mask.bit_length())

    def walk(i, used):
        if i == n:
            yield tuple(masks)
            return
        for mask in list_choices(masks, i, used, m, stabilizer):
            masks[i] = mask
            yield from walk(i + 1, max(used, mask.bit_length()))
        masks[i] = 0

    yield from walk(len(prefix), used)


def canonical_prefixes(n, m, depth, stabilizer=False):
    """The canonical prefixes of length ``depth``, in enumeration order."""
    return list(iter_canonical(depth, m, stabilizer=stabilizer)) if depth else [()]


def count_canonical_assignments(n, m, used=0, start=0):
    """
    Number of canonical m-assignments on n vertices (without stabilizer
    pruning), optionally below a prefix of length ``start`` using ``used``
    colors.
    """

    @lru_cache(maxsize=None)
    def count(i, used):
        if i == n:
            return 1
        return sum(comb(used, j) * count(i + 1, used + m - j) for j in range(min(m, used) + 1))

    return count(start, used)
