##
## frontier_search.py
##
## exact minimisation of the number of list colorings over canonical
## m-assignments, sharing work between prefixes through frontier states
##

import logging
from itertools import combinations

from ChromaCount.color_count import ListAssignment
from ChromaCount.chroma_exceptions import UniverseError

logger = logging.getLogger(__name__)


class FrontierBudgetExceeded(Exception):
    """Internal signal: more states were expanded than the budget allows."""


class FrontierSearch:
    """
    Exact min(threshold, P_l(G, m)) over canonical m-assignments.

    Vertices receive lists in index order. After vertex i - 1 the state is
    the lists of the frontier (assigned vertices with an unassigned
    neighbour), renamed by first occurrence, together with the table of
    coloring counts of the assigned part indexed by the frontier colors.
    Counts are clipped at the threshold, so two prefixes with the same state
    have the same best completion and the search is memoised on states.

    Parameters
    ----------
    g : Graph

    m : int
        List size.

    threshold : int
        Counts at or above this are treated as equal; pass the best value
        already known.

    budget : int or None
        Maximum number of state expansions.
    """

    def __init__(self, g, m, threshold, budget=None):
        if m * g.n > 128:
            raise UniverseError('m * n = %i exceeds the 128-color universe' % (m * g.n))
        self.g = g
        self.m = m
        self.threshold = threshold
        self.budget = budget
        self.expanded = 0
        self.hits = 0
        self.memo = {}
        n = g.n
        # frontier[i]: vertices < i with a neighbour >= i, increasing
        self.frontier = [tuple(v for v in range(i) if any(w >= i for w in g.neighbors(v))) for i in range(n + 1)]
        self.has_later = [any(w > v for w in g.neighbors(v)) for v in range(n)]
        self.front_nbrs = [tuple(p for p, w in enumerate(self.frontier[v]) if g.has_edge(v, w)) for v in range(n)]

    # ......................................................................................
    def choices(self, i, lists):
        """
        Canonical lists for vertex i given the canonical frontier lists.
        Frontier colors are 0..c-1, fresh colors start at c. Lists with
        more old colors come first.
        """
        used = 0
        for mask in lists:
            used |= mask
        c = used.bit_length()
        if not self.has_later[i]:
            # only colors on frontier neighbours can matter
            relevant = 0
            for p in self.front_nbrs[i]:
                relevant |= lists[p]
        else:
            relevant = used
        old = [x for x in range(c) if (relevant >> x) & 1]
        m = self.m
        for j in range(min(m, len(old)), -1, -1):
            fresh = ((1 << (m - j)) - 1) << c
            for pick in combinations(old, j):
                mask = fresh
                for x in pick:
                    mask |= 1 << x
                yield mask

    def step(self, i, state, mask):
        """
        Give vertex i the list ``mask`` (canonical labels of ``state``).

        Returns
        -------
        tuple
            (next state or None when no coloring survives, renaming of the
            labels of ``state`` plus the new list into the next state's labels)
        """
        lists, table = state
        front = self.frontier[i]
        nbr_pos = self.front_nbrs[i]
        colors = [x for x in range(mask.bit_length()) if (mask >> x) & 1]
        grown = {}
        for key, weight in table:
            blocked = {key[p] for p in nbr_pos}
            for x in colors:
                if x in blocked:
                    continue
                new_key = key + (x,)
                grown[new_key] = grown.get(new_key, 0) + weight
        if not grown:
            return None, None

        nxt_front = self.frontier[i + 1]
        all_vertices = front + (i,)
        all_lists = lists + (mask,)
        keep = [p for p, v in enumerate(all_vertices) if v in nxt_front]

        projected = {}
        t = self.threshold
        for key, weight in grown.items():
            small = tuple(key[p] for p in keep)
            total = projected.get(small, 0) + weight
            projected[small] = total if total < t else t

        # rename colors by first occurrence over the kept lists
        rename = {}
        for p in keep:
            m_ = all_lists[p]
            x = 0
            while m_:
                if m_ & 1 and x not in rename:
                    rename[x] = len(rename)
                m_ >>= 1
                x += 1
        new_lists = []
        for p in keep:
            out = 0
            for x in range(all_lists[p].bit_length()):
                if (all_lists[p] >> x) & 1:
                    out |= 1 << rename[x]
            new_lists.append(out)
        new_table = tuple(sorted((tuple(rename[x] for x in key), w) for key, w in projected.items()))
        return (tuple(new_lists), new_table), rename

    # ......................................................................................
    def value(self, i, state):
        """min(threshold, best completion count) from ``state`` at vertex i."""
        if i == self.g.n:
            total = sum(w for _, w in state[1])
            return min(total, self.threshold)
        key = (i, state)
        hit = self.memo.get(key)
        if hit is not None:
            self.hits += 1
            return hit[0]
        self.expanded += 1
        if self.budget is not None and self.expanded > self.budget:
            raise FrontierBudgetExceeded()
        best = None
        best_mask = None
        for mask in self.choices(i, state[0]):
            nxt, _ = self.step(i, state, mask)
            val = 0 if nxt is None else self.value(i + 1, nxt)
            if best is None or val < best:
                best, best_mask = val, mask
            if best == 0:
                break
        self.memo[key] = (best, best_mask)
        return best

    def solve(self):
        """
        Run the search.

        Returns
        -------
        tuple
            (min(threshold, P_l), witness ListAssignment or None). The witness
            is only produced when the value is below the threshold.
        """
        start = ((), (((), 1),))
        best = self.value(0, start)
        logger.debug('frontier search: value %s, %i states, %i memo hits', best, self.expanded, self.hits)
        if best >= self.threshold:
            return best, None
        return best, self.replay(start)

    def replay(self, start):
        """Follow the memoised best choices and translate them to global colors."""
        state = start
        to_global = {}
        next_color = 0
        masks = []
        for i in range(self.g.n):
            if state is None:
                # no coloring survives: any lists complete the witness
                masks.append(((1 << self.m) - 1) << next_color)
                next_color += self.m
                continue
            entry = self.memo.get((i, state))
            if entry is None:
                mask = next(self.choices(i, state[0]))
            else:
                mask = entry[1]
            glob = 0
            for x in range(mask.bit_length()):
                if (mask >> x) & 1:
                    if x not in to_global:
                        to_global[x] = next_color
                        next_color += 1
                    glob |= 1 << to_global[x]
            masks.append(glob)
            nxt, rename = self.step(i, state, mask)
            if nxt is None:
                state = None
                continue
            to_global = {rename[x]: to_global[x] for x in rename}
            state = nxt
        return ListAssignment(tuple(masks))
