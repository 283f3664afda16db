##
## graph_core.py
##
## simple graphs on at most 31 vertices, the family spec language,
## graph6 I/O and the structural queries (core, bipartition, chromatic
## number, core classification)
##

import logging
import itertools
from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from ChromaCount.chroma_exceptions import (FamilySpecError, Graph6Error, GraphSizeError,
                                           StructureError, ChromaError)
from ChromaCount.chroma_tools import popcount

logger = logging.getLogger(__name__)

# vertex rows are single machine words in the original layout
MAX_VERTICES = 31

# exhaustive canonical forms are only attempted up to this order
CANONICAL_LIMIT = 10

_GRAPH6_HEADER = '>>graph6<<'


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph. ``adj[v]`` is the bit-row of neighbours of v.
    Vertex order is significant: it drives elimination orders and the
    canonical enumeration of list assignments.
    """
    n: int
    adj: tuple
    labels: tuple = None

    def __post_init__(self):
        if self.n < 1:
            raise GraphSizeError('Graphs need at least one vertex')
        if self.n > MAX_VERTICES:
            raise GraphSizeError('Graph has %i vertices, at most %i are supported' % (self.n, MAX_VERTICES))
        if len(self.adj) != self.n:
            raise ChromaError('Adjacency has %i rows for %i vertices' % (len(self.adj), self.n))
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ChromaError('Vertex %i has a neighbour outside the graph' % v)
            if (row >> v) & 1:
                raise ChromaError('Loop at vertex %i' % v)
            for w in _bits(row):
                if not (self.adj[w] >> v) & 1:
                    raise ChromaError('Adjacency is not symmetric at (%i, %i)' % (v, w))
        if self.labels is not None and len(self.labels) != self.n:
            raise ChromaError('Expected %i labels, got %i' % (self.n, len(self.labels)))

    @classmethod
    def from_edges(cls, n, edges, labels=None):
        if n > MAX_VERTICES:
            raise GraphSizeError('Graph has %i vertices, at most %i are supported' % (n, MAX_VERTICES))
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ChromaError('Loop at vertex %i' % u)
            if not (0 <= u < n and 0 <= v < n):
                raise ChromaError('Edge (%i, %i) leaves the vertex range 0..%i' % (u, v, n - 1))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @classmethod
    def from_networkx(cls, G):
        """Vertices are taken in ``G.nodes()`` order."""
        nodes = list(G.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in G.edges()]
        return cls.from_edges(len(nodes), edges)

    def to_networkx(self):
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.edges())
        return G

    def edges(self):
        out = []
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self):
        return sum(popcount(row) for row in self.adj) // 2

    def degree(self, v):
        return popcount(self.adj[v])

    def degrees(self):
        return [popcount(row) for row in self.adj]

    def neighbors(self, v):
        return list(_bits(self.adj[v]))

    def has_edge(self, u, v):
        return bool((self.adj[u] >> v) & 1)

    def is_connected(self):
        return nx.is_connected(self.to_networkx())

    def label(self, v):
        if self.labels is None:
            return 'v%i' % v
        return self.labels[v]

    def induced_subgraph(self, vertices):
        """Subgraph induced on ``vertices``, renumbered in the given order."""
        vertices = list(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        labels = None if self.labels is None else [self.labels[v] for v in vertices]
        return Graph.from_edges(len(vertices), edges, labels)

    def delete_vertex(self, x):
        return self.induced_subgraph([v for v in range(self.n) if v != x])

    def add_pendant(self, x, label=None):
        """Return the graph with a new last vertex adjacent only to ``x``."""
        if not 0 <= x < self.n:
            raise ChromaError('Vertex %i is not in the graph' % x)
        labels = None
        if self.labels is not None:
            labels = list(self.labels) + [label if label is not None else 't%i' % self.n]
        return Graph.from_edges(self.n + 1, self.edges() + [(x, self.n)], labels)

    def add_pendant_path(self, x, length):
        g = self
        attach = x
        for _ in range(length):
            g = g.add_pendant(attach)
            attach = g.n - 1
        return g

    def join(self, other):
        """
        Join: disjoint union plus every edge between the two sides. Labels
        carry over when either side has them; an unlabeled side keeps its
        default names and right-hand labels already taken get a prime.
        """
        shift = self.n
        edges = self.edges() + [(u + shift, v + shift) for u, v in other.edges()]
        edges += [(a, b + shift) for a in range(self.n) for b in range(other.n)]
        labels = None
        if self.labels is not None or other.labels is not None:
            labels = [self.label(v) for v in range(self.n)]
            taken = set(labels)
            for v in range(other.n):
                name = other.label(v)
                while name in taken:
                    name += "'"
                taken.add(name)
                labels.append(name)
        return Graph.from_edges(self.n + other.n, edges, labels)

    def relabel(self, perm):
        """``perm[old] = new``."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        labels = None
        if self.labels is not None:
            labels = [None] * self.n
            for old, new in enumerate(perm):
                labels[new] = self.labels[old]
        return Graph.from_edges(self.n, edges, labels)


def _bits(mask):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


# ..........................................................................................
#
# family specs
#

@dataclass(frozen=True)
class PathSpec:
    n: int

    @property
    def order(self):
        return self.n

    def __str__(self):
        return 'path:%i' % self.n


@dataclass(frozen=True)
class CycleSpec:
    n: int

    @property
    def order(self):
        return self.n

    def __str__(self):
        return 'cycle:%i' % self.n


@dataclass(frozen=True)
class CompleteSpec:
    n: int

    @property
    def order(self):
        return self.n

    def __str__(self):
        return 'complete:%i' % self.n


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: tuple

    @property
    def order(self):
        return sum(self.parts)

    def __str__(self):
        if len(self.parts) == 2:
            return 'bipartite:%i,%i' % self.parts
        return 'multipartite:%s' % ','.join(str(p) for p in self.parts)


@dataclass(frozen=True)
class ThetaSpec:
    lengths: tuple

    @property
    def order(self):
        return 2 + sum(length - 1 for length in self.lengths)

    def __str__(self):
        return 'theta:%s' % ','.join(str(length) for length in self.lengths)


@dataclass(frozen=True)
class JoinSpec:
    left: object
    right: object

    @property
    def order(self):
        return self.left.order + self.right.order

    def __str__(self):
        return 'join:%s+%s' % (self.left, self.right)


@dataclass(frozen=True)
class PendantSpec:
    count: int
    base: object

    @property
    def order(self):
        return self.count + self.base.order

    def __str__(self):
        return 'pendant:%i+%s' % (self.count, self.base)


@dataclass(frozen=True)
class Graph6Spec:
    text: str

    @property
    def order(self):
        return _graph6_order(self.text)

    def __str__(self):
        return 'g6:%s' % self.text


class _SpecParser:
    """Recursive descent over the family spec text, tracking byte offsets."""

    def __init__(self, text):
        self.text = text
        self.pos = 0

    def error(self, message, offset=None):
        raise FamilySpecError(message, self.pos if offset is None else offset)

    def peek(self):
        return self.text[self.pos] if self.pos < len(self.text) else ''

    def expect(self, char):
        if self.peek() != char:
            found = self.peek() or 'end of input'
            self.error('expected "%s", found "%s"' % (char, found))
        self.pos += 1

    def keyword(self):
        start = self.pos
        while self.peek().isalpha() or self.peek() == '6' and self.text[start:self.pos] == 'g':
            self.pos += 1
        word = self.text[start:self.pos]
        if word == '':
            self.error('expected a family name')
        return word, start

    def integer(self):
        start = self.pos
        while self.peek().isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.peek() or 'end of input'
            self.error('expected an integer, found "%s"' % found)
        return int(self.text[start:self.pos])

    def integer_list(self):
        values = [self.integer()]
        while self.peek() == ',':
            self.pos += 1
            values.append(self.integer())
        return values

    def spec(self):
        word, start = self.keyword()
        self.expect(':')
        if word == 'path':
            n = self.integer()
            if n < 1:
                self.error('path needs at least 1 vertex', start)
            node = PathSpec(n)
        elif word == 'cycle':
            n = self.integer()
            if n < 3:
                self.error('cycle needs at least 3 vertices', start)
            node = CycleSpec(n)
        elif word == 'complete':
            n = self.integer()
            if n < 1:
                self.error('complete needs at least 1 vertex', start)
            node = CompleteSpec(n)
        elif word == 'bipartite':
            parts = self.integer_list()
            if len(parts) != 2 or min(parts) < 1:
                self.error('bipartite takes two positive part sizes', start)
            node = MultipartiteSpec(tuple(parts))
        elif word == 'multipartite':
            parts = self.integer_list()
            if min(parts) < 1:
                self.error('multipartite part sizes must be positive', start)
            node = MultipartiteSpec(tuple(parts))
        elif word == 'theta':
            lengths = self.integer_list()
            if len(lengths) < 2:
                self.error('theta needs at least two path lengths', start)
            if min(lengths) < 1:
                self.error('theta path lengths must be positive', start)
            if lengths.count(1) > 1:
                self.error('theta allows at most one path of length 1', start)
            node = ThetaSpec(tuple(lengths))
        elif word == 'join':
            left = self.spec()
            self.expect('+')
            right = self.spec()
            node = JoinSpec(left, right)
        elif word == 'pendant':
            count = self.integer()
            if count < 1:
                self.error('pendant needs at least one leaf', start)
            self.expect('+')
            node = PendantSpec(count, self.spec())
        elif word == 'g6':
            g6_start = self.pos
            while self.pos < len(self.text) and 63 <= ord(self.text[self.pos]) <= 126:
                self.pos += 1
            body = self.text[g6_start:self.pos]
            if body == '':
                self.error('empty graph6 string')
            _graph6_order(body)
            node = Graph6Spec(body)
        else:
            self.error('unknown family "%s"' % word, start)

        if node.order > MAX_VERTICES:
            raise FamilySpecError('%s has %i vertices, at most %i are supported' % (node, node.order, MAX_VERTICES),
                                  start)
        return node


def parse_family_spec(text):
    """
    Function that parses the family spec language, for example
    ``theta:2,2,4``, ``join:complete:1+theta:2,2,4`` or ``pendant:3+cycle:4``.

    Parameters
    ----------
    text : str
        ASCII family spec.

    Returns
    -------
    family spec node
        One of the ``*Spec`` dataclasses; ``build_graph`` turns it into a Graph.

    Raises
    ------
    FamilySpecError
        Syntax or arity error, the message carries the byte offset.
    """
    if not text.isascii():
        bad = next(i for i, ch in enumerate(text) if ord(ch) > 127)
        raise FamilySpecError('family spec must be ASCII', len(text[:bad].encode('utf-8')))
    parser = _SpecParser(text)
    node = parser.spec()
    if parser.pos != len(text):
        parser.error('unexpected trailing input "%s"' % text[parser.pos:])
    return node


def build_graph(spec):
    """
    Build the Graph named by a family spec (text or parsed node).

    Theta graphs use the vertex order u, x1, y1, z1.., v and complete
    multipartite graphs list their parts in order.
    """
    if isinstance(spec, str):
        spec = parse_family_spec(spec)

    if isinstance(spec, PathSpec):
        return Graph.from_edges(spec.n, [(i, i + 1) for i in range(spec.n - 1)])
    if isinstance(spec, CycleSpec):
        return Graph.from_edges(spec.n, [(i, (i + 1) % spec.n) for i in range(spec.n)])
    if isinstance(spec, CompleteSpec):
        return Graph.from_edges(spec.n, list(itertools.combinations(range(spec.n), 2)))
    if isinstance(spec, MultipartiteSpec):
        return _build_multipartite(spec.parts)
    if isinstance(spec, ThetaSpec):
        return _build_theta(spec.lengths)
    if isinstance(spec, JoinSpec):
        return build_graph(spec.left).join(build_graph(spec.right))
    if isinstance(spec, PendantSpec):
        base = build_graph(spec.base)
        g = base
        for i in range(spec.count):
            g = g.add_pendant(i % base.n)
        return g
    if isinstance(spec, Graph6Spec):
        return from_graph6(spec.text)
    raise ChromaError('Not a family spec: %r' % (spec,))


def _part_letters(count):
    if count <= 3:
        return 'xyz'[:count] if count == 3 else 'xy'[:count]
    return None


def _build_multipartite(parts):
    letters = _part_letters(len(parts))
    labels = []
    owner = []
    for p, size in enumerate(parts):
        for j in range(size):
            owner.append(p)
            labels.append('%s%i' % (letters[p], j + 1) if letters else 'p%i_%i' % (p + 1, j + 1))
    n = len(owner)
    edges = [(a, b) for a, b in itertools.combinations(range(n), 2) if owner[a] != owner[b]]
    return Graph.from_edges(n, edges, labels)


def _build_theta(lengths):
    n = 2 + sum(length - 1 for length in lengths)
    v_end = n - 1
    letters = 'xyzabcdefghijklmnopqrstw'
    labels = ['u'] + [None] * (n - 2) + ['v']
    edges = []
    nxt = 1
    for p, length in enumerate(lengths):
        prev = 0
        for j in range(length - 1):
            labels[nxt] = '%s%i' % (letters[p % len(letters)], j + 1)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v_end))
    return Graph.from_edges(n, edges, labels)


# ..........................................................................................
#
# graph6
#

def _graph6_order(body):
    """Validate a graph6 body (no header, no newline) and return its order."""
    if body == '':
        raise Graph6Error('empty graph6 string')
    for pos, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error('graph6 byte %i (%r) is outside 63..126' % (pos, ch))
    if body[0] == '~':
        raise GraphSizeError('graph6 string encodes more than %i vertices' % MAX_VERTICES)
    n = ord(body[0]) - 63
    if n < 1:
        raise GraphSizeError('graph6 string encodes an empty graph')
    if n > MAX_VERTICES:
        raise GraphSizeError('graph6 string encodes %i vertices, at most %i are supported' % (n, MAX_VERTICES))
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    data = body[1:]
    if len(data) > expected:
        raise Graph6Error('graph6 string has %i trailing bytes' % (len(data) - expected))
    if len(data) < expected:
        raise Graph6Error('graph6 string is truncated: %i of %i data bytes' % (len(data), expected))
    pad = expected * 6 - nbits
    if pad and (ord(data[-1]) - 63) & ((1 << pad) - 1):
        raise Graph6Error('graph6 padding bits are not zero')
    return n


def from_graph6(text):
    """
    Decode one graph6 string (an optional ``>>graph6<<`` header and
    trailing newline are accepted).

    Raises
    ------
    Graph6Error
        Bytes outside 63..126, truncation or trailing bytes.
    GraphSizeError
        More than 31 vertices, or none.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('ascii')
        except UnicodeDecodeError:
            raise Graph6Error('graph6 input is not ASCII')
    body = text.rstrip('\r\n')
    if body.startswith(_GRAPH6_HEADER):
        body = body[len(_GRAPH6_HEADER):]
    _graph6_order(body)
    try:
        G = nx.from_graph6_bytes(body.encode('ascii'))
    except (ValueError, nx.NetworkXError) as err:
        raise Graph6Error('malformed graph6 string: %s' % err)
    return Graph.from_networkx(G)


def to_graph6(g):
    """Encode ``g`` as a graph6 string without header or newline."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def read_graph6_file(path):
    """Read every graph6 line of a file; blank lines are skipped."""
    graphs = []
    try:
        fh = open(path, 'r', encoding='ascii')
    except OSError:
        raise ChromaError('Unable to read graph6 file %s' % path)
    with fh:
        for line_no, line in enumerate(fh):
            line = line.strip()
            if line == '':
                continue
            try:
                graphs.append(from_graph6(line))
            except ChromaError as err:
                raise type(err)('%s: line %i: %s' % (path, line_no + 1, err))
    return graphs


# ..........................................................................................
#
# structure
#

def leaf_deletion_order(g):
    """
    Repeatedly delete the lowest-index vertex of degree 1 until none is left
    (or a single vertex remains).

    Returns
    -------
    tuple
        (kept vertices in increasing order, list of (leaf, neighbour at deletion))
    """
    alive = (1 << g.n) - 1
    deletions = []
    while popcount(alive) > 1:
        leaf = None
        for v in _bits(alive):
            if popcount(g.adj[v] & alive) == 1:
                leaf = v
                break
        if leaf is None:
            break
        parent = next(_bits(g.adj[leaf] & alive))
        deletions.append((leaf, parent))
        alive &= ~(1 << leaf)
    return list(_bits(alive)), deletions


def core_of(g):
    """
    Function that returns the core of a connected graph: the subgraph left
    after repeatedly deleting degree-1 vertices. The core of a tree is K_1.

    Raises
    ------
    StructureError
        When ``g`` is disconnected.
    """
    if not g.is_connected():
        raise StructureError('core_of needs a connected graph')
    kept, deletions = leaf_deletion_order(g)
    logger.debug('core_of: removed %i leaves, %i vertices remain', len(deletions), len(kept))
    return g.induced_subgraph(kept)


def bipartition(g):
    """
    2-colour ``g`` by breadth-first search. Each component puts its lowest
    vertex in the first side.

    Returns
    -------
    tuple of (tuple, tuple) or None
        The two sides, or None when ``g`` has an odd cycle.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = [root]
        while queue:
            v = queue.pop(0)
            for w in _bits(g.adj[v]):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    left = tuple(v for v in range(g.n) if side[v] == 0)
    right = tuple(v for v in range(g.n) if side[v] == 1)
    return left, right


def _greedy_clique(g):
    best = 0
    for start in range(g.n):
        cand = g.adj[start]
        size = 1
        while cand:
            pick = max(_bits(cand), key=lambda w: (popcount(g.adj[w] & cand), -w))
            size += 1
            cand &= g.adj[pick]
        best = max(best, size)
    return best


def _dsatur_upper(g):
    colors = [-1] * g.n
    for _ in range(g.n):
        v = max((w for w in range(g.n) if colors[w] == -1),
                key=lambda w: (len({colors[x] for x in _bits(g.adj[w]) if colors[x] >= 0}), g.degree(w), -w))
        used = {colors[x] for x in _bits(g.adj[v])}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors) + 1


def _is_k_colorable(g, k):
    colors = [-1] * g.n

    def pick():
        best = None
        best_key = None
        for v in range(g.n):
            if colors[v] != -1:
                continue
            sat = len({colors[x] for x in _bits(g.adj[v]) if colors[x] >= 0})
            key = (sat, g.degree(v))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def extend(done, used):
        if done == g.n:
            return True
        v = pick()
        forbidden = {colors[x] for x in _bits(g.adj[v])}
        # a fresh colour is interchangeable with every other unused one
        for c in range(min(used + 1, k)):
            if c in forbidden:
                continue
            colors[v] = c
            if extend(done + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    return extend(0, 0)


@lru_cache(maxsize=1024)
def chromatic_number(g):
    """
    Exact chromatic number by branch and bound: a greedy clique gives the
    lower bound, DSATUR the upper bound, and backtracking settles each k
    in between.
    """
    if g.num_edges == 0:
        return 1
    lower = _greedy_clique(g)
    upper = _dsatur_upper(g)
    for k in range(lower, upper):
        if _is_k_colorable(g, k):
            return k
    return upper


def theta_paths(g):
    """
    Recognise a theta graph with three paths: exactly two vertices of degree
    3, all others of degree 2, and the three walks leaving the first branch
    vertex all ending at the second.

    Returns
    -------
    tuple or None
        (a, b, paths) where each path lists its internal vertices from the a
        side, sorted by length then by first vertex, or None.
    """
    degrees = g.degrees()
    branch = [v for v in range(g.n) if degrees[v] == 3]
    if len(branch) != 2 or any(d != 2 for v, d in enumerate(degrees) if v not in branch):
        return None
    a, b = branch
    paths = []
    for start in g.neighbors(a):
        internal = []
        prev, cur = a, start
        while cur not in branch:
            internal.append(cur)
            nxt = [w for w in g.neighbors(cur) if w != prev]
            prev, cur = cur, nxt[0]
        if cur != b:
            return None
        paths.append(tuple(internal))
    paths.sort(key=lambda p: (len(p), p))
    return a, b, paths


@dataclass(frozen=True)
class CoreClass:
    """Core type of a connected bipartite graph. ``k`` is set for even cycles and theta cores."""
    kind: str
    k: int = None

    def __str__(self):
        if self.kind == 'EvenCycle':
            return 'C%i' % (2 * self.k + 2)
        if self.kind == 'Theta222k':
            return 'theta:2,2,%i' % (2 * self.k)
        return self.kind


def core_class(g):
    """
    Function that classifies the core of a connected bipartite graph as K1,
    an even cycle C_{2k+2}, K_{2,3}, the theta graph with paths 2, 2, 2k
    (k >= 2), or Other.

    Raises
    ------
    StructureError
        When ``g`` is disconnected or not bipartite.
    """
    if not g.is_connected():
        raise StructureError('core_class needs a connected graph')
    if bipartition(g) is None:
        raise StructureError('core_class needs a bipartite graph')
    core = core_of(g)
    if core.n == 1:
        return CoreClass('K1')
    degrees = core.degrees()
    if all(d == 2 for d in degrees):
        return CoreClass('EvenCycle', (core.n - 2) // 2)
    found = theta_paths(core)
    if found is not None:
        lengths = sorted(len(p) + 1 for p in found[2])
        if lengths[0] == 2 and lengths[1] == 2:
            if lengths[2] == 2:
                return CoreClass('K23')
            if lengths[2] % 2 == 0:
                return CoreClass('Theta222k', lengths[2] // 2)
    return CoreClass('Other')


def multipartite_parts(g):
    """
    Parts of ``g`` when it is a complete multipartite graph (non-adjacency is
    then an equivalence relation), else None.
    """
    parts = []
    seen = 0
    full = (1 << g.n) - 1
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        part = full & ~g.adj[v]
        for w in _bits(part):
            if (full & ~g.adj[w]) != part:
                return None
        parts.append(tuple(_bits(part)))
        seen |= part
    return parts


def canonical_key(g):
    """
    Exhaustive canonical form for small graphs: the lexicographically least
    upper-triangle bit string over all vertex orders that sort vertices by
    degree.
    """
    if g.n > CANONICAL_LIMIT:
        raise GraphSizeError('canonical forms are limited to %i vertices' % CANONICAL_LIMIT)
    degrees = g.degrees()
    classes = {}
    for v in range(g.n):
        classes.setdefault(degrees[v], []).append(v)
    groups = [classes[d] for d in sorted(classes)]
    best = None
    for combo in itertools.product(*(itertools.permutations(group) for group in groups)):
        order = [v for block in combo for v in block]
        key = tuple(int(g.has_edge(order[i], order[j])) for i in range(g.n) for j in range(i + 1, g.n))
        if best is None or key < best:
            best = key
    return (g.n, tuple(sorted(degrees)), best)


def is_isomorphic(g, h):
    if g.n != h.n or g.num_edges != h.num_edges or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n <= CANONICAL_LIMIT:
        return canonical_key(g) == canonical_key(h)
    return nx.is_isomorphic(g.to_networkx(), h.to_networkx())
