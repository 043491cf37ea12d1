#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Small labeled graphs as bitset adjacency rows.

Vertices are 0..n-1 and row v is an int whose bit w is set iff v ~ w.
Every operation returns a new Graph with labels compacted to 0..n-1.
"""

import logging
import itertools
from collections import namedtuple

import regex as re
import networkx as nx

from . import utils
from .config import get_limits
from .errors import (GraphParseError, PreconditionError, SizeLimitError,
                     CanonicalizationLimitError)

""" Defaults declaration
"""
MAX_VERTICES = 64
GRAPH6_HEADER = '>>graph6<<'
FAMILIES = ('path', 'cycle', 'complete', 'star', 'wheel', 'fan')
FAMILY_MIN = {'path': 1, 'cycle': 3, 'complete': 1, 'star': 1, 'wheel': 3,
              'fan': 1}

re_family = re.compile(r'^\s*([a-z]+)\s*:\s*(\d+)\s*$')
re_edge_header = re.compile(r'^n (\d+)$')
re_edge = re.compile(r'^(-?\d+) (-?\d+)$')


class Graph(object):
    """Immutable simple undirected graph
    """
    __slots__ = ('n', 'rows')

    def __init__(self, n, edges=()):
        if n < 0 or n > MAX_VERTICES:
            raise PreconditionError('vertex count {0} outside 0..{1}'
                                    .format(n, MAX_VERTICES))
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError('edge {0}-{1} outside 0..{2}'
                                        .format(u, v, n - 1))
            if u == v:
                raise PreconditionError('loop at vertex {0}'.format(u))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, 'n', n)
        object.__setattr__(self, 'rows', tuple(rows))

    @classmethod
    def from_rows(cls, rows):
        """Build from adjacency rows, checking symmetry and loops
        """
        rows = tuple(rows)
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full or (r >> v) & 1:
                raise PreconditionError('bad adjacency row for vertex {0}'
                                        .format(v))
            for w in iter_bits(r):
                if not (rows[w] >> v) & 1:
                    raise PreconditionError('asymmetric edge {0}-{1}'
                                            .format(v, w))
        return cls._trusted(rows)

    @classmethod
    def _trusted(cls, rows):
        g = cls.__new__(cls)
        object.__setattr__(g, 'n', len(rows))
        object.__setattr__(g, 'rows', tuple(rows))
        return g

    def __setattr__(self, name, value):
        raise AttributeError('Graph is immutable')

    def __eq__(self, other):
        return (isinstance(other, Graph) and self.n == other.n and
                self.rows == other.rows)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return 'Graph({0}, {1!r})'.format(self.n, self.edges())

    def __reduce__(self):
        return (Graph, (self.n, self.edges()))

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v):
        return list(iter_bits(self.rows[v]))

    def degree(self, v):
        return bin(self.rows[v]).count('1')

    def edges(self):
        """Edges (u, v) with u < v in lexicographic order
        """
        return [(u, v) for u in range(self.n)
                for v in iter_bits(self.rows[u]) if u < v]

    @property
    def edge_count(self):
        return sum(bin(r).count('1') for r in self.rows) // 2

    @property
    def full_mask(self):
        return (1 << self.n) - 1


def iter_bits(mask):
    """Yield the set bit positions of mask in increasing order
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count('1')


def _check_vertex(g, v):
    if not 0 <= v < g.n:
        raise PreconditionError('vertex {0} outside 0..{1}'.format(v, g.n - 1))


# graph6

def _graph6_size(data):
    """Vertex count and header length of decoded graph6 bytes
    """
    if data[0] < 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise GraphParseError('truncated size header', offset=len(data))
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        return n, 8
    if len(data) < 4:
        raise GraphParseError('truncated size header', offset=len(data))
    n = (data[1] << 12) | (data[2] << 6) | data[3]
    if n <= 62:
        raise GraphParseError('long size header for n={0}'.format(n),
                              offset=0)
    return n, 4


def emit_graph6(g):
    """Encode g in graph6 (no header, no newline)
    """
    return nx.to_graph6_bytes(to_networkx(g), header=False) \
        .rstrip(b'\n').decode('ascii')


def parse_graph6(text):
    """Decode one graph6 line

       Byte-level errors are reported with their offset before the bytes
       reach the networkx decoder.
    """
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    text = text.rstrip('\r\n')
    if not text:
        raise GraphParseError('empty graph6 string', offset=0)
    for i, c in enumerate(text):
        if not 63 <= ord(c) <= 126:
            raise GraphParseError('non-printable byte {0!r}'.format(c),
                                  offset=i)
    n, pos = _graph6_size([ord(c) - 63 for c in text])
    if n > MAX_VERTICES:
        raise GraphParseError('{0} vertices exceeds {1}'
                              .format(n, MAX_VERTICES), offset=0)
    nbytes = (n * (n - 1) // 2 + 5) // 6
    if len(text) < pos + nbytes:
        raise GraphParseError('truncated adjacency data', offset=len(text))
    if len(text) > pos + nbytes:
        raise GraphParseError('trailing garbage', offset=pos + nbytes)
    h = nx.from_graph6_bytes(text.encode('ascii'))
    return Graph(n, h.edges())


# edge list

def parse_edge_list(text):
    """Parse "n <count>" followed by one "u v" pair per line
    """
    lines = utils.content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise GraphParseError("missing 'n <count>' header", line=1)
    m = re_edge_header.match(header)
    if not m:
        raise GraphParseError("expected 'n <count>', got '{0}'".format(header),
                              line=lineno)
    n = int(m.group(1))
    if n > MAX_VERTICES:
        raise GraphParseError('{0} vertices exceeds {1}'
                              .format(n, MAX_VERTICES), line=lineno)
    edges = set()
    for lineno, line in lines:
        m = re_edge.match(line)
        if not m:
            raise GraphParseError("expected 'u v', got '{0}'".format(line),
                                  line=lineno)
        u, v = int(m.group(1)), int(m.group(2))
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError('endpoint out of range 0..{0}'.format(n - 1),
                                  line=lineno)
        if u == v:
            raise GraphParseError('loop at vertex {0}'.format(u), line=lineno)
        edges.add((min(u, v), max(u, v)))
    return Graph(n, sorted(edges))


def parse_graph(text):
    """Accept either an edge list or a single graph6 line
    """
    stripped = text.strip()
    if re_edge_header.match(stripped.split('\n', 1)[0].strip()) or \
            stripped.startswith('#'):
        return parse_edge_list(text)
    return parse_graph6(stripped)


# distances and basic predicates

def bfs_layers(g, u):
    """Distance from u to every vertex (None when unreachable)
    """
    _check_vertex(g, u)
    dist = [None] * g.n
    dist[u] = 0
    seen = 1 << u
    frontier = 1 << u
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        nxt &= ~seen
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def distance(g, u, v):
    """Hop count between u and v, None when they are in different components
    """
    _check_vertex(g, v)
    return bfs_layers(g, u)[v]


def component_mask(g, u):
    seen = frontier = 1 << u
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g):
    if g.n <= 1:
        return True
    return component_mask(g, 0) == g.full_mask


def is_clique(g):
    full = g.full_mask
    return all(r | (1 << v) == full for v, r in enumerate(g.rows))


def universal_vertices(g):
    full = g.full_mask
    return [v for v, r in enumerate(g.rows) if r | (1 << v) == full]


def edge_clique_bound(m):
    """Largest s with s(s-1)/2 <= m
    """
    s = 0
    while (s + 1) * s // 2 <= m:
        s += 1
    return s


# constructions

def permute(g, perm):
    """Relabel: vertex v becomes perm[v]
    """
    if sorted(perm) != list(range(g.n)):
        raise PreconditionError('not a permutation of 0..{0}'.format(g.n - 1))
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def induced_subgraph(g, vertices):
    """Subgraph induced by vertices, relabeled in increasing label order
    """
    keep = sorted(set(vertices))
    for v in keep:
        _check_vertex(g, v)
    index = dict((v, i) for i, v in enumerate(keep))
    return Graph(len(keep), [(index[u], index[v]) for u, v in g.edges()
                             if u in index and v in index])


def remove_vertex(g, v):
    _check_vertex(g, v)
    return induced_subgraph(g, [w for w in range(g.n) if w != v])


def disjoint_union(g1, g2):
    shift = g1.n
    return Graph(g1.n + g2.n,
                 g1.edges() + [(u + shift, v + shift) for u, v in g2.edges()])


def join(g1, g2):
    """Disjoint union plus every edge between the two sides
    """
    shift = g1.n
    cross = [(u, v + shift) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, g1.edges() +
                 [(u + shift, v + shift) for u, v in g2.edges()] + cross)


def add_universal(g):
    """join(g, K1): the new vertex gets label g.n
    """
    return join(g, complete(1))


def add_isolated(g):
    return disjoint_union(g, Graph(1))


def complement(g):
    return Graph(g.n, [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                       if not g.has_edge(u, v)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star(n):
    """K_{1,n}: hub 0 and leaves 1..n
    """
    return Graph(n + 1, [(0, v) for v in range(1, n + 1)])


def wheel(n):
    """Hub n universal over the cycle 0..n-1
    """
    return add_universal(cycle(n))


def fan(n):
    """Hub n universal over the path 0..n-1
    """
    return add_universal(path(n))


Family = namedtuple('Family', ['kind', 'n'])

GENERATORS = {'path': path, 'cycle': cycle, 'complete': complete,
              'star': star, 'wheel': wheel, 'fan': fan}


def generate(family):
    kind, n = family
    if kind not in GENERATORS:
        raise PreconditionError("unknown family '{0}' (choose from {1})"
                                .format(kind, ', '.join(FAMILIES)))
    if n < FAMILY_MIN[kind]:
        raise PreconditionError('{0} needs n >= {1}, got {2}'
                                .format(kind, FAMILY_MIN[kind], n))
    g = GENERATORS[kind](n)
    if g.n > MAX_VERTICES:
        raise PreconditionError('{0}:{1} exceeds {2} vertices'
                                .format(kind, n, MAX_VERTICES))
    return g


def parse_family(text):
    """'wheel:9' -> Family('wheel', 9)
    """
    m = re_family.match(text)
    if not m:
        raise GraphParseError("family must look like 'kind:N', got '{0}'"
                              .format(text))
    kind = m.group(1)
    if kind not in FAMILIES:
        raise GraphParseError("unknown family '{0}' (choose from {1})"
                              .format(kind, ', '.join(FAMILIES)))
    return Family(kind, int(m.group(2)))


# canonical form

def _refined_colors(g):
    """Stable vertex colouring by iterated degree refinement

       Colours are ranks of isomorphism-invariant signatures, so isomorphic
       graphs get the same colour multiset in the same order.
    """
    colors = [g.degree(v) for v in range(g.n)]
    ncolors = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in iter_bits(r))))
               for v, r in enumerate(g.rows)]
        rank = dict((s, i) for i, s in enumerate(sorted(set(sig))))
        colors = [rank[s] for s in sig]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _twin_predecessors(g):
    """For each vertex, the next lower label among its twins, or -1

       Twins (equal open or equal closed neighbourhoods) are swapped by an
       automorphism, so fixing their relative order keeps the minimum.
    """
    prev = [-1] * g.n
    last = {}
    for v, r in enumerate(g.rows):
        for key in (('open', r), ('closed', r | (1 << v))):
            if key in last:
                prev[v] = last[key]
            last[key] = v
    return prev


def canonical_order(g, limit=None):
    """Vertex order whose relabeled adjacency string is minimal

       Returns order with order[p] = vertex placed at position p. The
       minimum is taken over orders consistent with the refined colour
       classes, which are isomorphism-invariant, so two graphs get the same
       relabeled graph iff they are isomorphic.
    """
    if limit is None:
        limit = get_limits().canon
    if g.n > limit:
        raise CanonicalizationLimitError(g.n, limit)
    n = g.n
    colors = _refined_colors(g)
    prev = _twin_predecessors(g)
    cell_of_pos = sorted(colors)
    rows = g.rows

    order = [0] * n
    cols = [0] * n
    best = [None, None]  # columns, order

    def search(p, used):
        if p == n:
            if best[0] is None or cols < best[0]:
                best[0] = cols[:]
                best[1] = order[:]
            return
        color = cell_of_pos[p]
        for v in range(n):
            if (used >> v) & 1 or colors[v] != color:
                continue
            if prev[v] >= 0 and not (used >> prev[v]) & 1:
                continue
            row = rows[v]
            col = 0
            for q in range(p):
                col = (col << 1) | ((row >> order[q]) & 1)
            if best[0] is not None and cols[:p] == best[0][:p] and \
                    col > best[0][p]:
                continue
            order[p] = v
            cols[p] = col
            search(p + 1, used | (1 << v))

    search(0, 0)
    return best[1] if n else []


def canonical_form(g, limit=None):
    """Canonically relabeled copy of g
    """
    order = canonical_order(g, limit)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return permute(g, perm)


def canonical_key(g, limit=None):
    """Isomorphism-exact fingerprint: packed rows of the canonical form
    """
    h = canonical_form(g, limit)
    width = (h.n + 7) // 8
    return bytes([h.n]) + b''.join(r.to_bytes(width, 'little')
                                      for r in h.rows)


# enumeration

_graph_cache = {}


def _check_enum_bound(n, bound):
    if bound is None:
        bound = get_limits().enumerate
    if n > bound:
        raise SizeLimitError('enumeration', n, bound)


def enumerate_graphs(n, bound=None):
    """One representative per isomorphism class of graphs on n vertices

       Extends every class on n-1 vertices by a new vertex with each
       possible neighbourhood and keeps the first graph per canonical key.
       Returned in canonical-key order. Deduplicating all edge subsets gives
       the same classes, see enumerate_graphs_bruteforce, but grows as
       2^(n(n-1)/2) instead of 2^(n-1) per smaller class.
    """
    _check_enum_bound(n, bound)
    if n in _graph_cache:
        return _graph_cache[n]
    if n == 0:
        found = [Graph(0)]
    else:
        seen = {}
        for h in enumerate_graphs(n - 1, bound=n - 1):
            for mask in range(1 << (n - 1)):
                g = Graph(n, h.edges() + [(v, n - 1) for v in iter_bits(mask)])
                key = canonical_key(g, limit=max(n, 1))
                if key not in seen:
                    seen[key] = g
        found = [seen[k] for k in sorted(seen)]
    logging.debug('enumerated {0} graphs on {1} vertices'
                  .format(len(found), n))
    _graph_cache[n] = tuple(found)
    return _graph_cache[n]


def enumerate_connected(n, bound=None):
    """Connected graphs on n vertices, one per isomorphism class
    """
    for g in enumerate_graphs(n, bound):
        if n >= 1 and is_connected(g):
            yield g


def enumerate_graphs_bruteforce(n):
    """All edge subsets deduplicated by canonical key (small n only)
    """
    pairs = list(itertools.combinations(range(n), 2))
    seen = {}
    for mask in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in iter_bits(mask)])
        seen.setdefault(canonical_key(g, limit=max(n, 1)), g)
    return [seen[k] for k in sorted(seen)]


def to_networkx(g):
    """networkx copy of g with nodes 0..n-1 in order
    """
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
