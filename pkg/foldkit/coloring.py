#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exact chromatic and achromatic numbers with certificates.

Colour indices are dense: a Coloring with k colours uses exactly 0..k-1.
"""

import logging
import itertools
from collections import namedtuple

import regex as re

from . import utils
from .config import get_limits
from .graph import iter_bits, popcount, edge_clique_bound, is_clique
from .trace import verify_trace
from .errors import (PreconditionError, SizeLimitError, KRangeError,
                     GraphParseError)

COLORING_HEADER = 'coloring v1'

re_assignment = re.compile(r'^(\d+) (\d+)$')


class Coloring(object):
    """Vertex -> colour assignment, surjective onto 0..k-1
    """

    def __init__(self, colors):
        colors = tuple(colors)
        k = max(colors) + 1 if colors else 0
        if min(colors or (0,)) < 0 or len(set(colors)) != k:
            raise PreconditionError('colours must cover 0..{0} exactly, got {1}'
                                    .format(k - 1, sorted(set(colors))))
        self.colors = colors
        self.k = k

    @classmethod
    def dense(cls, colors):
        """Rename colours in order of first appearance
        """
        rename = {}
        for c in colors:
            rename.setdefault(c, len(rename))
        return cls(rename[c] for c in colors)

    @classmethod
    def from_classes(cls, n, classes):
        colors = [None] * n
        for i, members in enumerate(classes):
            for v in members:
                colors[v] = i
        if None in colors:
            raise PreconditionError('classes do not cover every vertex')
        return cls(colors)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def __eq__(self, other):
        return isinstance(other, Coloring) and self.colors == other.colors

    def __hash__(self):
        return hash(self.colors)

    def __repr__(self):
        return 'Coloring({0!r})'.format(list(self.colors))

    def classes(self):
        out = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out


ChiResult = namedtuple('ChiResult', ['value', 'certificate'])
PsiResult = namedtuple('PsiResult', ['value', 'certificate'])


def _colors_of(g, c):
    colors = list(c)
    if len(colors) != g.n:
        raise PreconditionError('assignment covers {0} vertices, graph has {1}'
                                .format(len(colors), g.n))
    return colors


def is_proper(g, c):
    """No edge has both ends in one colour
    """
    colors = _colors_of(g, c)
    return all(colors[u] != colors[v] for u, v in g.edges())


def is_complete(g, c):
    """Every pair of used colours meets on some edge
    """
    colors = _colors_of(g, c)
    used = sorted(set(colors))
    seen = set()
    for u, v in g.edges():
        a, b = colors[u], colors[v]
        seen.add((min(a, b), max(a, b)))
    return all((a, b) in seen for a, b in itertools.combinations(used, 2))


def _check_bound(what, g, bound, default):
    if bound is None:
        bound = default
    if g.n > bound:
        raise SizeLimitError(what, g.n, bound)


# chromatic number

def greedy_clique(g):
    """Clique grown greedily from high degree vertices
    """
    best = []
    for start in sorted(range(g.n), key=lambda v: -g.degree(v)):
        clique = [start]
        cand = g.rows[start]
        while cand:
            v = max(iter_bits(cand), key=lambda w: popcount(g.rows[w] & cand))
            clique.append(v)
            cand &= g.rows[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur(g):
    """Greedy colouring by saturation degree
    """
    colors = [-1] * g.n
    for _ in range(g.n):
        v = max((w for w in range(g.n) if colors[w] < 0),
                key=lambda w: (len(set(colors[u] for u in iter_bits(g.rows[w])
                                       if colors[u] >= 0)), g.degree(w), -w))
        used = set(colors[u] for u in iter_bits(g.rows[v]))
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return colors


def k_coloring(g, k, clique=()):
    """A proper colouring with at most k colours, or None

       Vertices of `clique` are precoloured 0..len(clique)-1; a new colour
       is only opened as the next unused index.
    """
    n = g.n
    if len(clique) > k:
        return None
    rows = g.rows
    colors = [-1] * n
    masks = [0] * k
    for i, v in enumerate(clique):
        colors[v] = i
        masks[i] |= 1 << v
    order = [v for v in sorted(range(n), key=lambda w: -g.degree(w))
             if colors[v] < 0]

    def assign(i, used):
        if i == len(order):
            return True
        v = order[i]
        for c in range(min(k, used + 1)):
            if rows[v] & masks[c]:
                continue
            colors[v] = c
            masks[c] |= 1 << v
            if assign(i + 1, max(used, c + 1)):
                return True
            masks[c] &= ~(1 << v)
        colors[v] = -1
        return False

    if assign(0, len(clique)):
        return colors
    return None


def chi(g, bound=None):
    """Exact chromatic number

       Tries k = greedy clique size upwards; the first k that admits a
       colouring is optimal because every smaller k failed (or is below a
       clique size).
    """
    _check_bound('chi', g, bound, get_limits().chi)
    if g.n == 0:
        return ChiResult(0, Coloring(()))
    clique = greedy_clique(g)
    upper = dsatur(g)
    ub = max(upper) + 1
    for k in range(len(clique), ub):
        colors = k_coloring(g, k, clique)
        if colors is not None:
            logging.debug('chi = {0} (clique {1}, dsatur {2})'
                          .format(k, len(clique), ub))
            return ChiResult(k, Coloring.dense(colors))
    return ChiResult(ub, Coloring.dense(upper))


# achromatic number

class _CompleteSearch(object):
    """Branch over partitions of 0..n-1 into independent classes

       Vertex v either joins an existing class or opens a new one, so
       classes are ordered by their minimum vertex and every partition is
       visited once. Pruning keeps a count of colour pairs already met on
       an edge and of edges not yet decided: k final classes need
       k(k-1)/2 distinct met pairs, each still open edge can add at most
       one.
    """

    def __init__(self, g):
        self.g = g
        self.n = g.n
        self.m = g.edge_count
        self.cls = [-1] * g.n
        self.members = []
        self.met = []          # met[c]: mask of classes sharing an edge with c
        self.covered = 0
        self.decided = 0
        self.nodes = 0

    def _feasible_upper(self, v):
        k = len(self.members)
        open_edges = self.m - self.decided
        ub = min(k + self.n - v, edge_clique_bound(self.covered + open_edges))
        if k * (k - 1) // 2 - self.covered > open_edges:
            return -1
        return ub

    def _assign(self, v, c):
        """Put v in class c (c == len(members) opens a class); returns undo
        """
        if c == len(self.members):
            self.members.append(0)
            self.met.append(0)
        self.members[c] |= 1 << v
        self.cls[v] = c
        gained = []
        nbrs = self.g.rows[v] & ((1 << v) - 1)
        for w in iter_bits(nbrs):
            d = self.cls[w]
            self.decided += 1
            if not (self.met[c] >> d) & 1:
                self.met[c] |= 1 << d
                self.met[d] |= 1 << c
                self.covered += 1
                gained.append(d)
        return gained, popcount(nbrs)

    def _undo(self, v, c, gained, decided):
        for d in gained:
            self.met[c] &= ~(1 << d)
            self.met[d] &= ~(1 << c)
        self.covered -= len(gained)
        self.decided -= decided
        self.members[c] &= ~(1 << v)
        self.cls[v] = -1
        if not self.members[c]:
            self.members.pop()
            self.met.pop()

    def _choices(self, v):
        row = self.g.rows[v]
        k = len(self.members)
        return [k] + [c for c in range(k) if not row & self.members[c]]

    def maximum(self, best, certificate):
        """Largest complete colouring with more than `best` colours
        """
        self.best = best
        self.certificate = certificate
        self.ceiling = min(self.n, edge_clique_bound(self.m))
        if self.best < self.ceiling:
            self._maximum(0)
        return self.best, self.certificate

    def _maximum(self, v):
        self.nodes += 1
        if v == self.n:
            k = len(self.members)
            if k > self.best and self.covered == k * (k - 1) // 2:
                self.best = k
                self.certificate = list(self.cls)
            return self.best >= self.ceiling
        if self._feasible_upper(v) <= self.best:
            return False
        for c in self._choices(v):
            gained, decided = self._assign(v, c)
            done = self._maximum(v + 1)
            self._undo(v, c, gained, decided)
            if done:
                return True
        return False

    def exactly(self, k):
        """A complete colouring with exactly k colours, or None
        """
        self.k = k
        self.found = None
        self._exactly(0)
        return self.found

    def _exactly(self, v):
        self.nodes += 1
        kk = len(self.members)
        if v == self.n:
            if kk == self.k and self.covered == kk * (kk - 1) // 2:
                self.found = list(self.cls)
                return True
            return False
        if kk > self.k or kk + self.n - v < self.k:
            return False
        if self._feasible_upper(v) < self.k:
            return False
        for c in self._choices(v):
            if c == kk and kk == self.k:
                continue
            gained, decided = self._assign(v, c)
            done = self._exactly(v + 1)
            self._undo(v, c, gained, decided)
            if done:
                return True
        return False


def psi(g, bound=None):
    """Exact achromatic number

       An optimal proper colouring is always complete (two colours that
       never meet could be merged), so chi seeds the search.
    """
    _check_bound('psi', g, bound, get_limits().psi)
    if g.n == 0:
        return PsiResult(0, Coloring(()))
    start = chi(g, bound=max(g.n, get_limits().chi))
    search = _CompleteSearch(g)
    value, colors = search.maximum(start.value, list(start.certificate))
    logging.debug('psi = {0} ({1} search nodes)'.format(value, search.nodes))
    return PsiResult(value, Coloring.dense(colors))


def has_complete_coloring(g, k):
    """Complete colouring with exactly k colours, or None (no range check)
    """
    if g.n == 0:
        return Coloring(()) if k == 0 else None
    colors = _CompleteSearch(g).exactly(k)
    return Coloring.dense(colors) if colors is not None else None


def complete_coloring(g, k, bound=None):
    """Complete colouring with exactly k colours for chi(g) <= k <= psi(g)
    """
    low = chi(g, bound=max(g.n, get_limits().chi)).value
    high = psi(g, bound).value
    if not low <= k <= high:
        raise KRangeError(k, low, high)
    c = has_complete_coloring(g, k)
    if c is None:
        raise PreconditionError('no complete {0}-colouring found'.format(k))
    return c


def psi_bruteforce(g):
    """Largest k over all surjective k-assignments that are proper and
       complete
    """
    best = 0
    for k in range(1, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if len(set(colors)) == k and is_proper(g, colors) and \
                    is_complete(g, colors):
                best = k
                break
    return best


def chi_bruteforce(g):
    for k in range(0, g.n + 1):
        for colors in itertools.product(range(k), repeat=g.n):
            if is_proper(g, colors):
                return k
    return g.n


def coloring_from_trace(t):
    """Colour classes of a clique fold: source vertex -> target vertex
    """
    check = verify_trace(t)
    if not check:
        raise PreconditionError('invalid trace: {0}'.format(check.message))
    if not is_clique(t.target):
        raise PreconditionError('trace target is not a clique')
    return Coloring(t.class_map)


def write_coloring(c):
    lines = [COLORING_HEADER]
    lines.extend('{0} {1}'.format(v, col) for v, col in enumerate(c))
    return '\n'.join(lines) + '\n'


def read_coloring(text):
    lines = list(utils.content_lines(text))
    if not lines or lines[0][1] != COLORING_HEADER:
        raise GraphParseError("missing '{0}' header".format(COLORING_HEADER),
                              line=lines[0][0] if lines else 1)
    colors = {}
    for lineno, line in lines[1:]:
        m = re_assignment.match(line)
        if not m:
            raise GraphParseError("expected 'vertex color', got '{0}'"
                                  .format(line), line=lineno)
        v = int(m.group(1))
        if v in colors:
            raise GraphParseError('vertex {0} coloured twice'.format(v),
                                  line=lineno)
        colors[v] = int(m.group(2))
    if sorted(colors) != list(range(len(colors))):
        raise GraphParseError('vertices must be 0..{0}'.format(len(colors) - 1))
    try:
        return Coloring(colors[v] for v in range(len(colors)))
    except PreconditionError as e:
        raise GraphParseError(str(e))
