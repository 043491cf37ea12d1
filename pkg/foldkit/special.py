#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Threshold and trivially perfect graphs, the universal-vertex reduction
and the cycle length bound for a given achromatic number.
"""

import itertools
from collections import namedtuple

from .graph import Graph, iter_bits, popcount, universal_vertices, \
    remove_vertex
from .errors import GraphParseError, PreconditionError

ADD_ISOLATED = 'i'
ADD_UNIVERSAL = 'u'

# published complete 4-colouring of C9, vertices 1..9 in order
CYCLE_NINE_LETTERS = 'adbacdacb'


def letters_to_colors(letters):
    """'adb...' -> [0, 3, 1, ...] with a=0, b=1, ...
    """
    return [ord(c) - ord('a') for c in letters]


class CreationSequence(object):
    """Threshold graph recipe: vertex j is added isolated ('i') or
       universal ('u') to vertices 0..j-1
    """

    def __init__(self, ops):
        ops = tuple(ops)
        for i, op in enumerate(ops):
            if op not in (ADD_ISOLATED, ADD_UNIVERSAL):
                raise GraphParseError("creation sequence uses 'i' and 'u', "
                                      "got {0!r}".format(op), offset=i)
        self.ops = ops

    @classmethod
    def from_string(cls, text):
        return cls(text.strip())

    def __str__(self):
        return ''.join(self.ops)

    def __repr__(self):
        return "CreationSequence('{0}')".format(self)

    def __len__(self):
        return len(self.ops)

    def __eq__(self, other):
        return isinstance(other, CreationSequence) and self.ops == other.ops

    def __hash__(self):
        return hash(self.ops)

    def realize(self):
        edges = []
        for j, op in enumerate(self.ops):
            if op == ADD_UNIVERSAL:
                edges.extend((i, j) for i in range(j))
        return Graph(len(self.ops), edges)


def all_sequences(n):
    """Every creation sequence of length n starting with 'i'
    """
    if n == 0:
        yield CreationSequence('')
        return
    for tail in itertools.product((ADD_ISOLATED, ADD_UNIVERSAL), repeat=n - 1):
        yield CreationSequence((ADD_ISOLATED,) + tail)


ForbiddenSubgraph = namedtuple('ForbiddenSubgraph', ['kind', 'vertices'])


class ThresholdCheck(namedtuple('ThresholdCheck', ['sequence', 'witness'])):
    __slots__ = ()

    def __bool__(self):
        return self.sequence is not None


class TriviallyPerfectCheck(namedtuple('TriviallyPerfectCheck',
                                       ['ok', 'witness'])):
    __slots__ = ()

    def __bool__(self):
        return self.ok


def classify_four(g, vertices):
    """'P4', 'C4', '2K2' or None for the subgraph induced by 4 vertices
    """
    mask = 0
    for v in vertices:
        mask |= 1 << v
    degrees = sorted(popcount(g.rows[v] & mask) for v in vertices)
    if degrees == [1, 1, 2, 2]:
        return 'P4'
    if degrees == [2, 2, 2, 2]:
        return 'C4'
    if degrees == [1, 1, 1, 1]:
        return '2K2'
    return None


def find_induced(g, kinds, within=None):
    """First 4-vertex set (lexicographic) inducing one of `kinds`
    """
    vertices = range(g.n) if within is None else sorted(within)
    for quad in itertools.combinations(vertices, 4):
        kind = classify_four(g, quad)
        if kind in kinds:
            return ForbiddenSubgraph(kind, quad)
    return None


def is_threshold(g):
    """Creation sequence of g, or an induced P4, C4 or 2K2

       Peels a universal vertex (preferred) or an isolated vertex of the
       remaining induced subgraph until one vertex is left.
    """
    alive = g.full_mask
    peeled = []
    while popcount(alive) > 1:
        live = list(iter_bits(alive))
        pick = None
        for v in live:
            if g.rows[v] & alive == alive & ~(1 << v):
                pick = (v, ADD_UNIVERSAL)
                break
        if pick is None:
            for v in live:
                if not g.rows[v] & alive:
                    pick = (v, ADD_ISOLATED)
                    break
        if pick is None:
            witness = find_induced(g, ('P4', 'C4', '2K2'), within=live)
            return ThresholdCheck(None, witness)
        peeled.append(pick[1])
        alive &= ~(1 << pick[0])
    if alive:
        peeled.append(ADD_ISOLATED)
    return ThresholdCheck(CreationSequence(reversed(peeled)), None)


def is_threshold_by_subgraphs(g):
    return find_induced(g, ('P4', 'C4', '2K2')) is None


def is_trivially_perfect(g):
    """No induced P4 and no induced C4
    """
    witness = find_induced(g, ('P4', 'C4'))
    return TriviallyPerfectCheck(witness is None, witness)


def psi_threshold(seq):
    """Achromatic number of a realized creation sequence

       Peeling from the last vertex: a universal vertex adds one colour
       (join with K1), an isolated vertex leaves max(1, rest).
    """
    if not len(seq):
        return 0
    value = 1
    for op in seq.ops[1:]:
        if op == ADD_UNIVERSAL:
            value += 1
        else:
            value = max(1, value)
    return value


def reduce_universal(g):
    """(lowest universal vertex, g minus it) or None
    """
    universal = universal_vertices(g)
    if not universal:
        return None
    u = universal[0]
    return u, remove_vertex(g, u)


MarcuBound = namedtuple('MarcuBound', ['psi', 'min_n'])


def marcu_min_length(psi):
    """Shortest cycle that can have achromatic number psi
    """
    if psi < 1:
        raise PreconditionError('achromatic number must be >= 1, got {0}'
                                .format(psi))
    if psi % 2:
        return MarcuBound(psi, psi * (psi - 1) // 2)
    return MarcuBound(psi, psi * psi // 2)


def psi_cycle_upper(n):
    """Largest psi whose minimum cycle length is at most n
    """
    psi = 1
    while marcu_min_length(psi + 1).min_n <= n:
        psi += 1
    return psi
