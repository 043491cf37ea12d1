#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Simple folds and fold traces.

A simple fold identifies two vertices at distance two. The merged vertex
keeps the smaller label and every label above the larger one shifts down
by one, so a trace replays to the same labeled graph every time.
"""

from collections import namedtuple

import regex as re

from . import utils
from .graph import Graph, distance, emit_graph6, parse_graph6, is_clique
from .errors import FoldPreconditionError, PreconditionError, TraceFormatError

TRACE_HEADER = 'fold-trace v1'

re_fold = re.compile(r'^fold (\d+) (\d+)$')
re_target = re.compile(r'^target (\S+)$')
re_source = re.compile(r'^(?:source )?(\S+)$')


class FoldStep(namedtuple('FoldStep', ['x', 'y'])):
    """Unordered pair to identify, stored with x < y
    """
    __slots__ = ()

    def __new__(cls, x, y):
        if x > y:
            x, y = y, x
        return super(FoldStep, cls).__new__(cls, x, y)


class FoldTrace(object):
    """Source graph, fold steps, source -> target vertex map, target graph
    """

    def __init__(self, source, steps, class_map, target):
        self.source = source
        self.steps = tuple(FoldStep(x, y) for x, y in steps)
        self.class_map = tuple(class_map)
        self.target = target

    def __len__(self):
        return len(self.steps)

    def __repr__(self):
        return 'FoldTrace({0} -> {1}, {2} steps)'.format(
            emit_graph6(self.source), emit_graph6(self.target),
            len(self.steps))

    def classes(self):
        """Preimage of every target vertex, in target label order
        """
        out = [[] for _ in range(self.target.n)]
        for v, c in enumerate(self.class_map):
            out[c].append(v)
        return out


class TraceCheck(namedtuple('TraceCheck', ['ok', 'step', 'message'])):
    """Outcome of verify_trace; step is the 1-based failing step, if any
    """
    __slots__ = ()

    def __bool__(self):
        return self.ok


def _shift_mask(mask, lo, hi):
    """Drop bit hi from mask, moving the bits above it down by one;
       a set bit hi becomes bit lo
    """
    low = mask & ((1 << hi) - 1)
    out = low | ((mask >> (hi + 1)) << hi)
    if (mask >> hi) & 1:
        out |= 1 << lo
    return out


def relabel_after_fold(v, lo, hi):
    if v == hi:
        return lo
    return v if v < hi else v - 1


def fold_candidates(g):
    """Pairs (x, y), x < y, at distance exactly two, lexicographic order
    """
    rows = g.rows
    return [FoldStep(x, y) for x in range(g.n) for y in range(x + 1, g.n)
            if not (rows[x] >> y) & 1 and rows[x] & rows[y]]


def is_fold_pair(g, x, y):
    if not (0 <= x < g.n and 0 <= y < g.n) or x == y:
        return False
    return not g.has_edge(x, y) and bool(g.rows[x] & g.rows[y])


def simple_fold(g, x, y):
    """Identify x and y, which must be at distance two
    """
    if not is_fold_pair(g, x, y):
        if not (0 <= x < g.n and 0 <= y < g.n):
            raise PreconditionError('cannot fold {0} and {1}: vertex outside '
                                    '0..{2}'.format(x, y, g.n - 1))
        raise FoldPreconditionError(x, y, distance(g, x, y))
    lo, hi = min(x, y), max(x, y)
    rows = []
    for v, r in enumerate(g.rows):
        if v == hi:
            continue
        if v == lo:
            r |= g.rows[hi]
        rows.append(_shift_mask(r, lo, hi))
    return Graph._trusted(rows)


def compose_class_map(n, steps):
    """Source vertex -> final label after applying steps
    """
    cmap = list(range(n))
    for x, y in steps:
        lo, hi = min(x, y), max(x, y)
        cmap = [relabel_after_fold(c, lo, hi) for c in cmap]
    return cmap


def replay(source, steps):
    """Apply steps to source and return the resulting trace
    """
    g = source
    for x, y in steps:
        g = simple_fold(g, x, y)
    return FoldTrace(source, steps, compose_class_map(source.n, steps), g)


def fold_classes(g, classes):
    """Fold every class of a partition of g into one vertex

       Classes are processed in order; inside a class every member is folded
       onto the class minimum. Each fold must be at distance two in the state
       it applies to.
    """
    cmap = list(range(g.n))
    state = g
    steps = []
    for members in classes:
        members = sorted(members)
        for v in members[1:]:
            x, y = cmap[members[0]], cmap[v]
            state = simple_fold(state, x, y)
            lo, hi = min(x, y), max(x, y)
            cmap = [relabel_after_fold(c, lo, hi) for c in cmap]
            steps.append(FoldStep(x, y))
    return FoldTrace(g, steps, cmap, state)


def concat(first, second):
    """Trace for first followed by second (second.source == first.target)
    """
    if first.target != second.source:
        raise PreconditionError('traces do not chain')
    return replay(first.source, first.steps + second.steps)


def verify_trace(t):
    """Replay t and report the first problem found
    """
    g = t.source
    for i, (x, y) in enumerate(t.steps):
        if not is_fold_pair(g, x, y):
            if 0 <= x < g.n and 0 <= y < g.n:
                d = distance(g, x, y)
                why = 'unreachable' if d is None else 'distance {0}'.format(d)
            else:
                why = 'vertex outside 0..{0}'.format(g.n - 1)
            return TraceCheck(False, i + 1, 'step {0}: fold {1} {2} at {3}'
                              .format(i + 1, x, y, why))
        g = simple_fold(g, x, y)
    if g != t.target:
        return TraceCheck(False, None, 'replay ends in {0}, trace claims {1}'
                          .format(emit_graph6(g), emit_graph6(t.target)))
    if list(t.class_map) != compose_class_map(t.source.n, t.steps):
        return TraceCheck(False, None, 'class map mismatch')
    return TraceCheck(True, None, 'ok')


def is_clique_trace(t):
    return bool(verify_trace(t)) and is_clique(t.target)


def write_trace(t):
    lines = [TRACE_HEADER, emit_graph6(t.source)]
    lines.extend('fold {0} {1}'.format(x, y) for x, y in t.steps)
    lines.append('target {0}'.format(emit_graph6(t.target)))
    return '\n'.join(lines) + '\n'


def read_trace(text):
    """Parse the fold-trace v1 text form

       The class map is recomputed from the steps; verify_trace checks the
       rest against the recorded target.
    """
    lines = list(utils.content_lines(text))
    if not lines or lines[0][1] != TRACE_HEADER:
        raise TraceFormatError("missing '{0}' header".format(TRACE_HEADER),
                               line=lines[0][0] if lines else 1)
    if len(lines) < 3:
        raise TraceFormatError('trace needs source and target lines',
                               line=lines[-1][0])
    lineno, line = lines[1]
    m = re_source.match(line)
    if not m:
        raise TraceFormatError("bad source line '{0}'".format(line),
                               line=lineno)
    source = parse_graph6(m.group(1))
    steps = []
    for lineno, line in lines[2:-1]:
        m = re_fold.match(line)
        if not m:
            raise TraceFormatError("expected 'fold x y', got '{0}'"
                                   .format(line), line=lineno)
        steps.append(FoldStep(int(m.group(1)), int(m.group(2))))
    lineno, line = lines[-1]
    m = re_target.match(line)
    if not m:
        raise TraceFormatError("expected 'target <graph6>', got '{0}'"
                               .format(line), line=lineno)
    target = parse_graph6(m.group(1))
    return FoldTrace(source, steps, compose_class_map(source.n, steps), target)
