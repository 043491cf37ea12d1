#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Folding connected graphs onto cliques.

sigma() finds the largest clique reachable by simple folds, fold_to_chi()
the clique on chi(G) vertices, and fold_to_k() any clique size in between.
"""

import logging
from collections import namedtuple

from .config import get_limits
from .graph import (is_connected, is_clique, edge_clique_bound,
                    universal_vertices, remove_vertex, canonical_key)
from .trace import (FoldStep, fold_candidates, simple_fold, replay,
                    fold_classes, concat)
from .coloring import chi, psi
from .errors import (DisconnectedGraphError, PreconditionError, SizeLimitError,
                     KRangeError, FoldkitError)

METHODS = ('auto', 'search', 'reduction')

SigmaResult = namedtuple('SigmaResult', ['sigma', 'witness', 'method'])


def _require_connected(g, what):
    if g.n == 0:
        raise PreconditionError('{0}: graph has no vertices'.format(what))
    if not is_connected(g):
        raise DisconnectedGraphError('{0}: graph is disconnected'.format(what))


def maximal_fold(g):
    """Fold the lexicographically least candidate until none is left
    """
    _require_connected(g, 'maximal_fold')
    state = g
    steps = []
    while True:
        cands = fold_candidates(state)
        if not cands:
            break
        x, y = cands[0]
        state = simple_fold(state, x, y)
        steps.append(FoldStep(x, y))
    return replay(g, steps)


def reachable_upper(g):
    """Upper bound on any clique reachable from g by zero or more folds

       A fold removes one vertex and never adds edges (the merged vertex's
       edges are the union of two neighbourhoods), and K_s has s(s-1)/2
       edges.
    """
    return min(g.n, edge_clique_bound(g.edge_count))


class FoldSearch(object):
    """Exact largest reachable clique, memoised by canonical key

       value(state) is exact for every state it returns for: a child is only
       skipped when its upper bound cannot beat the best sibling so far, and
       the scan stops once a child reaches the state's own upper bound.
       States above the canonicalisation limit are searched without memo.
    """

    def __init__(self, canon_limit=None):
        if canon_limit is None:
            canon_limit = get_limits().canon
        self.canon_limit = canon_limit
        self.memo = {}
        self.states = 0
        self.hits = 0

    def _key(self, g):
        if g.n > self.canon_limit:
            return None
        return canonical_key(g, limit=self.canon_limit)

    def value(self, g):
        if is_clique(g):
            return g.n
        key = self._key(g)
        if key is not None and key in self.memo:
            self.hits += 1
            return self.memo[key]
        self.states += 1
        ceiling = min(g.n - 1, edge_clique_bound(g.edge_count))
        best = 0
        for x, y in fold_candidates(g):
            child = simple_fold(g, x, y)
            if reachable_upper(child) <= best:
                continue
            best = max(best, self.value(child))
            if best >= ceiling:
                break
        if key is not None:
            self.memo[key] = best
        return best

    def witness(self, g, target):
        """Steps from g to a clique on `target` vertices
        """
        steps = []
        state = g
        while not is_clique(state):
            for x, y in fold_candidates(state):
                child = simple_fold(state, x, y)
                if reachable_upper(child) >= target and \
                        self.value(child) == target:
                    steps.append(FoldStep(x, y))
                    state = child
                    break
            else:
                raise FoldkitError('no child reaches K_{0}'.format(target))
        return steps


def sigma_by_search(g, bound=None, canon_limit=None):
    if bound is None:
        bound = get_limits().sigma
    if g.n > bound:
        raise SizeLimitError('sigma', g.n, bound)
    search = FoldSearch(canon_limit)
    value = search.value(g)
    steps = search.witness(g, value)
    logging.debug('sigma = {0} ({1} states, {2} memo hits)'
                  .format(value, search.states, search.hits))
    return SigmaResult(value, replay(g, steps), 'search')


def sigma_by_reduction(g, psi_bound=None):
    """Sigma of a graph with a universal vertex u, as 1 + psi(g - u)

       Every two non-adjacent vertices of g - u are at distance two in g,
       so the classes of a complete colouring of g - u fold one by one and
       u stays alone, ending in a clique on 1 + psi(g - u) vertices.
    """
    universal = universal_vertices(g)
    if not universal:
        raise PreconditionError('sigma by reduction needs a universal vertex')
    u = universal[0]
    rest = remove_vertex(g, u)
    result = psi(rest, psi_bound)
    classes = [[w if w < u else w + 1 for w in members]
               for members in result.certificate.classes()]
    witness = fold_classes(g, classes)
    return SigmaResult(result.value + 1, witness, 'reduction')


def sigma(g, bound=None, method='auto', canon_limit=None):
    """Largest clique onto which connected g folds, with a witness trace

       method 'search' runs the fold search, 'reduction' uses a universal
       vertex, 'auto' prefers the reduction when a universal vertex exists.
    """
    if method not in METHODS:
        raise PreconditionError("unknown sigma method '{0}'".format(method))
    _require_connected(g, 'sigma')
    if method == 'reduction' or (method == 'auto' and universal_vertices(g)):
        return sigma_by_reduction(g)
    return sigma_by_search(g, bound, canon_limit)


def sigma_oracle(g):
    """Maximum over the full fold tree, no memo and no pruning
    """
    cands = fold_candidates(g)
    if not cands:
        return g.n
    return max(sigma_oracle(simple_fold(g, x, y)) for x, y in cands)


def _fold_keeping_chi(g, k):
    """Fold sequence from g to K_k through states of chromatic number k

       Cook-Evans: a connected graph folds onto K_chi, and chi never drops
       along a fold, so every state on that sequence has chi = k.
    """
    if is_clique(g):
        return []
    for x, y in fold_candidates(g):
        child = simple_fold(g, x, y)
        if chi(child, bound=max(child.n, 1)).value != k:
            continue
        rest = _fold_keeping_chi(child, k)
        if rest is not None:
            return [FoldStep(x, y)] + rest
    return None


def fold_to_chi(g, allow_fallback=True):
    """Fold connected g onto a clique with chi(g) vertices

       Folds same-coloured pairs at distance two under an optimal colouring,
       recolouring the current state once when stuck. A connected non-clique
       state whose optimal colouring has no such pair has every closed
       neighbourhood rainbow, so chi = max degree + 1 and by Brooks it is an
       odd cycle (C9 coloured abcabcabc is one); those fall back to a search
       over chi-preserving folds.
    """
    _require_connected(g, 'fold_to_chi')
    start = chi(g, bound=max(g.n, get_limits().chi))
    k = start.value
    colors = list(start.certificate)
    state = g
    steps = []
    recoloured = False
    while not is_clique(state):
        pair = None
        for x, y in fold_candidates(state):
            if colors[x] == colors[y]:
                pair = (x, y)
                break
        if pair is None:
            if not recoloured:
                colors = list(chi(state, bound=max(state.n, 1)).certificate)
                recoloured = True
                continue
            if not allow_fallback:
                raise FoldkitError('fold_to_chi: colouring stuck at {0} '
                                   'vertices'.format(state.n))
            logging.warning('fold_to_chi: colouring stuck at {0} vertices, '
                            'searching chi-preserving folds'.format(state.n))
            tail = _fold_keeping_chi(state, k)
            if tail is None:
                raise FoldkitError('no chi-preserving fold sequence')
            steps.extend(tail)
            break
        x, y = pair
        state = simple_fold(state, x, y)
        steps.append(FoldStep(x, y))
        hi = max(x, y)
        colors = [c for v, c in enumerate(colors) if v != hi]
        recoloured = False
    trace = replay(g, steps)
    if trace.target.n != k:
        raise FoldkitError('fold_to_chi ended in K_{0}, chi is {1}'
                           .format(trace.target.n, k))
    return trace


def fold_to_k(g, k, bound=None, method='auto'):
    """Fold connected g onto K_k for chi(g) <= k <= sigma(g)

       Walks the sigma witness until the current state has chromatic number
       k (chi rises by at most one per fold), then folds that state onto its
       chi-clique.
    """
    _require_connected(g, 'fold_to_k')
    low = chi(g, bound=max(g.n, get_limits().chi)).value
    best = sigma(g, bound, method)
    if not low <= k <= best.sigma:
        raise KRangeError(k, low, best.sigma)
    state = g
    prefix = []
    for x, y in best.witness.steps:
        if chi(state, bound=max(state.n, 1)).value == k:
            break
        state = simple_fold(state, x, y)
        prefix.append(FoldStep(x, y))
    head = replay(g, prefix)
    return concat(head, fold_to_chi(state))


def chi_step(g, x, y):
    """(chi(g), chi(g folded at x, y))
    """
    before = chi(g, bound=max(g.n, 1)).value
    after = chi(simple_fold(g, x, y), bound=max(g.n, 1)).value
    return before, after

