#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Verification suites: each one checks a folding or colouring theorem over
enumerated or generated graphs and returns a VerificationReport.

A suite is a pair of functions. `instances(max_n, seed)` lists picklable
instances (graph6 strings plus parameters) and `check(instance)` returns
the list of failures for one instance, so instances can be spread over a
process pool and gathered back in order.
"""

import time
import random
import signal
import logging
from collections import namedtuple
from multiprocessing import Pool

from .graph import (emit_graph6, parse_graph6, enumerate_graphs,
                    enumerate_connected, add_universal, join, cycle, wheel,
                    fan, path, Graph, is_clique, is_connected)
from .trace import fold_candidates, verify_trace
from .coloring import (chi, psi, is_proper, is_complete, has_complete_coloring,
                       complete_coloring, psi_bruteforce, coloring_from_trace)
from .folding import (sigma, sigma_oracle, fold_to_chi, fold_to_k, chi_step)
from .special import (CreationSequence, all_sequences, is_threshold,
                      psi_threshold, marcu_min_length, psi_cycle_upper,
                      CYCLE_NINE_LETTERS, letters_to_colors)
from .config import get_limits, set_limits
from .errors import FoldkitError, PreconditionError

SCHEMA = 'foldkit-v1'
DEFAULT_SEED = 0
JOIN_PAIRS = 50

Failure = namedtuple('Failure', ['graph6', 'expected', 'got'])


class VerificationReport(object):
    def __init__(self, suite, instances, failures, wall_time, max_n=None,
                 seed=None):
        self.suite = suite
        self.instances = instances
        self.failures = list(failures)
        self.wall_time = wall_time
        self.max_n = max_n
        self.seed = seed

    @property
    def passed(self):
        return not self.failures

    def to_dict(self):
        return {'schema': SCHEMA,
                'suite': self.suite,
                'max_n': self.max_n,
                'seed': self.seed,
                'instances': self.instances,
                'passed': self.passed,
                'failures': [f._asdict() for f in self.failures],
                'wall_time': round(self.wall_time, 3)}

    @classmethod
    def from_dict(cls, d):
        if d.get('schema') != SCHEMA:
            raise FoldkitError('unknown report schema {0!r}'
                               .format(d.get('schema')))
        failures = [Failure(f['graph6'], f['expected'], f['got'])
                    for f in d['failures']]
        return cls(d['suite'], d['instances'], failures, d['wall_time'],
                   d.get('max_n'), d.get('seed'))


def _fail(g, expected, got):
    return Failure(emit_graph6(g), str(expected), str(got))


def _connected_upto(max_n):
    for n in range(1, max_n + 1):
        for g in enumerate_connected(n):
            yield emit_graph6(g)


def _graphs_upto(max_n, start=1):
    for n in range(start, max_n + 1):
        for g in enumerate_graphs(n):
            yield emit_graph6(g)


# interpolation: fold onto every K_k, chi <= k <= sigma

def interpolation_instances(max_n, seed):
    return list(_connected_upto(max_n))


def interpolation_check(g6):
    g = parse_graph6(g6)
    low = chi(g).value
    high = sigma(g, bound=g.n, method='search').sigma
    failures = []
    for k in range(low, high + 1):
        t = fold_to_k(g, k, bound=g.n, method='search')
        check = verify_trace(t)
        if not check or not is_clique(t.target) or t.target.n != k:
            failures.append(_fail(g, 'K_{0}'.format(k), check.message if not
                                  check else 'K_{0}'.format(t.target.n)))
    return failures


# reduction lemma: sigma(G + u) = 1 + psi(G) = psi(G + u)

def reduction_instances(max_n, seed):
    return list(_graphs_upto(max_n))


def reduction_check(g6):
    g = parse_graph6(g6)
    h = add_universal(g)
    folded = sigma(h, bound=h.n, method='search').sigma
    inner = 1 + psi(g, bound=g.n).value
    outer = psi(h, bound=h.n).value
    if folded == inner == outer:
        return []
    return [_fail(h, 'sigma = 1 + psi(G - u) = psi = {0}'.format(inner),
                  'sigma={0} psi={1}'.format(folded, outer))]


# threshold graphs: chi = sigma = psi

def threshold_instances(max_n, seed):
    return [str(seq) for seq in all_sequences(max_n)]


def threshold_check(text):
    seq = CreationSequence.from_string(text)
    g = seq.realize()
    expected = psi_threshold(seq)
    failures = []
    found = is_threshold(g)
    if found.sequence != seq:
        failures.append(_fail(g, 'sequence {0}'.format(seq),
                              found.sequence or found.witness))
    got = {'chi': chi(g).value, 'psi': psi(g, bound=g.n).value}
    if g.n and (g.n == 1 or seq.ops[-1] == 'u'):
        got['sigma'] = sigma(g, bound=g.n, method='search').sigma
    for name in sorted(got):
        if got[name] != expected:
            failures.append(_fail(g, '{0}={1}'.format(name, expected),
                                  '{0}={1}'.format(name, got[name])))
    return failures


# Marcu: cycles never beat the length bound

def marcu_instances(max_n, seed):
    return list(range(3, max_n + 1))


def marcu_check(n):
    g = cycle(n)
    value = psi(g, bound=n).value
    failures = []
    if marcu_min_length(value).min_n > n or value > psi_cycle_upper(n):
        failures.append(_fail(g, 'psi <= {0}'.format(psi_cycle_upper(n)),
                              value))
    if has_complete_coloring(g, value + 1) is not None:
        failures.append(_fail(g, 'no complete {0}-colouring'.format(value + 1),
                              'found one'))
    return failures


# join additivity: psi(G1 + G2) = psi(G1) + psi(G2)

def random_graph(rng, n, p=0.5):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                     if rng.random() < p])


def join_instances(max_n, seed):
    rng = random.Random(seed)
    pairs = []
    for _ in range(JOIN_PAIRS):
        n1 = rng.randint(1, max_n - 1)
        n2 = rng.randint(1, max_n - n1)
        pairs.append((emit_graph6(random_graph(rng, n1)),
                      emit_graph6(random_graph(rng, n2))))
    return pairs


def join_check(pair):
    g1, g2 = parse_graph6(pair[0]), parse_graph6(pair[1])
    g = join(g1, g2)
    expected = psi(g1).value + psi(g2).value
    got = psi(g, bound=g.n).value
    if got != expected:
        return [_fail(g, expected, got)]
    return []


# fold onto K_chi without the constrained-search fallback

def fold_chi_instances(max_n, seed):
    return list(_connected_upto(max_n))


def fold_chi_check(g6):
    g = parse_graph6(g6)
    k = chi(g).value
    try:
        t = fold_to_chi(g, allow_fallback=False)
    except FoldkitError as e:
        return [_fail(g, 'K_{0}'.format(k), e)]
    check = verify_trace(t)
    if not check:
        return [_fail(g, 'valid trace', check.message)]
    colors = coloring_from_trace(t)
    if t.target.n != k or colors.k != k or not is_proper(g, colors):
        return [_fail(g, 'K_{0}'.format(k), 'K_{0}'.format(t.target.n))]
    return []


# chi rises by at most one per fold

def chi_step_instances(max_n, seed):
    return list(_graphs_upto(max_n))


def chi_step_check(g6):
    g = parse_graph6(g6)
    failures = []
    for x, y in fold_candidates(g):
        before, after = chi_step(g, x, y)
        if not before <= after <= before + 1:
            failures.append(_fail(g, 'chi in [{0},{1}] after fold {2} {3}'
                                  .format(before, before + 1, x, y), after))
    return failures


# oracle equivalence for sigma and psi

def oracle_instances(max_n, seed):
    return list(_graphs_upto(max_n))


def oracle_check(g6):
    g = parse_graph6(g6)
    failures = []
    expected = psi_bruteforce(g)
    got = psi(g, bound=g.n).value
    if got != expected:
        failures.append(_fail(g, 'psi={0}'.format(expected),
                              'psi={0}'.format(got)))
    if g.n and is_connected(g):
        expected = sigma_oracle(g)
        got = sigma(g, bound=g.n, method='search').sigma
        if got != expected:
            failures.append(_fail(g, 'sigma={0}'.format(expected),
                                  'sigma={0}'.format(got)))
    return failures


# wheels and fans

def wheels_instances(max_n, seed):
    out = [('wheel', n) for n in range(3, max_n + 1)]
    out.extend(('fan', n) for n in range(1, max_n + 1))
    if max_n >= 9:
        out.append(('cycle-nine', 9))
    return out


def wheels_check(instance):
    kind, n = instance
    if kind == 'cycle-nine':
        g = cycle(9)
        colors = letters_to_colors(CYCLE_NINE_LETTERS)
        failures = []
        if not (is_proper(g, colors) and is_complete(g, colors)):
            failures.append(_fail(g, 'published colouring complete', 'not'))
        value = psi(g).value
        if value != 4:
            failures.append(_fail(g, 'psi=4', 'psi={0}'.format(value)))
        return failures
    rim = cycle(n) if kind == 'wheel' else path(n)
    g = wheel(n) if kind == 'wheel' else fan(n)
    failures = []
    result = sigma(g, method='reduction')
    expected = 1 + psi(rim).value
    if result.sigma != expected:
        failures.append(_fail(g, 'sigma={0}'.format(expected),
                              'sigma={0}'.format(result.sigma)))
    if g.n <= get_limits().sigma:
        searched = sigma(g, method='search').sigma
        if searched != expected:
            failures.append(_fail(g, 'searched sigma={0}'.format(expected),
                                  'sigma={0}'.format(searched)))
    for k in range(chi(g).value, result.sigma + 1):
        t = fold_to_k(g, k)
        if not verify_trace(t) or t.target.n != k or not is_clique(t.target):
            failures.append(_fail(g, 'K_{0}'.format(k),
                                  'K_{0}'.format(t.target.n)))
    return failures


# complete colourings for every k, chi <= k <= psi

def achromatic_instances(max_n, seed):
    return list(_graphs_upto(max_n))


def achromatic_check(g6):
    g = parse_graph6(g6)
    failures = []
    high = psi(g, bound=g.n).value
    for k in range(chi(g).value, high + 1):
        c = complete_coloring(g, k, bound=g.n)
        if c.k != k or not is_proper(g, c) or not is_complete(g, c):
            failures.append(_fail(g, 'complete {0}-colouring'.format(k), c))
    return failures


Suite = namedtuple('Suite', ['instances', 'check', 'default_max_n', 'min_n'])
Suite.__new__.__defaults__ = (1,)

SUITES = {
    'interpolation': Suite(interpolation_instances, interpolation_check, 6),
    'reduction-lemma': Suite(reduction_instances, reduction_check, 5),
    'threshold': Suite(threshold_instances, threshold_check, 9),
    'marcu': Suite(marcu_instances, marcu_check, 12, 3),
    'join': Suite(join_instances, join_check, 9, 2),
    'fold-chi': Suite(fold_chi_instances, fold_chi_check, 6),
    'chi-step': Suite(chi_step_instances, chi_step_check, 6),
    'oracle': Suite(oracle_instances, oracle_check, 5),
    'wheels': Suite(wheels_instances, wheels_check, 9, 3),
    'achromatic-interpolation': Suite(achromatic_instances, achromatic_check,
                                      6),
}


def init_worker(limits=None):
    signal.signal(signal.SIGINT, signal.SIG_IGN)
    if limits is not None:
        set_limits(limits)


def run_suite(name, max_n=None, seed=DEFAULT_SEED, processes=1):
    """Run one suite and gather its report
    """
    if name not in SUITES:
        raise FoldkitError("unknown suite '{0}' (choose from {1})"
                           .format(name, ', '.join(sorted(SUITES))))
    suite = SUITES[name]
    if max_n is None:
        max_n = suite.default_max_n
    if max_n < suite.min_n:
        raise PreconditionError("suite '{0}' needs --max-n >= {1}, got {2}"
                                .format(name, suite.min_n, max_n))
    start = time.time()
    instances = suite.instances(max_n, seed)
    logging.info("Suite '{0}': {1} instances (max n {2})"
                 .format(name, len(instances), max_n))
    if processes > 1 and len(instances) > 1:
        pool = Pool(processes=processes, initializer=init_worker,
                    initargs=(get_limits(),))
        try:
            results = pool.map(suite.check, instances)
        finally:
            pool.terminate()
            pool.join()
    else:
        results = [suite.check(i) for i in instances]
    failures = [f for r in results for f in r]
    for f in failures:
        logging.warning('[{0}] {1}: expected {2}, got {3}'
                        .format(name, f.graph6, f.expected, f.got))
    elapsed = time.time() - start
    logging.info("Suite '{0}': {1} failures in {2:0.1f}s"
                 .format(name, len(failures), elapsed))
    return VerificationReport(name, len(instances), failures, elapsed,
                              max_n, seed)
