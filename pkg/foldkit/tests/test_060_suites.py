#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for suites.py
"""

import json
import signal
import unittest

from foldkit.suites import (run_suite, VerificationReport, Failure, SUITES,
                            SCHEMA, join_instances, marcu_instances,
                            threshold_instances, wheels_instances,
                            init_worker)
from foldkit.config import DEFAULT_LIMITS, get_limits, set_limits, reset_limits
from foldkit.errors import FoldkitError, PreconditionError, SizeLimitError


class TestSuites(unittest.TestCase):

    def tearDown(self):
        reset_limits()

    def assertPasses(self, name, max_n):
        report = run_suite(name, max_n=max_n)
        self.assertEqual(report.failures, [])
        self.assertTrue(report.passed)
        self.assertGreater(report.instances, 0)
        return report

    def test_marcu(self):
        report = self.assertPasses('marcu', 12)
        self.assertEqual(report.instances, 10)

    def test_reduction_lemma(self):
        report = self.assertPasses('reduction-lemma', 5)
        self.assertEqual(report.instances, 1 + 2 + 4 + 11 + 34)

    def test_interpolation(self):
        report = self.assertPasses('interpolation', 6)
        self.assertEqual(report.instances, 1 + 1 + 2 + 6 + 21 + 112)

    def test_threshold(self):
        report = self.assertPasses('threshold', 9)
        self.assertEqual(report.instances, 256)

    def test_join(self):
        report = self.assertPasses('join', 9)
        self.assertEqual(report.instances, 50)

    def test_fold_chi(self):
        self.assertPasses('fold-chi', 6)

    def test_chi_step(self):
        self.assertPasses('chi-step', 6)

    def test_oracle(self):
        self.assertPasses('oracle', 5)

    def test_wheels(self):
        self.assertPasses('wheels', 9)

    def test_achromatic_interpolation(self):
        self.assertPasses('achromatic-interpolation', 6)

    def test_defaults_are_acceptance_sizes(self):
        self.assertEqual(dict((k, s.default_max_n) for k, s in SUITES.items()),
                         {'interpolation': 6, 'reduction-lemma': 5,
                          'threshold': 9, 'marcu': 12, 'join': 9,
                          'fold-chi': 6, 'chi-step': 6, 'oracle': 5,
                          'wheels': 9, 'achromatic-interpolation': 6})

    def test_enumeration_bound_applies(self):
        set_limits(DEFAULT_LIMITS._replace(enumerate=4))
        for name in ('chi-step', 'interpolation', 'oracle'):
            with self.assertRaises(SizeLimitError):
                run_suite(name, max_n=5)
        self.assertTrue(run_suite('chi-step', max_n=4).passed)

    def test_max_n_below_minimum(self):
        for name, max_n in (('join', 1), ('join', 0), ('marcu', 2),
                            ('interpolation', -3), ('wheels', 2)):
            with self.assertRaises(PreconditionError):
                run_suite(name, max_n=max_n)
        self.assertEqual(run_suite('join', max_n=2).instances, 50)

    def test_every_suite_registered(self):
        self.assertEqual(sorted(SUITES),
                         ['achromatic-interpolation', 'chi-step', 'fold-chi',
                          'interpolation', 'join', 'marcu', 'oracle',
                          'reduction-lemma', 'threshold', 'wheels'])

    def test_unknown(self):
        with self.assertRaises(FoldkitError):
            run_suite('nonsense')

    def test_processes(self):
        single = run_suite('chi-step', max_n=4)
        pooled = run_suite('chi-step', max_n=4, processes=2)
        self.assertEqual(single.instances, pooled.instances)
        self.assertEqual(single.failures, pooled.failures)

    def test_worker_receives_limits(self):
        previous = signal.getsignal(signal.SIGINT)
        try:
            limits = DEFAULT_LIMITS._replace(psi=5)
            init_worker(limits)
            self.assertEqual(get_limits(), limits)
        finally:
            signal.signal(signal.SIGINT, previous)


class TestInstances(unittest.TestCase):

    def test_join_seeded(self):
        a = join_instances(9, 3)
        self.assertEqual(a, join_instances(9, 3))
        self.assertEqual(len(a), 50)
        self.assertNotEqual(a, join_instances(9, 4))

    def test_marcu(self):
        self.assertEqual(marcu_instances(12, 0), list(range(3, 13)))

    def test_threshold(self):
        self.assertEqual(len(threshold_instances(9, 0)), 256)

    def test_wheels(self):
        self.assertIn(('cycle-nine', 9), wheels_instances(9, 0))
        self.assertNotIn(('cycle-nine', 9), wheels_instances(8, 0))


class TestReport(unittest.TestCase):

    def test_round_trip(self):
        report = VerificationReport('marcu', 3, [Failure('Bw', '3', '2')],
                                    0.25, max_n=5, seed=0)
        d = json.loads(json.dumps(report.to_dict()))
        self.assertEqual(d['schema'], SCHEMA)
        self.assertFalse(d['passed'])
        back = VerificationReport.from_dict(d)
        self.assertEqual(back.failures, report.failures)
        self.assertEqual((back.suite, back.instances, back.max_n),
                         ('marcu', 3, 5))

    def test_bad_schema(self):
        with self.assertRaises(FoldkitError):
            VerificationReport.from_dict({'schema': 'other'})


if __name__ == '__main__':
    unittest.main()
