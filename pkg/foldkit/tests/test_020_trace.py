#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for trace.py
"""

import unittest

from foldkit.graph import Graph, path, cycle, complete, wheel
from foldkit.trace import (FoldStep, FoldTrace, fold_candidates, simple_fold,
                           is_fold_pair, replay, fold_classes, concat,
                           verify_trace, is_clique_trace, write_trace,
                           read_trace, compose_class_map, TRACE_HEADER)
from foldkit.errors import (FoldPreconditionError, PreconditionError,
                            TraceFormatError)


class TestSimpleFold(unittest.TestCase):

    def test_candidates(self):
        self.assertEqual(fold_candidates(path(4)), [(0, 2), (1, 3)])
        self.assertEqual(fold_candidates(complete(4)), [])
        self.assertEqual(fold_candidates(cycle(4)), [(0, 2), (1, 3)])

    def test_fold_path(self):
        g = simple_fold(path(4), 0, 2)
        # merged 0 sees 1 and old 3 (now 2)
        self.assertEqual(g, Graph(3, [(0, 1), (0, 2)]))

    def test_fold_cycle(self):
        self.assertEqual(simple_fold(cycle(4), 0, 2),
                         Graph(3, [(0, 1), (0, 2)]))

    def test_pair_order_irrelevant(self):
        self.assertEqual(simple_fold(cycle(5), 3, 1),
                         simple_fold(cycle(5), 1, 3))
        self.assertEqual(FoldStep(3, 1), (1, 3))

    def test_distance_three(self):
        with self.assertRaises(FoldPreconditionError) as cm:
            simple_fold(path(4), 0, 3)
        self.assertEqual(cm.exception.distance, 3)
        self.assertIn('distance 3', str(cm.exception))

    def test_adjacent_equal_and_unreachable(self):
        with self.assertRaises(FoldPreconditionError):
            simple_fold(path(3), 0, 1)
        with self.assertRaises(FoldPreconditionError):
            simple_fold(path(3), 1, 1)
        with self.assertRaises(FoldPreconditionError) as cm:
            simple_fold(Graph(4, [(0, 1), (2, 3)]), 0, 2)
        self.assertIsNone(cm.exception.distance)
        with self.assertRaises(PreconditionError):
            simple_fold(path(3), 0, 7)

    def test_is_fold_pair(self):
        self.assertTrue(is_fold_pair(path(3), 0, 2))
        self.assertFalse(is_fold_pair(path(3), 0, 1))
        self.assertFalse(is_fold_pair(path(3), 0, 5))


class TestTrace(unittest.TestCase):

    def setUp(self):
        self.p4 = path(4)
        self.trace = replay(self.p4, [(0, 2), (1, 2)])

    def test_replay(self):
        self.assertEqual(self.trace.target, complete(2))
        self.assertEqual(list(self.trace.class_map), [0, 1, 0, 1])
        self.assertEqual(self.trace.classes(), [[0, 2], [1, 3]])
        self.assertTrue(is_clique_trace(self.trace))

    def test_compose_class_map(self):
        self.assertEqual(compose_class_map(5, [(1, 3)]), [0, 1, 2, 1, 3])

    def test_verify_ok(self):
        check = verify_trace(self.trace)
        self.assertTrue(check)
        self.assertEqual(check.message, 'ok')

    def test_verify_bad_first_step(self):
        t = FoldTrace(self.p4, [(0, 3)], range(4), self.p4)
        check = verify_trace(t)
        self.assertFalse(check)
        self.assertEqual(check.step, 1)
        self.assertEqual(check.message, 'step 1: fold 0 3 at distance 3')

    def test_verify_tampered_map(self):
        t = FoldTrace(self.p4, self.trace.steps, [0, 1, 1, 0],
                      self.trace.target)
        check = verify_trace(t)
        self.assertFalse(check)
        self.assertEqual(check.message, 'class map mismatch')

    def test_verify_wrong_target(self):
        t = FoldTrace(self.p4, self.trace.steps, self.trace.class_map,
                      complete(3))
        check = verify_trace(t)
        self.assertFalse(check)
        self.assertIn('replay ends in', check.message)

    def test_fold_classes(self):
        g = wheel(4)
        t = fold_classes(g, [[0, 2], [1, 3], [4]])
        self.assertTrue(verify_trace(t))
        self.assertEqual(t.target, complete(3))
        self.assertEqual(t.classes(), [[0, 2], [1, 3], [4]])

    def test_concat(self):
        head = replay(self.p4, [(0, 2)])
        tail = replay(head.target, [(1, 2)])
        self.assertEqual(concat(head, tail).steps, self.trace.steps)
        with self.assertRaises(PreconditionError):
            concat(tail, head)


class TestTraceText(unittest.TestCase):

    def test_write(self):
        text = write_trace(replay(path(4), [(0, 2), (1, 2)]))
        self.assertEqual(text.splitlines(),
                         [TRACE_HEADER, 'Ch', 'fold 0 2', 'fold 1 2',
                          'target A_'])

    def test_read_back(self):
        t = replay(cycle(5), [(0, 2)])
        u = read_trace(write_trace(t))
        self.assertEqual(u.source, t.source)
        self.assertEqual(u.steps, t.steps)
        self.assertEqual(u.class_map, t.class_map)
        self.assertEqual(u.target, t.target)
        self.assertTrue(verify_trace(u))

    def test_read_source_prefix_and_comments(self):
        text = '{0}\n# P4\nsource Ch\nfold 0 2\n\ntarget Bo\n'.format(
            TRACE_HEADER)
        t = read_trace(text)
        self.assertEqual(t.source, path(4))
        self.assertEqual(t.target, Graph(3, [(0, 1), (0, 2)]))
        self.assertTrue(verify_trace(t))

    def test_read_errors(self):
        with self.assertRaises(TraceFormatError):
            read_trace('Ch\ntarget Ch\n')
        with self.assertRaises(TraceFormatError) as cm:
            read_trace('{0}\nCh\nfold 0\ntarget Bo\n'.format(TRACE_HEADER))
        self.assertEqual(cm.exception.line, 3)
        with self.assertRaises(TraceFormatError):
            read_trace('{0}\nCh\n'.format(TRACE_HEADER))


if __name__ == '__main__':
    unittest.main()
