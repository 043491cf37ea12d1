#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for graph.py
"""

import random
import itertools
import unittest
from unittest import mock

import networkx as nx
from hypothesis import given, settings, strategies as st

from foldkit.graph import (Graph, parse_graph6, emit_graph6, parse_edge_list,
                           parse_graph, distance, is_connected,
                           is_clique, canonical_key, canonical_form, permute,
                           path, cycle, complete, star, wheel, fan, join,
                           add_universal, add_isolated, complement,
                           remove_vertex, disjoint_union, generate,
                           parse_family, enumerate_graphs, enumerate_connected,
                           enumerate_graphs_bruteforce, edge_clique_bound,
                           universal_vertices, to_networkx)
from foldkit.errors import (GraphParseError, PreconditionError,
                            SizeLimitError, CanonicalizationLimitError)


class TestGraph6(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_graph6('C~'), complete(4))
        self.assertEqual(parse_graph6('Ch').edges(), [(0, 1), (1, 2), (2, 3)])
        g = parse_graph6('@')
        self.assertEqual((g.n, g.edge_count), (1, 0))

    def test_emit(self):
        self.assertEqual(emit_graph6(complete(4)), 'C~')
        self.assertEqual(emit_graph6(path(4)), 'Ch')
        self.assertEqual(emit_graph6(Graph(1)), '@')
        self.assertEqual(emit_graph6(Graph(0)), '?')

    def test_header_and_newline(self):
        self.assertEqual(parse_graph6('>>graph6<<Ch\n'), path(4))

    def test_long_size_header(self):
        g = cycle(63)
        text = emit_graph6(g)
        self.assertTrue(text.startswith('~??~'))
        self.assertEqual(parse_graph6(text), g)

    def test_errors_name_offset(self):
        with self.assertRaises(GraphParseError) as cm:
            parse_graph6('C~~')
        self.assertIn('trailing garbage', str(cm.exception))
        self.assertEqual(cm.exception.offset, 2)
        with self.assertRaises(GraphParseError) as cm:
            parse_graph6('C\t')
        self.assertEqual(cm.exception.offset, 1)
        with self.assertRaises(GraphParseError):
            parse_graph6('C')
        with self.assertRaises(GraphParseError):
            parse_graph6('')
        with self.assertRaises(GraphParseError) as cm:
            parse_graph6('~?@@')
        self.assertIn('65 vertices', str(cm.exception))

    def test_networkx_agrees(self):
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                h = to_networkx(g)
                expected = nx.to_graph6_bytes(h, header=False).strip()
                self.assertEqual(emit_graph6(g).encode('ascii'), expected)
        h = nx.from_graph6_bytes(b'Ch')
        self.assertEqual(sorted(tuple(sorted(e)) for e in h.edges()),
                         path(4).edges())

    def test_decoded_by_networkx(self):
        with mock.patch('foldkit.graph.nx.from_graph6_bytes',
                        wraps=nx.from_graph6_bytes) as decode:
            self.assertEqual(parse_graph6('C~'), complete(4))
        decode.assert_called_once_with(b'C~')

    def test_round_trip(self):
        for n in range(8):
            for g in enumerate_graphs(n):
                self.assertEqual(parse_graph6(emit_graph6(g)), g)


class TestEdgeList(unittest.TestCase):

    def test_parse(self):
        self.assertEqual(parse_edge_list('n 3\n0 1\n1 2\n0 2\n'), complete(3))
        self.assertEqual(parse_edge_list('n 4\n0 1\n1 2\n2 3\n'), path(4))

    def test_comments_and_duplicates(self):
        text = '# a path\nn 3\n0 1\n\n1 0  # again\n2 1\n'
        self.assertEqual(parse_edge_list(text), path(3))

    def test_loop_names_line(self):
        with self.assertRaises(GraphParseError) as cm:
            parse_edge_list('n 2\n0 0\n')
        self.assertEqual(cm.exception.line, 2)
        self.assertIn('loop', str(cm.exception))

    def test_out_of_range(self):
        with self.assertRaises(GraphParseError) as cm:
            parse_edge_list('n 2\n0 1\n1 5\n')
        self.assertEqual(cm.exception.line, 3)

    def test_bad_header(self):
        with self.assertRaises(GraphParseError) as cm:
            parse_edge_list('0 1\n')
        self.assertEqual(cm.exception.line, 1)

    def test_wheel(self):
        text = 'n 6\n' + '\n'.join('{0} {1}'.format(u, v)
                                  for u, v in wheel(5).edges())
        self.assertEqual(parse_edge_list(text), wheel(5))

    def test_autodetect(self):
        self.assertEqual(parse_graph('Ch\n'), path(4))
        self.assertEqual(parse_graph('n 2\n0 1\n'), complete(2))
        self.assertEqual(parse_graph('# K2\nn 2\n0 1\n'), complete(2))


class TestPredicates(unittest.TestCase):

    def test_distance(self):
        p4 = path(4)
        self.assertEqual(distance(p4, 0, 2), 2)
        self.assertEqual(distance(p4, 0, 3), 3)
        two_k2 = Graph(4, [(0, 1), (2, 3)])
        self.assertIsNone(distance(two_k2, 0, 2))

    def test_distance_metric(self):
        for n in range(1, 7):
            for g in enumerate_connected(n):
                d = [[distance(g, u, v) for v in range(n)] for u in range(n)]
                for u, v in itertools.product(range(n), repeat=2):
                    self.assertEqual(d[u][v], d[v][u])
                    self.assertEqual(d[u][v] == 0, u == v)
                    for w in range(n):
                        self.assertLessEqual(d[u][w], d[u][v] + d[v][w])

    def test_connected_and_clique(self):
        self.assertTrue(is_clique(complete(5)))
        self.assertFalse(is_clique(cycle(4)))
        self.assertTrue(is_connected(cycle(4)))
        self.assertFalse(is_connected(Graph(4, [(0, 1), (2, 3)])))
        self.assertTrue(is_connected(Graph(0)))
        self.assertTrue(is_connected(Graph(1)))

    def test_edge_clique_bound(self):
        self.assertEqual([edge_clique_bound(m) for m in range(7)],
                         [1, 2, 2, 3, 3, 3, 4])

    def test_bad_vertex(self):
        with self.assertRaises(PreconditionError):
            Graph(2, [(0, 2)])
        with self.assertRaises(PreconditionError):
            Graph(2, [(1, 1)])
        with self.assertRaises(PreconditionError):
            distance(path(3), 0, 3)

    def test_immutable(self):
        g = path(3)
        with self.assertRaises(AttributeError):
            g.n = 4


class TestConstructions(unittest.TestCase):

    def test_families(self):
        g = wheel(9)
        self.assertEqual((g.n, g.edge_count), (10, 18))
        self.assertEqual(join(complete(1), complete(1)), complete(2))
        w4 = add_universal(cycle(4))
        self.assertEqual(w4, wheel(4))
        self.assertEqual(w4.degree(4), 4)
        self.assertEqual(star(3).edges(), [(0, 1), (0, 2), (0, 3)])
        self.assertEqual(universal_vertices(fan(4)), [4])

    def test_generate(self):
        self.assertEqual(generate(parse_family('cycle:9')), cycle(9))
        self.assertEqual(generate(parse_family(' wheel : 5 ')), wheel(5))
        with self.assertRaises(GraphParseError):
            parse_family('cycle')
        with self.assertRaises(GraphParseError):
            parse_family('petersen:10')
        with self.assertRaises(PreconditionError):
            generate(parse_family('cycle:2'))

    def test_vertex_operations(self):
        self.assertEqual(remove_vertex(wheel(9), 9), cycle(9))
        self.assertEqual(add_isolated(complete(2)), Graph(3, [(0, 1)]))
        self.assertEqual(disjoint_union(complete(2), complete(2)),
                         Graph(4, [(0, 1), (2, 3)]))
        self.assertEqual(complement(cycle(4)), Graph(4, [(0, 2), (1, 3)]))
        with self.assertRaises(PreconditionError):
            permute(path(3), [0, 0, 1])


class TestCanonicalKey(unittest.TestCase):

    def test_relabeled_path(self):
        relabeled = Graph(4, [(3, 1), (1, 0), (0, 2)])
        self.assertEqual(canonical_key(path(4)), canonical_key(relabeled))

    def test_distinguishes(self):
        self.assertNotEqual(canonical_key(path(4)), canonical_key(star(3)))
        self.assertNotEqual(canonical_key(cycle(4)),
                            canonical_key(Graph(4, [(0, 1), (2, 3)])))

    def test_form_is_isomorphic_copy(self):
        g = fan(5)
        h = canonical_form(g)
        self.assertEqual(h.n, g.n)
        self.assertEqual(h.edge_count, g.edge_count)
        self.assertEqual(canonical_form(h), h)

    def test_limit(self):
        with self.assertRaises(CanonicalizationLimitError) as cm:
            canonical_key(complete(5), limit=4)
        self.assertIn('too large to canonicalize', str(cm.exception))

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_invariant_under_permutation(self, data):
        n = data.draw(st.integers(min_value=1, max_value=8))
        pairs = list(itertools.combinations(range(n), 2))
        chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True)
                           if pairs else st.just([]))
        perm = data.draw(st.permutations(list(range(n))))
        g = Graph(n, chosen)
        self.assertEqual(canonical_key(g), canonical_key(permute(g, perm)))


    def test_hundred_permutations_each(self):
        rng = random.Random(11)
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                key = canonical_key(g)
                for _ in range(100):
                    perm = list(range(n))
                    rng.shuffle(perm)
                    self.assertEqual(canonical_key(permute(g, perm)), key)

    def test_key_does_not_go_through_graph6(self):
        with mock.patch('foldkit.graph.emit_graph6',
                        side_effect=AssertionError):
            self.assertEqual(canonical_key(wheel(5)),
                             canonical_key(permute(wheel(5),
                                                   [5, 4, 3, 2, 1, 0])))


class TestEnumeration(unittest.TestCase):

    def test_census(self):
        self.assertEqual([len(enumerate_graphs(n)) for n in range(7)],
                         [1, 1, 2, 4, 11, 34, 156])
        self.assertEqual([len(list(enumerate_connected(n)))
                          for n in range(1, 7)],
                         [1, 1, 2, 6, 21, 112])

    def test_small_connected(self):
        found = list(enumerate_connected(3))
        self.assertEqual(sorted(g.edge_count for g in found), [2, 3])

    def test_bruteforce_agrees(self):
        for n in range(6):
            self.assertEqual(
                [canonical_key(g) for g in enumerate_graphs_bruteforce(n)],
                [canonical_key(g) for g in enumerate_graphs(n)])

    def test_networkx_isomorphism_classes(self):
        graphs = [to_networkx(g) for g in enumerate_graphs(5)]
        for a, b in itertools.combinations(graphs, 2):
            self.assertFalse(nx.is_isomorphic(a, b))

    def test_bound(self):
        with self.assertRaises(SizeLimitError):
            enumerate_graphs(5, bound=4)
        with self.assertRaises(SizeLimitError):
            list(enumerate_connected(6, bound=5))


if __name__ == '__main__':
    unittest.main()
