from unittest import TestCase

from quiver_rank.errors import DisconnectedQuiverException, PathCompositionException, QuiverValidationException
from quiver_rank.quiver.quiver import *
from tests.fixture_reps import A3, K2, LOOP, Q3, QA, QP


class TestQuiver(TestCase):

    def test_indices(self):
        self.assertEqual(('1', '2', '3', '4'), QA.vertices)
        self.assertEqual(('a', 'b', 'c'), QA.arrow_names)
        self.assertEqual(2, QA.vertex_index('3'))
        self.assertEqual(Arrow('c', '3', '4'), QA.arrow('c'))
        self.assertEqual(['a', 'b'], [a.name for a in QA.arrows_into('3')])
        self.assertEqual(['c'], [a.name for a in QA.arrows_out_of('3')])
        self.assertFalse(QA.has_vertex('5'))

        with self.assertRaises(QuiverValidationException):
            QA.vertex_index('5')
        with self.assertRaises(QuiverValidationException):
            QA.arrow('d')

    def test_construction_checks(self):
        with self.assertRaises(QuiverValidationException):
            Quiver(('x', 'x'), ())
        with self.assertRaises(QuiverValidationException):
            Quiver(('x', 'y'), (Arrow('a', 'x', 'y'), Arrow('a', 'y', 'x')))
        with self.assertRaises(QuiverValidationException):
            Quiver(('x',), (Arrow('a', 'x', 'z'),))

    def test_validate(self):
        validate(QA)
        validate(LOOP)
        with self.assertRaises(QuiverValidationException):
            validate(Quiver((), ()))
        with self.assertRaises(DisconnectedQuiverException):
            validate(Quiver(('x', 'y'), ()))

    def test_trees(self):
        for q in (Q3, QA, QP, A3):
            self.assertTrue(q.is_tree(), q.name)
        self.assertFalse(K2.is_tree())
        self.assertFalse(LOOP.is_tree())
        self.assertTrue(LOOP.arrow('l').is_loop())

    def test_opposite(self):
        op = opposite(A3)
        self.assertEqual('A3^op', op.name)
        self.assertEqual(Arrow('A', '2', '1'), op.arrow('A'))
        self.assertEqual(A3, opposite(op))
        self.assertEqual('A3', opposite(op).name)

    def test_equality_ignores_name(self):
        renamed = Quiver(QA.vertices, QA.arrows, name='other')
        self.assertEqual(QA, renamed)
        self.assertEqual(hash(QA), hash(renamed))
        self.assertNotEqual(QA, opposite(QA))


class TestPaths(TestCase):

    def test_path_of(self):
        p = path_of(A3, ['A', 'B'])
        self.assertEqual('1', p.tail)
        self.assertEqual('3', p.head)
        self.assertEqual(2, len(p))
        self.assertEqual('BA', repr(p))

        with self.assertRaises(PathCompositionException):
            path_of(A3, ['B', 'A'])
        with self.assertRaises(PathCompositionException):
            path_of(A3, [])

    def test_trivial_and_compose(self):
        e = trivial_path(A3, '2')
        self.assertTrue(e.is_trivial())
        self.assertEqual('e_2', repr(e))
        a, b = path_of(A3, ['A']), path_of(A3, ['B'])
        self.assertEqual(path_of(A3, ['A', 'B']), compose_paths(b, a))
        self.assertEqual(a, compose_paths(e, a))

        with self.assertRaises(PathCompositionException):
            compose_paths(a, b)
        with self.assertRaises(QuiverValidationException):
            trivial_path(A3, '7')

    def test_loop_paths(self):
        self.assertEqual('ll', repr(path_of(LOOP, ['l', 'l'])))
