from unittest import TestCase

from quiver_rank.errors import DimensionMismatchException, NotIntertwiningException, QuiverMismatchException
from quiver_rank.linalg.field import GF
from quiver_rank.linalg.matrix import Matrix
from quiver_rank.quiver.quiver import opposite, path_of, trivial_path
from quiver_rank.quiver.quiver_morphism import subquiver
from quiver_rank.rep.representation import *
from tests.fixture_reps import ALPHA, LOOP_INVERTIBLE, QA, QP, V3, VxV, W, qa_document


class TestRepresentation(TestCase):

    def test_dimensions(self):
        self.assertEqual((1, 1, 2, 1), W.dimension_vector)
        self.assertEqual(5, W.total_dim)
        self.assertEqual(2, W.dim('3'))
        self.assertEqual(Matrix.from_rows([[1, 1]]), W.mat('c'))
        self.assertEqual(['1', '2', '3', '4'], support(W))
        self.assertTrue(zero_rep(QA).is_zero())

    def test_construction_checks(self):
        with self.assertRaises(DimensionMismatchException):
            representation(QA, [1, 1, 2, 1], {'a': [[1]], 'b': [[0], [1]], 'c': [[1, 1]]})
        with self.assertRaises(DimensionMismatchException):
            representation(QA, [1, 1, 2, 1], {'a': [[1], [0]], 'b': [[0], [1]]})
        with self.assertRaises(DimensionMismatchException):
            representation(QA, [1, 1, 2])
        with self.assertRaises(DimensionMismatchException):
            representation(QA, [1, 0, 1, 0], {'a': Matrix.from_rows([[1]], GF(2))})

    def test_builders_agree_with_fixtures(self):
        built = representation(QA, {'1': 1, '2': 1, '3': 2, '4': 1},
                               {'a': [[1], [0]], 'b': [[0], [1]], 'c': [[1, 1]]}, name='W')
        self.assertEqual(W, built)
        self.assertEqual(hash(W), hash(built))
        self.assertEqual(qa_document.rep('T1010'), thin_rep(QA, ['1', '3']))
        self.assertEqual('T1010', thin_rep(QA, ['3', '1']).name)
        self.assertEqual((1, 1, 1, 1), identity_rep(QA).dimension_vector)
        self.assertEqual(qa_document.rep('T1111'), identity_rep(QA))

    def test_direct_sum(self):
        s = direct_sum(W, identity_rep(QA))
        self.assertEqual((2, 2, 3, 2), s.total.dimension_vector)
        for i, part in enumerate((W, identity_rep(QA))):
            self.assertEqual(identity_morphism(part), s.projections[i] @ s.insertions[i])
        self.assertTrue((s.projections[1] @ s.insertions[0]).is_zero())
        restored = s.insertions[0] @ s.projections[0] + s.insertions[1] @ s.projections[1]
        self.assertEqual(identity_morphism(s.total), restored)
        self.assertEqual(W, direct_sum_of(QA, [W]))

        with self.assertRaises(QuiverMismatchException):
            direct_sum(W, V3)

    def test_tensor(self):
        self.assertEqual(VxV, tensor(V3, V3))
        self.assertEqual(W, tensor(W, identity_rep(QA)))
        self.assertEqual((1, 1, 4, 1), tensor(W, W).dimension_vector)

        with self.assertRaises(QuiverMismatchException):
            tensor(W, V3)

    def test_dual(self):
        d = dual(W)
        self.assertEqual(opposite(QA), d.quiver)
        self.assertEqual(Matrix.from_rows([[1], [1]]), d.mat('c'))
        self.assertEqual(W, dual(d))

    def test_paths_and_pullbacks(self):
        self.assertEqual(Matrix.from_rows([[1]]), path_map(W, path_of(QA, ['a', 'c'])))
        self.assertEqual(Matrix.identity(W.field, 2), path_map(W, trivial_path(QA, '3')))

        pulled = pullback(ALPHA, W)
        self.assertEqual(QP, pulled.quiver)
        self.assertEqual((1, 2, 1, 2, 1), pulled.dimension_vector)
        self.assertEqual(W.mat('c'), pulled.mat('cb'))

        restricted = restrict(W, subquiver(QA, ['1', '3'], ['a']))
        self.assertEqual((1, 2), restricted.dimension_vector)

        with self.assertRaises(QuiverMismatchException):
            pullback(ALPHA, V3)

    def test_schur_functors(self):
        self.assertEqual((1, 0, 0, 0), exterior(V3, 2).dimension_vector)
        self.assertEqual((3, 1, 1, 1), symmetric(V3, 2).dimension_vector)
        self.assertEqual((1, 1, 1, 1), symmetric(V3, 0).dimension_vector)
        self.assertEqual((1, 1, 1, 1), exterior(V3, 0).dimension_vector)
        self.assertEqual(V3, exterior(V3, 1))
        self.assertEqual(V3, symmetric(V3, 1))
        self.assertEqual(Matrix.from_rows([[1, 1, 1], [0, 1, 2], [0, 0, 1]]), symmetric(LOOP_INVERTIBLE, 2).mat('l'))

        with self.assertRaises(ValueError):
            exterior(V3, -1)


class TestRepMorphism(TestCase):

    def test_intertwining_check(self):
        comps = {x: Matrix.identity(W.field, W.dims[x]) for x in QA.vertices}
        comps['1'] = Matrix.zeros(W.field, 1, 1)
        with self.assertRaises(NotIntertwiningException):
            RepMorphism(W, W, comps)
        with self.assertRaises(DimensionMismatchException):
            RepMorphism(W, W, {'1': Matrix.zeros(W.field, 1, 1)})
        with self.assertRaises(DimensionMismatchException):
            identity_morphism(V3) @ identity_morphism(W)

    def test_arithmetic(self):
        one = identity_morphism(W)
        self.assertEqual(one.scale(2), one + one)
        self.assertTrue((one - one).is_zero())
        self.assertEqual(one, one @ one)
        self.assertEqual(one.scale(8), one.scale(2).power(3))
        self.assertTrue(one.is_endomorphism())
        self.assertTrue(one.is_invertible())
        self.assertFalse(zero_morphism(W, W).is_invertible())
        self.assertEqual(one.scale(5), linear_combination([2, 3], [one, one], W, W))

    def test_tensor_and_dual_morphisms(self):
        self.assertEqual(identity_morphism(tensor(W, W)), tensor_morphism(identity_morphism(W), identity_morphism(W)))
        self.assertEqual(identity_morphism(dual(W)), dual_morphism(identity_morphism(W)))
        self.assertEqual(identity_morphism(direct_sum(V3, V3).total),
                         morphism_direct_sum(identity_morphism(V3), identity_morphism(V3)))
