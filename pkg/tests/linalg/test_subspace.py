from unittest import TestCase

from quiver_rank.errors import DimensionMismatchException
from quiver_rank.linalg.field import GF, QQ
from quiver_rank.linalg.matrix import Matrix
from quiver_rank.linalg.subspace import *


def span(*columns, field=QQ, ambient=3) -> Subspace:
    return Subspace.spanned_by(Matrix.from_columns([list(c) for c in columns], field, rows=ambient))


class TestSubspace(TestCase):

    def test_canonical_basis(self):
        self.assertEqual(span((1, 1, 0)), span((2, 2, 0)))
        self.assertEqual(span((1, 0, 0), (0, 1, 0)), span((1, 1, 0), (1, -1, 0)))
        self.assertNotEqual(span((1, 0, 0)), span((0, 1, 0)))
        self.assertEqual(hash(span((1, 2, 3))), hash(span((-1, -2, -3))))
        self.assertEqual(Subspace.zero(QQ, 3), span())

    def test_dimensions(self):
        self.assertEqual(2, span((1, 0, 0), (0, 1, 0), (1, 1, 0)).dim)
        self.assertTrue(Subspace.full(QQ, 3).is_full())
        self.assertTrue(Subspace.zero(QQ, 3).is_zero())

    def test_intersect_and_sum(self):
        s = span((1, 0, 0), (0, 1, 0))
        t = span((0, 1, 0), (0, 0, 1))
        self.assertEqual(span((0, 1, 0)), intersect(s, t))
        self.assertTrue(sum_of(s, t).is_full())
        self.assertEqual(Subspace.zero(QQ, 3), intersect(span((1, 0, 0)), span((0, 1, 0))))

        with self.assertRaises(DimensionMismatchException):
            intersect(s, Subspace.full(QQ, 2))

    def test_contains(self):
        s = span((1, 0, 0), (0, 1, 0))
        self.assertTrue(s.contains(Matrix.from_columns([[3, 4, 0]], QQ, rows=3)))
        self.assertFalse(s.contains(Matrix.from_columns([[0, 0, 1]], QQ, rows=3)))
        self.assertTrue(span((1, 1, 0)) <= s)
        self.assertFalse(span((1, 1, 1)) <= s)

    def test_coordinates(self):
        s = span((1, 0, 1), (0, 1, 1))
        v = Matrix.from_columns([[2, 3, 5]], QQ, rows=3)
        self.assertEqual(v, s.basis @ s.coordinates(v))

    def test_annihilator(self):
        s = span((1, 1, 0))
        self.assertEqual(s, kernel(s.annihilator()))
        self.assertEqual(2, s.annihilator().rows)
        self.assertEqual(0, Subspace.full(QQ, 3).annihilator().rows)

    def test_image_kernel(self):
        m = Matrix.from_rows([[1, 0, 1], [0, 1, 1]])
        self.assertTrue(image(m).is_full())
        self.assertEqual(span((1, 1, -1)), kernel(m))

    def test_preimage_and_push_forward(self):
        m = Matrix.from_rows([[1, 0, 0], [0, 0, 0], [0, 0, 1]])
        self.assertEqual(span((1, 0, 0), (0, 1, 0)), preimage(m, span((1, 0, 0))))
        self.assertEqual(kernel(m), preimage(m, Subspace.zero(QQ, 3)))
        self.assertEqual(span((1, 0, 0)), push_forward(m, span((1, 1, 0))))

        with self.assertRaises(DimensionMismatchException):
            push_forward(m, Subspace.full(QQ, 2))

    def test_prime_field(self):
        k = GF(2)
        self.assertEqual(span((1, 1, 0), field=k), span((1, 1, 0), (0, 0, 0), field=k))
        # (1, 1) and (1, -1) coincide in characteristic 2
        self.assertEqual(1, span((1, 1, 0), (1, -1, 0), field=k).dim)
