from unittest import TestCase

from hypothesis import HealthCheck, given, settings, strategies as st

from quiver_rank.errors import QuiverMismatchException
from quiver_rank.rep.hom import *
from quiver_rank.rep.representation import direct_sum, identity_morphism, identity_rep
from tests.fixture_reps import FIXTURE_QUIVERS, K4_V, LOOP_INVERTIBLE, LOOP_NILPOTENT, QA, V3, W, q3_document
from tests.random_reps import reps


class TestHom(TestCase):

    def test_endomorphisms(self):
        self.assertEqual(1, hom_dim(V3, V3))
        self.assertEqual(1, hom_dim(W, W))
        self.assertEqual(1, hom_dim(K4_V, K4_V))
        self.assertEqual(2, hom_dim(LOOP_INVERTIBLE, LOOP_INVERTIBLE))
        self.assertEqual(2, hom_dim(LOOP_NILPOTENT, LOOP_NILPOTENT))

    def test_hom_with_identity(self):
        one = identity_rep(QA)
        self.assertEqual(0, hom_dim(one, W))
        self.assertEqual(1, hom_dim(W, one))

    def test_hom_between_thin_and_v3(self):
        simple = q3_document.rep('T0100')
        self.assertEqual(1, hom_dim(V3, simple))
        self.assertEqual(0, hom_dim(simple, V3))

    def test_basis(self):
        basis = hom_space(W, W)
        self.assertEqual(1, len(basis))
        f = basis[0]
        c = f.comp('1').entry(0, 0)
        self.assertNotEqual(0, c)
        self.assertEqual(identity_morphism(W).scale(c), f)

    def test_system_shape(self):
        system = intertwining_system(W, W)
        self.assertEqual((2 + 2 + 2, 1 + 1 + 4 + 1), system.shape)

    def test_mismatch(self):
        with self.assertRaises(QuiverMismatchException):
            hom_dim(V3, W)

    @settings(max_examples=60, deadline=None, derandomize=True,
              suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
    @given(st.data())
    def test_additive(self, data):
        for q in FIXTURE_QUIVERS:
            u = data.draw(reps(q, name='U'))
            v = data.draw(reps(q, name='V'))
            w = data.draw(reps(q, name='W'))
            self.assertEqual(hom_dim(u, w) + hom_dim(v, w), hom_dim(direct_sum(u, v).total, w))
            self.assertEqual(hom_dim(w, u) + hom_dim(w, v), hom_dim(w, direct_sum(u, v).total))
            self.assertEqual(len(hom_space(u, w)), hom_dim(u, w))
            if not u.is_zero():
                self.assertGreaterEqual(hom_dim(u, u), 1)
