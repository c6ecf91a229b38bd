from math import comb
from unittest import TestCase

from hypothesis import HealthCheck, given, settings, strategies as st

from quiver_rank.decompose.decomposition import iso
from quiver_rank.linalg.matrix import rank
from quiver_rank.linalg.subspace import image, intersect, kernel, preimage, push_forward, sum_of
from quiver_rank.rank.rank_functors import *
from quiver_rank.rep.limits import limit
from quiver_rank.rep.representation import direct_sum, dual, exterior, symmetric, tensor
from tests.fixture_reps import A3, A4ALT, FIXTURE_QUIVERS, TREE_QUIVERS, TWO_SUB
from tests.random_reps import reps

RANK_SETTINGS = settings(max_examples=200, deadline=None, derandomize=True,
                         suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])


class TestRankProperties(TestCase):

    @RANK_SETTINGS
    @given(st.data())
    def test_multiplicative(self, data):
        for q in FIXTURE_QUIVERS:
            v = data.draw(reps(q, name='V'))
            w = data.draw(reps(q, name='W'))
            product = global_tensor(tensor(v, w))
            gamma_v, gamma_w = global_tensor(v).gamma, global_tensor(w).gamma
            self.assertEqual(global_rank(v) * global_rank(w), product.global_rank, q.name)
            self.assertTrue(iso(product.gamma, tensor(gamma_v, gamma_w)), q.name)

    @RANK_SETTINGS
    @given(st.data(), st.integers(min_value=1, max_value=2))
    def test_schur_functors(self, data, k):
        for q in FIXTURE_QUIVERS:
            v = data.draw(reps(q))
            r = global_rank(v)
            self.assertEqual(comb(r, k), global_rank(exterior(v, k)), q.name)
            self.assertEqual(comb(r + k - 1, k), global_rank(symmetric(v, k)), q.name)
            if k == 2:
                self.assertTrue(iso(tensor(v, v), direct_sum(symmetric(v, 2), exterior(v, 2)).total), q.name)

    @RANK_SETTINGS
    @given(st.data())
    def test_additive_and_self_dual(self, data):
        for q in FIXTURE_QUIVERS:
            v = data.draw(reps(q, name='V'))
            w = data.draw(reps(q, name='W'))
            gamma_v, gamma_w = global_tensor(v).gamma, global_tensor(w).gamma
            total = global_tensor(direct_sum(v, w).total)
            self.assertEqual(global_rank(v) + global_rank(w), total.global_rank, q.name)
            self.assertTrue(iso(total.gamma, direct_sum(gamma_v, gamma_w).total), q.name)

            self.assertEqual(max_epi_sub(dual(v)).carrier, dual(max_mono_quot(v).carrier), q.name)
            self.assertEqual(dual(max_epi_sub(v).carrier), max_mono_quot(dual(v)).carrier, q.name)
            self.assertTrue(iso(dual(gamma_v), global_tensor(dual(v)).gamma), q.name)
            self.assertEqual(global_rank(v), global_rank(dual(v)), q.name)

    @RANK_SETTINGS
    @given(st.data())
    def test_delta_is_epimorphic_and_nabla_monomorphic(self, data):
        for q in FIXTURE_QUIVERS:
            v = data.draw(reps(q))
            delta = max_epi_sub(v)
            nabla = max_mono_quot(v)
            for a in q.arrows:
                self.assertEqual(delta.carrier.dims[a.head], rank(delta.carrier.mats[a.name]))
                self.assertEqual(nabla.carrier.dims[a.tail], rank(nabla.carrier.mats[a.name]))
                self.assertEqual(delta.spaces[a.head], push_forward(v.mats[a.name], delta.spaces[a.tail]))

    @RANK_SETTINGS
    @given(st.data())
    def test_trees_agree_with_limits(self, data):
        for q in TREE_QUIVERS:
            v = data.draw(reps(q))
            self.assertEqual(max_epi_sub(v).spaces, max_epi_sub_via_limits(v).spaces)
            self.assertEqual(max_mono_quot(v).spaces, max_mono_quot_via_limits(v).spaces)
            self.assertEqual(global_rank(v), rank(limit(v).eta))

    @RANK_SETTINGS
    @given(st.data())
    def test_closed_forms(self, data):
        v = data.draw(reps(A3, max_dim=3))
        self.assertEqual(rank(v.mat('B') @ v.mat('A')), global_rank(v))

        v = data.draw(reps(TWO_SUB, max_dim=3))
        self.assertEqual(intersect(image(v.mat('A')), image(v.mat('B'))).dim, global_rank(v))

        v = data.draw(reps(A4ALT, max_dim=3))
        im_a = image(v.mat('A'))
        first = intersect(im_a, image(v.mat('B'))).dim \
            - intersect(im_a, push_forward(v.mat('B'), kernel(v.mat('C')))).dim
        pulled = preimage(v.mat('B'), im_a)
        second = pulled.dim - intersect(pulled, sum_of(kernel(v.mat('B')), kernel(v.mat('C')))).dim
        self.assertEqual(first, global_rank(v))
        self.assertEqual(second, global_rank(v))
