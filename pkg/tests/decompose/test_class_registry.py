from concurrent.futures import ThreadPoolExecutor
from unittest import TestCase

from quiver_rank.decompose.class_registry import *
from quiver_rank.errors import QuiverMismatchException
from quiver_rank.quiver.quiver_morphism import full_subquiver
from quiver_rank.rank.rank_functors import global_rank
from quiver_rank.rep.representation import direct_sum, tensor
from tests.fixture_reps import ALPHA, Q3, QA, V3, VxV, W, W_PRIME, q3_document


class TestClassRegistry(TestCase):

    def test_classify(self):
        registry = ClassRegistry(QA)
        w = registry.classify(W, label='W')
        self.assertEqual('W', w.label)
        self.assertIs(w, registry.classify(W_PRIME, label='other'))
        self.assertEqual(1, len(registry))
        self.assertEqual((1, 1, 2, 1), w.dimension_vector)
        self.assertEqual(11, len(w.fingerprint[1]))
        self.assertEqual('[W]', repr(w))

        with self.assertRaises(QuiverMismatchException):
            registry.classify(V3)

    def test_default_labels_and_order(self):
        registry = ClassRegistry(Q3)
        v3 = registry.classify(V3)
        t = registry.classify(q3_document.rep('T1000'))
        self.assertEqual('(2,1,1,1)', v3.label)
        self.assertEqual([t, v3], registry.classes)
        self.assertIs(v3, registry.get(v3.id))

    def test_decompose(self):
        registry = ClassRegistry(Q3)
        parts = registry.decompose(VxV)
        self.assertEqual(4, len(parts))
        self.assertEqual(4, len(set(parts)))
        self.assertEqual(parts, registry.decompose(tensor(V3, V3)))
        doubled = registry.decompose(direct_sum(VxV, VxV).total)
        self.assertEqual(sorted(c.id for c in parts + parts), sorted(c.id for c in doubled))

    def test_products_and_ranks(self):
        registry = ClassRegistry(Q3)
        v3 = registry.classify(V3)
        product = registry.product(v3.id, v3.id)
        self.assertEqual(4, len(product))
        self.assertEqual({1}, set(product.values()))
        self.assertIs(product, registry.product(v3.id, v3.id))
        self.assertEqual(global_rank(V3), registry.rank_of(v3.id, full_subquiver(Q3)))

        qa_registry = ClassRegistry(QA)
        w = qa_registry.classify(W)
        self.assertEqual(1, qa_registry.rank_of(w.id, ALPHA))

    def test_concurrent_classify(self):
        registry = ClassRegistry(QA)
        with ThreadPoolExecutor(max_workers=4) as executor:
            classes = list(executor.map(registry.classify, [W, W_PRIME] * 4))
        self.assertEqual(1, len(registry))
        self.assertEqual({0}, {c.id for c in classes})

    def test_concurrent_products_and_ranks(self):
        registry = ClassRegistry(Q3)
        v3 = registry.classify(V3)
        full = full_subquiver(Q3)
        with ThreadPoolExecutor(max_workers=4) as executor:
            products = list(executor.map(lambda _: registry.product(v3.id, v3.id), range(8)))
            ranks = list(executor.map(lambda _: registry.rank_of(v3.id, full), range(8)))
        self.assertTrue(all(p is products[0] for p in products))
        self.assertEqual(4, len(products[0]))
        self.assertEqual({global_rank(V3)}, set(ranks))
