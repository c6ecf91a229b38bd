from unittest import TestCase

from hypothesis import HealthCheck, given, settings, strategies as st

from quiver_rank.dsl.document import Document
from quiver_rank.dsl.dsl_parser import parse
from quiver_rank.dsl.dsl_printer import *
from quiver_rank.rep.representation import identity_morphism
from tests.fixture_reps import FIXTURE_QUIVERS, W, a3_document, a4alt_document, k2_document, k4_document, loop_document, \
    q3_document, qa_document, two_sub_document
from tests.random_reps import reps

FIXTURE_DOCUMENTS = [q3_document, qa_document, a3_document, two_sub_document, a4alt_document, k2_document, k4_document,
                     loop_document]


class TestDslPrinter(TestCase):

    def test_formats(self):
        self.assertEqual('(1, 1, 2, 1)', format_dimension_vector(W))
        self.assertEqual('[[1, 1]]', format_matrix(W.mat('c')))
        self.assertEqual('1: [[1]]\n2: [[1]]\n3: [[1, 0], [0, 1]]\n4: [[1]]',
                         format_rep_morphism(identity_morphism(W)))
        self.assertEqual('quiver QA {\n    vertices: 1 2 3 4;\n    arrow a: 1 -> 3;\n'
                         '    arrow b: 2 -> 3;\n    arrow c: 3 -> 4;\n}', format_quiver(W.quiver))

    def test_skips_empty_maps(self):
        text = format_representation(qa_document.rep('T1010'))
        self.assertIn('map a = [[1]];', text)
        self.assertNotIn('map b', text)
        self.assertIn('dim 2 = 0;', text)

    def test_round_trip(self):
        for document in FIXTURE_DOCUMENTS:
            text = print_document(document)
            reparsed = parse(text)
            self.assertEqual(document, reparsed)
            self.assertEqual(text, print_document(reparsed))

    @settings(max_examples=50, deadline=None, derandomize=True,
              suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
    @given(st.data())
    def test_random_round_trip(self, data):
        for q in FIXTURE_QUIVERS:
            v = data.draw(reps(q, max_dim=3))
            document = Document({q.name: q}, {'V': v}, {})
            self.assertEqual(document, parse(print_document(document)))
