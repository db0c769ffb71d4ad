"""
Trisected Cobordism Tests

Purpose: Morphism boundaries, composition, identities and their laws
"""

import unittest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from hypothesis import given, strategies as st

from core import GluingError
from gluing import TriMorphism, compose, identity_trisection, source_objects, target_objects
from openbook import OpenBook
from trisection import euler, sphere_cross_interval, stably_equivalent, validate
from tests.strategies import composable_triples, single_page_open_books, suite, trisection_over
from tests.test_utils import ball_morphism, page_book, parameters


@st.composite
def two_ended_morphisms(draw) -> TriMorphism:
    """Morphism with one source and one target component."""
    boundary = draw(st.lists(single_page_open_books(), min_size=2, max_size=2))
    return TriMorphism.from_source(trisection_over(draw, boundary), (0,))


class TestTriMorphism(unittest.TestCase):
    """Test TriMorphism structure"""

    def test_partition_required(self):
        with self.assertRaises(GluingError):
            TriMorphism(sphere_cross_interval(), (0,), ())
        with self.assertRaises(GluingError):
            TriMorphism(sphere_cross_interval(), (0,), (0, 1))

    def test_from_source(self):
        f = TriMorphism.from_source(sphere_cross_interval(), (1,))
        self.assertEqual(f.target, (0,))

    def test_source_objects_are_mirrored(self):
        ob = page_book(1, 1, [((1, 0), 1)])
        f = identity_trisection(ob)
        self.assertEqual(source_objects(f), [ob])
        self.assertEqual(target_objects(f), [ob])
        self.assertEqual(f.trisection.boundary[0], ob.mirror())


class TestIdentity(unittest.TestCase):
    """Test identity_trisection"""

    def test_parameters(self):
        cases = {(0, 1): (0, 2, 0), (0, 2): (2, 4, 2), (1, 1): (6, 2, 4)}
        for (genus, boundary), expected in cases.items():
            f = identity_trisection(page_book(genus, boundary))
            self.assertEqual(parameters(f.trisection)[:3], expected)
            self.assertEqual(euler(f.trisection), 0)

    def test_disk_identity_is_collar(self):
        self.assertEqual(identity_trisection(OpenBook.trivial()).trisection, sphere_cross_interval())

    def test_multi_page_rejected(self):
        with self.assertRaises(GluingError):
            identity_trisection(OpenBook((page_book(0, 1).pages[0],) * 2))

    @given(single_page_open_books())
    def test_valid(self, ob):
        report = validate(identity_trisection(ob).trisection)
        self.assertTrue(report.is_valid)
        self.assertEqual(report.chi, 0)


class TestCompose(unittest.TestCase):
    """Test compose"""

    def test_ball_then_identity(self):
        self.assertEqual(compose(ball_morphism(), identity_trisection(OpenBook.trivial())), ball_morphism())

    def test_collar_identities_compose_exactly(self):
        identity = identity_trisection(OpenBook.trivial())
        self.assertEqual(compose(identity, identity), identity)

    def test_twisted_identities_stably_equal(self):
        identity = identity_trisection(page_book(1, 1, [((1, 0), 1)]))
        composite = compose(identity, identity)
        self.assertEqual(parameters(composite.trisection)[:3], (12, 2, 6))
        self.assertTrue(stably_equivalent(composite.trisection, identity.trisection))

    def test_arity_mismatch(self):
        with self.assertRaises(GluingError):
            compose(ball_morphism(), TriMorphism(sphere_cross_interval(), (), (0, 1)))

    def test_empty_interface(self):
        f = TriMorphism(sphere_cross_interval(), (0, 1), ())
        with self.assertRaises(GluingError):
            compose(f, TriMorphism(sphere_cross_interval(), (), (0, 1)))

    @suite("gluing")
    @given(two_ended_morphisms())
    def test_identity_laws(self, f):
        left = compose(identity_trisection(source_objects(f)[0]), f)
        right = compose(f, identity_trisection(target_objects(f)[0]))
        for composite in (left, right):
            self.assertTrue(stably_equivalent(composite.trisection, f.trisection))
            self.assertEqual(source_objects(composite), source_objects(f))
            self.assertEqual(target_objects(composite), target_objects(f))

    def test_associative_with_identities(self):
        f = ball_morphism()
        identity = identity_trisection(OpenBook.trivial())
        self.assertEqual(compose(compose(f, identity), identity), compose(f, compose(identity, identity)))

    @suite("gluing")
    @given(composable_triples())
    def test_associative(self, triple):
        f, g, h = triple
        left = compose(compose(f, g), h)
        self.assertEqual(left, compose(f, compose(g, h)))
        self.assertEqual(source_objects(left), source_objects(f))
        self.assertEqual(target_objects(left), target_objects(h))
        self.assertEqual(euler(left.trisection), sum(euler(m.trisection) for m in triple))


if __name__ == '__main__':
    unittest.main()
