"""
Handle Conversion Tests

Purpose: Trisections from handle counts and from Lefschetz fibrations
"""

import unittest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from hypothesis import given, strategies as st

from core import InvalidFibrationError, InvalidTrisectionError, surface_euler
from lefschetz import (
    handle_euler,
    induced_open_book,
    lf_to_trisection,
    stabilize_lefschetz,
    trisection_from_open_book_handles,
)
from openbook import StabilizationVariant
from trisection import ball_trisection, euler, relative_stabilize, sphere_cross_interval, validate
from tests.strategies import lefschetz_fibrations, signs, suite
from tests.test_utils import fibration, page_book, parameters

SAME = StabilizationVariant.SAME_BINDING
DIFFERENT = StabilizationVariant.DIFFERENT_BINDINGS


class TestHandleCalculator(unittest.TestCase):
    """Test trisection_from_open_book_handles and handle_euler"""

    def test_handle_euler(self):
        self.assertEqual(handle_euler([(0, 1)], 0, 0), 1)
        self.assertEqual(handle_euler([(0, 1), (0, 1)], 1, 0), 0)
        self.assertEqual(handle_euler([(1, 1)], 0, 2), 1)

    def test_ball(self):
        self.assertEqual(trisection_from_open_book_handles([(0, 1)], 0, 0), ball_trisection())

    def test_collar(self):
        result = trisection_from_open_book_handles([(0, 1), (0, 1)], 1, 0)
        self.assertEqual(result, sphere_cross_interval())

    def test_one_handle(self):
        result = trisection_from_open_book_handles([(0, 1)], 1, 0)
        self.assertEqual(parameters(result), (1, 1, 1, ((0, 1),)))
        self.assertEqual(euler(result), -1)

    def test_extra_crossings(self):
        tight = trisection_from_open_book_handles([(0, 2)], 0, 1)
        loose = trisection_from_open_book_handles([(0, 2)], 0, 1, c=3)
        self.assertEqual(parameters(tight), (1, 2, 1, ((0, 2),)))
        self.assertEqual(parameters(loose), (7, 2, 3, ((0, 2),)))
        self.assertEqual(euler(tight), euler(loose))

    def test_rejections(self):
        cases = [
            ([], 0, 0, None),
            ([(0, 1), (0, 1)], 0, 0, None),
            ([(0, 1)], 0, 2, 1),
            ([(0, 1)], -1, 0, None),
        ]
        for pages, h1, h2, c in cases:
            with self.assertRaises(InvalidTrisectionError):
                trisection_from_open_book_handles(pages, h1, h2, c)

    @given(
        st.lists(st.tuples(st.integers(0, 2), st.integers(1, 3)), min_size=1, max_size=3),
        st.integers(0, 3),
        st.integers(0, 3),
        st.integers(0, 3),
    )
    def test_valid_and_counted(self, pages, extra_ones, h2, extra_crossings):
        h1 = len(pages) - 1 + extra_ones
        result = trisection_from_open_book_handles(pages, h1, h2, h2 + extra_crossings)
        report = validate(result)
        self.assertTrue(report.is_valid)
        self.assertEqual(report.chi, handle_euler(pages, h1, h2))


class TestLfToTrisection(unittest.TestCase):
    """Test lf_to_trisection"""

    def test_disk(self):
        self.assertEqual(lf_to_trisection(fibration(0, 1)), ball_trisection())

    def test_annulus_core(self):
        L = fibration(0, 2, [((1,), 1)])
        result = lf_to_trisection(L)
        self.assertEqual(parameters(result), (1, 2, 1, ((0, 2),)))
        self.assertEqual(result.boundary[0], page_book(0, 2, [((1,), 1)]))
        self.assertEqual(euler(result), 1)

    def test_torus_fiber(self):
        result = lf_to_trisection(fibration(1, 1, [((1, 0), 1), ((0, 1), 1)]))
        self.assertEqual(parameters(result), (3, 1, 2, ((1, 1),)))
        self.assertEqual(euler(result), 1)

    def test_crossings(self):
        result = lf_to_trisection(fibration(0, 2, [((1,), 1)]), crossings=3)
        self.assertEqual(parameters(result), (7, 2, 3, ((0, 2),)))

    def test_null_homologous_cycle(self):
        with self.assertRaises(InvalidFibrationError):
            lf_to_trisection(fibration(1, 1, [((0, 0), 1)]))

    def test_too_few_crossings(self):
        with self.assertRaises(InvalidTrisectionError):
            lf_to_trisection(fibration(0, 2, [((1,), 1), ((1,), 1)]), crossings=1)

    @suite("lefschetz")
    @given(lefschetz_fibrations())
    def test_agrees_with_handle_count(self, L):
        result = lf_to_trisection(L)
        skeleton = trisection_from_open_book_handles([(L.fiber.genus, L.fiber.boundary)], 0, L.n)
        self.assertEqual(parameters(result), parameters(skeleton))
        self.assertEqual(euler(result), surface_euler(L.fiber) + L.n)
        self.assertEqual(result.boundary, (induced_open_book(L),))

    @suite("lefschetz")
    @given(lefschetz_fibrations(), st.data(), signs)
    def test_commutes_with_stabilization(self, L, data, sign):
        variants = [SAME, DIFFERENT] if L.fiber.boundary >= 2 else [SAME]
        variant = data.draw(st.sampled_from(variants))
        self.assertEqual(
            lf_to_trisection(stabilize_lefschetz(L, variant, sign)),
            relative_stabilize(lf_to_trisection(L), 0, variant, sign),
        )


if __name__ == '__main__':
    unittest.main()
