"""
Lefschetz Fibration Tests

Purpose: Induced open books, 1-2 pair stabilization, wrinkling, H1 of the total space
"""

import unittest
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from hypothesis import given, strategies as st

from core import InvalidFibrationError, StabilizationError, Surface
from lefschetz import (
    LefschetzFibration,
    VanishingCycle,
    WrinkledRecord,
    fourmanifold_h1,
    induced_open_book,
    stabilize_lefschetz,
    wrinkle,
    wrinkle_step,
)
from openbook import StabilizationVariant, hopf_stabilize
from tests.strategies import lefschetz_fibrations, signs, suite
from tests.test_utils import fibration, hclass, page_book

SAME = StabilizationVariant.SAME_BINDING
DIFFERENT = StabilizationVariant.DIFFERENT_BINDINGS


class TestLefschetzFibration(unittest.TestCase):
    """Test LefschetzFibration structure"""

    def test_closed_fiber_rejected(self):
        with self.assertRaises(InvalidFibrationError):
            LefschetzFibration(Surface(1, 0))

    def test_cycle_length_checked(self):
        with self.assertRaises(InvalidFibrationError):
            fibration(1, 1, [((1,), 1)])

    def test_chirality_checked(self):
        with self.assertRaises(StabilizationError):
            VanishingCycle(hclass((1, 0)), 2)

    def test_count(self):
        self.assertEqual(fibration(1, 1, [((1, 0), 1), ((0, 1), -1)]).n, 2)


class TestInducedOpenBook(unittest.TestCase):
    """Test induced_open_book"""

    def test_word_follows_cycles(self):
        L = fibration(1, 1, [((1, 0), 1), ((0, 1), -1)])
        self.assertEqual(induced_open_book(L), page_book(1, 1, [((1, 0), 1), ((0, 1), -1)]))

    def test_no_cycles(self):
        self.assertEqual(induced_open_book(fibration(0, 1)), page_book(0, 1))


class TestStabilizeLefschetz(unittest.TestCase):
    """Test stabilize_lefschetz"""

    def test_disk(self):
        result = stabilize_lefschetz(fibration(0, 1), SAME, 1)
        self.assertEqual(result, fibration(0, 2, [((1,), 1)]))

    def test_annulus_different_bindings(self):
        result = stabilize_lefschetz(fibration(0, 2, [((1,), 1)]), DIFFERENT, -1)
        self.assertEqual(result.fiber, Surface(1, 1))
        self.assertEqual(result.cycles, (VanishingCycle(hclass((0, 1)), 1), VanishingCycle(hclass((1, 0)), -1)))

    def test_disk_different_bindings_rejected(self):
        with self.assertRaises(StabilizationError):
            stabilize_lefschetz(fibration(0, 1), DIFFERENT, 1)

    @suite("lefschetz")
    @given(lefschetz_fibrations(), st.data(), signs)
    def test_commutes_with_hopf_stabilization(self, L, data, sign):
        variants = [SAME, DIFFERENT] if L.fiber.boundary >= 2 else [SAME]
        variant = data.draw(st.sampled_from(variants))
        self.assertEqual(
            induced_open_book(stabilize_lefschetz(L, variant, sign)),
            hopf_stabilize(induced_open_book(L), 0, variant, sign),
        )


class TestWrinkle(unittest.TestCase):
    """Test wrinkling bookkeeping"""

    def test_every_cycle_becomes_a_cuspoid(self):
        record = wrinkle(fibration(1, 1, [((1, 0), 1), ((0, 1), 1)]))
        self.assertTrue(record.is_wrinkled())
        self.assertEqual(record.cuspoids, 2)
        self.assertEqual(record.central_genus, 3)
        self.assertEqual(record.fiber, Surface(1, 1))

    def test_no_cycles(self):
        record = wrinkle(fibration(0, 2))
        self.assertEqual((record.cuspoids, record.central_genus), (0, 0))

    def test_single_step(self):
        L = fibration(0, 2, [((1,), 1), ((1,), -1)])
        record = wrinkle_step(WrinkledRecord.from_fibration(L))
        self.assertEqual(record.lefschetz_remaining, (L.cycles[1],))
        self.assertEqual(record.central_genus, 1)

    def test_step_on_wrinkled_record(self):
        with self.assertRaises(InvalidFibrationError):
            wrinkle_step(WrinkledRecord(Surface(0, 1), ()))

    def test_central_genus_checked(self):
        with self.assertRaises(InvalidFibrationError):
            WrinkledRecord(Surface(1, 1), (), cuspoids=1, central_genus=1)

    def test_central_genus_defaults_to_count(self):
        self.assertEqual(WrinkledRecord(Surface(1, 1), (), cuspoids=2).central_genus, 3)
        self.assertEqual(WrinkledRecord(Surface(1, 1), (), cuspoids=2, central_genus=None).central_genus, 3)

    @given(lefschetz_fibrations())
    def test_counts(self, L):
        record = wrinkle(L)
        self.assertEqual(record.cuspoids, L.n)
        self.assertEqual(record.central_genus, L.fiber.genus + L.n)


class TestFourManifoldH1(unittest.TestCase):
    """Test fourmanifold_h1"""

    def test_no_cycles(self):
        group = fourmanifold_h1(fibration(1, 1))
        self.assertEqual(group.free_rank, 2)
        self.assertEqual(group.torsion, ())

    def test_core_kills_annulus(self):
        self.assertTrue(fourmanifold_h1(fibration(0, 2, [((1,), 1)])).is_trivial())

    def test_torsion(self):
        self.assertEqual(fourmanifold_h1(fibration(1, 1, [((2, 0), 1)])).invariants(), [2, 0])

    def test_basis_cycles(self):
        group = fourmanifold_h1(fibration(1, 2, [((1, 0, 0), 1), ((0, 1, 0), 1)]))
        self.assertEqual(group.invariants(), [0])


if __name__ == '__main__':
    unittest.main()
