"""
Test Runner Tests

Purpose: Area grouping and argument checks of tests/run_tests.py
"""

import unittest
import sys
import io
from contextlib import redirect_stderr
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent.parent
sys.path.insert(0, str(project_root))

from tests import run_tests


class TestRunner(unittest.TestCase):
    """Test run_tests helpers"""

    def test_area_of(self):
        self.assertEqual(run_tests.area_of(self), "cli")
        self.assertEqual(run_tests.area_of(unittest.FunctionTestCase(lambda: None)), "other")

    def test_discover_single_area(self):
        suite = run_tests.discover_tests(("core",))
        self.assertGreater(suite.countTestCases(), 0)

    def test_unknown_area(self):
        stderr = io.StringIO()
        with redirect_stderr(stderr):
            self.assertEqual(run_tests.main(["braids"]), 2)
        self.assertIn("braids", stderr.getvalue())


if __name__ == '__main__':
    unittest.main()
