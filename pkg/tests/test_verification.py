"""
Unit tests for the aggregate verification harness.
"""

import unittest
import sys
from pathlib import Path

# Add the repository root to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.census_catalog import build_catalog
from src.verification import (
    run_all,
    verify_census,
    verify_classes,
    verify_factorizations,
    verify_petersen,
    verify_windmill_identity,
)


class TestVerification(unittest.TestCase):
    """Test cases for the verify checks."""

    @classmethod
    def setUpClass(cls):
        """Build the catalog once for all tests."""
        cls.entries = build_catalog()

    def assertReportPassed(self, report):
        self.assertTrue(report.passed, report.render(only_failures=True))

    def test_census(self):
        """Test census sizes and the disconnected order-10 graphs."""
        report = verify_census()
        self.assertReportPassed(report)
        subjects = [r.subject for r in report.results]
        self.assertIn("G_20 union", subjects)
        self.assertIn("G_21 union", subjects)

    def test_classes(self):
        """Test classes, spectra differences and permanents."""
        report = verify_classes(entries=self.entries)
        self.assertReportPassed(report)
        spectra = [r.subject for r in report.results if r.check == "spectra"]
        self.assertEqual(set(spectra), {"G_1/G_8", "G_12/G_17", "G_16/G_20"})
        self.assertEqual(len(spectra), 3)

    def test_classes_fail_with_coarse_tolerance(self):
        """Test that a coarse tolerance merges classes and fails."""
        report = verify_classes(tol=0.5, entries=self.entries)
        self.assertFalse(report.passed)

    def test_windmill_identity(self):
        """Test the windmill factorization and closed-form root sums."""
        report = verify_windmill_identity()
        self.assertReportPassed(report)
        self.assertEqual(sum(1 for r in report.results if r.check == "root-sum"), 16)
        self.assertEqual(sum(1 for r in report.results if r.check == "cycle"), 28)

    def test_factorizations(self):
        """Test printed factorizations."""
        report = verify_factorizations(self.entries)
        self.assertReportPassed(report)
        self.assertGreaterEqual(report.count(), 1)

    def test_petersen(self):
        """Test the Petersen graph is identified with its catalog row."""
        report = verify_petersen(entries=self.entries)
        self.assertReportPassed(report)

    def test_run_all(self):
        """Test the combined report."""
        report = run_all()
        self.assertReportPassed(report)
        titles = {r.check for r in report.results}
        for check in ("table1", "table2", "closed-form", "census", "classes", "windmill", "petersen"):
            self.assertIn(check, titles)


if __name__ == '__main__':
    unittest.main()
