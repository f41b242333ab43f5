"""
Unit tests for closed-form family energies and the density probe.
"""

import math
import time
import unittest
import sys
from fractions import Fraction
from pathlib import Path

import sympy

# Add the repository root to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.exceptions import InvalidParameterError
from src.families_density import (
    FRIENDSHIP,
    KMN_MINUS_EDGE,
    WINDMILL4,
    WINDMILL5,
    FamilySpec,
    QuadraticSurd,
    Witness,
    closed_form_re,
    density_probe,
    square_free_decomposition,
    verify_closed_forms,
)
from src.spectral import randic_energy


class TestFamilySpec(unittest.TestCase):
    """Test cases for family members."""

    def test_parse(self):
        """Test parsing with aliases."""
        spec = FamilySpec.parse("kmn-e:3,4")
        self.assertEqual(spec.family, KMN_MINUS_EDGE)
        self.assertEqual(spec.params, (3, 4))
        self.assertEqual(str(spec), "complete-bipartite-minus-edge:3,4")
        self.assertEqual(FamilySpec.parse("windmill4:3"), FamilySpec(WINDMILL4, (3,)))

    def test_invalid_specs(self):
        """Test family and parameter validation."""
        for text in ("wheel:3", "windmill4:0", "kmn-e:1,3", "kmn-e:3", "friendship:2,2", "windmill5:x"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidParameterError):
                    FamilySpec.parse(text)

    def test_build_graph(self):
        """Test the graphs behind each family."""
        self.assertEqual(FamilySpec(FRIENDSHIP, (3,)).build_graph().n, 7)
        self.assertEqual(FamilySpec(WINDMILL4, (2,)).build_graph().n, 7)
        self.assertEqual(FamilySpec(WINDMILL5, (2,)).build_graph().n, 9)
        self.assertEqual(FamilySpec(KMN_MINUS_EDGE, (3, 4)).build_graph().edge_count, 11)


class TestQuadraticSurd(unittest.TestCase):
    """Test cases for exact a + b√c values."""

    def test_square_free_decomposition(self):
        """Test s²·c factorizations."""
        self.assertEqual(square_free_decomposition(72), (6, 2))
        self.assertEqual(square_free_decomposition(1), (1, 1))
        self.assertEqual(square_free_decomposition(30), (1, 30))
        with self.assertRaises(InvalidParameterError):
            square_free_decomposition(0)

    def test_normalization(self):
        """Test perfect squares fold into the rational part."""
        self.assertEqual(QuadraticSurd(Fraction(2), Fraction(1, 2), 4), QuadraticSurd(Fraction(3)))
        self.assertEqual(QuadraticSurd(Fraction(2), Fraction(1, 4), 8), QuadraticSurd(Fraction(2), Fraction(1, 2), 2))
        self.assertEqual(QuadraticSurd(Fraction(1), Fraction(0), 7).c, 1)

    def test_to_text(self):
        """Test rendering."""
        self.assertEqual(QuadraticSurd(Fraction(2), Fraction(2), 2).to_text(), "2+2√2")
        self.assertEqual(QuadraticSurd(Fraction(2), Fraction(1, 2), 2).to_text(), "2+1/2√2")
        self.assertEqual(QuadraticSurd(Fraction(5)).to_text(), "5")
        self.assertEqual(QuadraticSurd(Fraction(1), Fraction(-1), 2).to_text(), "1-√2")
        self.assertEqual(QuadraticSurd(Fraction(0), Fraction(2), 3).to_text(), "2√3")

    def test_value_and_expression(self):
        """Test float value and sympy expression agree."""
        surd = QuadraticSurd(Fraction(1), Fraction(3), 5)
        self.assertAlmostEqual(surd.value, 1 + 3 * math.sqrt(5), places=14)
        self.assertEqual(sympy.simplify(surd.as_expr() - (1 + 3 * sympy.sqrt(5))), 0)


class TestClosedForms(unittest.TestCase):
    """Test cases for closed-form Randić energies."""

    def test_examples(self):
        """Test one member of each family."""
        self.assertEqual(closed_form_re(FamilySpec.parse("friendship:3")).to_text(), "4")
        self.assertEqual(closed_form_re(FamilySpec.parse("windmill4:3")).to_text(), "2+2√2")
        self.assertEqual(closed_form_re(FamilySpec.parse("windmill5:2")).to_text(), "1+2√5")
        self.assertEqual(closed_form_re(FamilySpec.parse("kmn-e:2,2")).to_text(), "3")
        self.assertEqual(closed_form_re(FamilySpec.parse("kmn-e:2,4")).to_text(), "2+1/2√2")
        self.assertEqual(closed_form_re(FamilySpec.parse("kmn-e:3,3")).to_text(), "8/3")

    def test_against_numeric(self):
        """Test closed forms against the Randić spectrum for a few members."""
        for text in ("friendship:5", "windmill4:4", "windmill5:3", "kmn-e:3,5", "kmn-e:4,6"):
            spec = FamilySpec.parse(text)
            numeric = randic_energy(spec.build_graph(), allow_shortcut=False)
            self.assertAlmostEqual(numeric, closed_form_re(spec).value, delta=1e-9, msg=text)

    def test_bipartite_family_decreases(self):
        """Test RE(K_{m,n} - e) strictly decreases in mn and stays above 2."""
        values = [closed_form_re(FamilySpec(KMN_MINUS_EDGE, (2, p // 2))).value for p in range(4, 401, 2)]
        self.assertTrue(all(a > b for a, b in zip(values, values[1:])))
        self.assertTrue(all(v > 2 for v in values))

    def test_verify_closed_forms(self):
        """Test the full closed-form report."""
        report = verify_closed_forms(max_n=8, tol=1e-8)
        self.assertTrue(report.passed, report.render(only_failures=True))
        self.assertEqual(report.count(), 3 * 8 + 7 * 7 + 2)
        boundary = [r.subject for r in report.results if r.check == "boundary"]
        self.assertEqual(boundary, ["D_4^1 = C_4", "D_5^1 = C_5"])

    def test_verify_closed_forms_invalid(self):
        """Test max_n validation."""
        with self.assertRaises(InvalidParameterError):
            verify_closed_forms(max_n=0)


class TestDensityProbe(unittest.TestCase):
    """Test cases for the density probe."""

    def test_bipartite_witnesses(self):
        """Test [2.5, 2.7] is hit only by K_{m,n} - e with 9 <= mn <= 16."""
        witnesses = density_probe(2.5, 2.7)
        self.assertTrue(all(w.spec.family == KMN_MINUS_EDGE for w in witnesses))
        self.assertEqual(
            {w.spec.params for w in witnesses}, {(3, 3), (2, 5), (2, 6), (2, 7), (3, 5), (2, 8)}
        )
        self.assertEqual(witnesses[0].spec.params, (2, 8))
        self.assertEqual(witnesses[0].re_float, 2.5)
        self.assertTrue(all(2.5 <= w.re_float <= 2.7 for w in witnesses))

    def test_cap_limits_factor_pairs(self):
        """Test that products are realized with both parts at most cap."""
        witnesses = density_probe(2.5, 2.7, cap=5)
        self.assertEqual({w.spec.params for w in witnesses}, {(3, 3), (2, 5), (3, 4), (3, 5), (4, 4)})

    def test_all_families(self):
        """Test witnesses from every family, sorted by Randić energy."""
        witnesses = density_probe(2.9, 4.1)
        self.assertEqual(
            [str(w.spec) for w in witnesses],
            [
                "friendship:2",
                "complete-bipartite-minus-edge:2,2",
                "windmill5:1",
                "windmill4:2",
                "friendship:3",
            ],
        )

    def test_interval_near_cap_is_fast(self):
        """Test an interval just above 2 + 2/cap with cap 10⁴."""
        started = time.monotonic()
        witnesses = density_probe(2.0, 2.0002003, cap=10_000, limit=1_000)
        self.assertLess(time.monotonic() - started, 10.0)
        bipartite = [w.spec.params for w in witnesses if w.spec.family == KMN_MINUS_EDGE]
        self.assertIn((10_000, 10_000), bipartite)
        for m, n in bipartite:
            self.assertTrue(2 <= m <= n <= 10_000)
            self.assertGreaterEqual(m * n, 99_700_698)
        products = [m * n for m, n in bipartite]
        self.assertEqual(len(products), len(set(products)))
        self.assertEqual(
            {str(w.spec) for w in witnesses if w.spec.family != KMN_MINUS_EDGE}, {"friendship:1", "windmill4:1"}
        )

    def test_interval_below_smallest_family_value(self):
        """Test an interval under 2 + 2/cap returns quickly and empty."""
        self.assertEqual(density_probe(2.00001, 2.0001, cap=10_000), [])

    def test_empty_result(self):
        """Test an interval no family reaches."""
        self.assertEqual(density_probe(4.95, 4.99, cap=50), [])

    def test_limit_per_family(self):
        """Test the per-family witness limit."""
        witnesses = density_probe(2.01, 2.34, limit=3)
        self.assertEqual(len(witnesses), 3)

    def test_every_short_interval_has_a_witness(self):
        """Test intervals of width 0.01 inside [2.01, 2.34]."""
        for i in range(33):
            lo = 2.01 + 0.01 * i
            hi = lo + 0.01
            witnesses = density_probe(lo, hi, limit=1)
            bipartite = [w for w in witnesses if w.spec.family == KMN_MINUS_EDGE]
            self.assertTrue(bipartite, f"no witness in [{lo}, {hi}]")
            m, n = bipartite[0].spec.params
            self.assertLessEqual(m * n, 40_000)

    def test_witness_json(self):
        """Test the witness record."""
        witness = Witness(FamilySpec.parse("kmn-e:2,4"), closed_form_re(FamilySpec.parse("kmn-e:2,4")))
        self.assertEqual(
            witness.to_json(),
            {
                "family": KMN_MINUS_EDGE,
                "params": [2, 4],
                "re_exact": "2+1/2√2",
                "re_float": 2 + math.sqrt(2) / 2,
            },
        )

    def test_invalid_intervals(self):
        """Test interval validation."""
        for lo, hi in ((1.9, 2.5), (2.5, 2.5), (2.6, 2.5), (float("nan"), 3.0), (2.1, float("inf"))):
            with self.subTest(lo=lo, hi=hi):
                with self.assertRaises(InvalidParameterError):
                    density_probe(lo, hi)
        with self.assertRaises(InvalidParameterError):
            density_probe(2.1, 2.2, cap=1)
        with self.assertRaises(InvalidParameterError):
            density_probe(2.1, 2.2, limit=0)


if __name__ == '__main__':
    unittest.main()
