"""
Unit tests for the exact polynomial module.

Tests rational polynomial arithmetic, exact characteristic polynomials and
the cycle, regular and windmill Randić polynomial formulas.
"""

import inspect
import unittest
import sys
from fractions import Fraction
from pathlib import Path

# Add the repository root to path for testing
sys.path.insert(0, str(Path(__file__).parent.parent))

from src import exact_poly, graph_core
from src.exceptions import InvalidParameterError, RegularityError
from src.exact_poly import (
    IntPolynomial,
    RatPolynomial,
    charpoly_adjacency,
    lambda_recurrence,
    poly_add,
    poly_eval,
    poly_mul,
    poly_pow,
    randic_charpoly,
    randic_charpoly_cycle,
    randic_charpoly_regular,
    randic_charpoly_windmill,
)
from src.graph_core import (
    Graph,
    disjoint_union,
    make_complete,
    make_complete_bipartite_minus_edge,
    make_cycle,
    make_dutch_windmill,
    make_empty,
    make_petersen,
    make_prism,
    make_random_graph,
)

PETERSEN_TEXT = "λ^10 - 15λ^8 + 75λ^6 - 24λ^5 - 165λ^4 + 120λ^3 + 120λ^2 - 160λ + 48"


class TestRatPolynomial(unittest.TestCase):
    """Test cases for polynomial arithmetic."""

    def setUp(self):
        """Set up test fixtures."""
        self.x = RatPolynomial.variable()

    def test_trailing_zeros_stripped(self):
        """Test canonical storage."""
        p = RatPolynomial([1, 2, 0, 0])
        self.assertEqual(p.degree, 1)
        self.assertEqual(RatPolynomial([0, 0]).degree, -1)
        self.assertTrue(RatPolynomial([]).is_zero())

    def test_fractions_normalized(self):
        """Test rationals are kept in lowest terms."""
        p = RatPolynomial([Fraction(2, 4), "3/6"])
        self.assertEqual(p.coeffs, (Fraction(1, 2), Fraction(1, 2)))

    def test_ring_operations(self):
        """Test addition, subtraction, multiplication and powers."""
        p = self.x + 1
        q = self.x - 1
        self.assertEqual(p * q, RatPolynomial([-1, 0, 1]))
        self.assertEqual(poly_mul(p, q), p * q)
        self.assertEqual(poly_add(p, q), 2 * self.x)
        self.assertEqual(p - p, RatPolynomial())
        self.assertEqual(1 - self.x, RatPolynomial([1, -1]))
        self.assertEqual(poly_pow(p, 3), RatPolynomial([1, 3, 3, 1]))
        self.assertEqual(p ** 0, RatPolynomial([1]))

    def test_negative_exponent(self):
        """Test that negative exponents are rejected."""
        with self.assertRaises(InvalidParameterError):
            self.x ** -1

    def test_integer_closure(self):
        """Test that integer polynomials stay integral under ring operations."""
        p = IntPolynomial([1, 1])
        self.assertIsInstance(p * p, IntPolynomial)
        self.assertIsInstance(p + 3, IntPolynomial)
        self.assertNotIsInstance(p * Fraction(1, 2), IntPolynomial)

    def test_int_polynomial_rejects_fractions(self):
        """Test integrality validation."""
        with self.assertRaises(InvalidParameterError):
            IntPolynomial([Fraction(1, 2)])

    def test_evaluate(self):
        """Test exact and floating evaluation."""
        p = RatPolynomial([-2, 0, 1])
        self.assertEqual(p(3), 7)
        self.assertEqual(poly_eval(p, Fraction(1, 2)), Fraction(-7, 4))
        self.assertAlmostEqual(p(2 ** 0.5), 0.0, places=12)

    def test_from_roots(self):
        """Test building from roots."""
        p = RatPolynomial.from_roots([1, -1, 0])
        self.assertEqual(p, RatPolynomial([0, -1, 0, 1]))

    def test_to_text(self):
        """Test rendering in descending powers."""
        self.assertEqual(RatPolynomial([Fraction(-1, 4), Fraction(-3, 4), 0, 1]).to_text(), "λ^3 - 3/4λ - 1/4")
        self.assertEqual(RatPolynomial([0, -1]).to_text(), "-λ")
        self.assertEqual(RatPolynomial().to_text(), "0")
        self.assertEqual(RatPolynomial([5]).to_text("x"), "5")

    def test_json_round_trip(self):
        """Test ascending string coefficients."""
        p = RatPolynomial([Fraction(-1, 4), 0, 1])
        self.assertEqual(p.to_json(), ["-1/4", "0", "1"])
        self.assertEqual(RatPolynomial.from_json(p.to_json()), p)

    def test_substitute_scaled(self):
        """Test p(kλ)."""
        p = RatPolynomial([1, 1, 1])
        self.assertEqual(p.substitute_scaled(2), RatPolynomial([1, 2, 4]))

    def test_hash_consistent_with_equality(self):
        """Test polynomials work as dictionary keys."""
        a = IntPolynomial([1, 2])
        b = RatPolynomial([1, 2])
        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))


class TestCharacteristicPolynomial(unittest.TestCase):
    """Test cases for exact adjacency characteristic polynomials."""

    def test_petersen(self):
        """Test the Petersen characteristic polynomial."""
        p = charpoly_adjacency(make_petersen())
        self.assertEqual(p.to_text(), PETERSEN_TEXT)
        expected = RatPolynomial.from_roots([3] + [1] * 5 + [-2] * 4)
        self.assertEqual(p, expected)

    def test_small_graphs(self):
        """Test K_2, C_4 and the empty graph."""
        self.assertEqual(charpoly_adjacency(make_complete(2)), IntPolynomial([-1, 0, 1]))
        self.assertEqual(charpoly_adjacency(make_cycle(4)), RatPolynomial.from_roots([2, 0, 0, -2]))
        self.assertEqual(charpoly_adjacency(make_empty(3)), RatPolynomial.monomial(3))
        self.assertEqual(charpoly_adjacency(make_empty(0)), IntPolynomial([1]))

    def test_coefficient_identities(self):
        """Test monic degree n, integer coefficients, zero λ^(n-1) and -|E| for λ^(n-2) on random graphs."""
        for seed in range(200):
            n = 2 + seed % 11
            g = make_random_graph(n, (seed % 7 + 2) / 10, seed=seed)
            p = charpoly_adjacency(g)
            with self.subTest(seed=seed, n=n):
                self.assertEqual(p.degree, g.n)
                self.assertTrue(p.is_monic())
                self.assertTrue(p.is_integral())
                self.assertEqual(p.coefficient(g.n - 1), 0)
                self.assertEqual(p.coefficient(g.n - 2), -g.edge_count)

    def test_union_is_multiplicative(self):
        """Test P(G1 ∪ G2) = P(G1)·P(G2)."""
        for seed in range(50):
            a = make_random_graph(1 + seed % 6, 0.5, seed=seed)
            b = make_random_graph(2 + seed % 5, 0.6, seed=100 + seed)
            with self.subTest(seed=seed):
                self.assertEqual(
                    charpoly_adjacency(disjoint_union([a, b])), charpoly_adjacency(a) * charpoly_adjacency(b)
                )

    def test_relabel_invariance(self):
        """Test the polynomial does not depend on labeling."""
        g = make_dutch_windmill(4, 2)
        self.assertEqual(charpoly_adjacency(g.relabel([3, 1, 4, 0, 6, 5, 2])), charpoly_adjacency(g))


class TestRandicPolynomials(unittest.TestCase):
    """Test cases for Randić characteristic polynomials."""

    def test_lambda_recurrence(self):
        """Test the first terms of Λ_k."""
        self.assertEqual(lambda_recurrence(1), RatPolynomial([0, 1]))
        self.assertEqual(lambda_recurrence(2), RatPolynomial([Fraction(-1, 4), 0, 1]))
        self.assertEqual(lambda_recurrence(3), RatPolynomial([0, Fraction(-1, 2), 0, 1]))
        with self.assertRaises(InvalidParameterError):
            lambda_recurrence(0)

    def test_cycle_examples(self):
        """Test RP(C_3) and RP(C_4)."""
        self.assertEqual(randic_charpoly_cycle(3).to_text(), "λ^3 - 3/4λ - 1/4")
        self.assertEqual(randic_charpoly_cycle(4).to_text(), "λ^4 - λ^2")

    def test_cycle_formula_matches_regular_scaling(self):
        """Test the cycle formula against k^-n P(C_m, kλ) for 3 <= m <= 30."""
        for m in range(3, 31):
            with self.subTest(m=m):
                self.assertEqual(randic_charpoly_cycle(m), randic_charpoly_regular(make_cycle(m), 2))

    def test_cycle_formula_matches_general_routine(self):
        """Test the cycle formula against the exact Randić polynomial."""
        for m in range(3, 11):
            self.assertEqual(randic_charpoly_cycle(m), randic_charpoly(make_cycle(m)))

    def test_regular_scaling_matches_general_routine(self):
        """Test the regular shortcut on cubic graphs."""
        for g in (make_complete(4), make_prism(), make_petersen()):
            self.assertEqual(randic_charpoly_regular(g, 3), randic_charpoly(g))

    def test_regular_scaling_rejects_irregular(self):
        """Test the regularity precondition."""
        with self.assertRaises(RegularityError):
            randic_charpoly_regular(make_dutch_windmill(3, 2), 2)
        with self.assertRaises(ValueError):
            randic_charpoly_regular(make_cycle(5), 3)

    def test_windmill_formula(self):
        """Test Λ_{m-1}^{n-1}·RP(C_m) against the general routine."""
        for m in (3, 4, 5, 6):
            for n in (1, 2, 3):
                with self.subTest(m=m, n=n):
                    formula = randic_charpoly_windmill(m, n)
                    self.assertEqual(formula.degree, (m - 1) * n + 1)
                    self.assertEqual(formula, randic_charpoly(make_dutch_windmill(m, n)))

    def test_windmill_single_copy_is_cycle(self):
        """Test RP(D_m^1) = RP(C_m)."""
        self.assertEqual(randic_charpoly_windmill(7, 1), randic_charpoly_cycle(7))

    def test_windmill_invalid(self):
        """Test windmill parameter validation."""
        with self.assertRaises(InvalidParameterError):
            randic_charpoly_windmill(2, 2)

    def test_isolated_vertices(self):
        """Test that isolated vertices contribute a factor λ."""
        g = disjoint_union([make_complete(2), make_empty(2)])
        self.assertEqual(randic_charpoly(g), RatPolynomial([0, 0, -1, 0, 1]))

    def test_randic_polynomial_of_path(self):
        """Test RP(P_4) with P_4 = K_{2,2} - e."""
        g = make_complete_bipartite_minus_edge(2, 2)
        p = randic_charpoly(g)
        self.assertEqual(p, RatPolynomial([Fraction(1, 4), 0, Fraction(-5, 4), 0, 1]))
        self.assertEqual(p(1), 0)
        self.assertEqual(p(Fraction(1, 2)), 0)

    def test_randic_polynomial_monic(self):
        """Test the general routine on random graphs."""
        for seed in range(5):
            g = make_random_graph(8, 0.5, seed=seed)
            p = randic_charpoly(g)
            self.assertEqual(p.degree, 8)
            self.assertTrue(p.is_monic())
            self.assertEqual(p.coefficient(7), 0)

    def test_graph_without_vertices(self):
        """Test the n = 0 convention."""
        self.assertEqual(randic_charpoly(Graph(0, frozenset())), RatPolynomial([1]))


class TestDocumentation(unittest.TestCase):
    """Test cases for docstrings on the public graph and polynomial API."""

    @staticmethod
    def public_callables(module, classes):
        for name, obj in vars(module).items():
            if inspect.isfunction(obj) and obj.__module__ == module.__name__ and not name.startswith("_"):
                yield name, obj
        for cls in classes:
            for name, obj in vars(cls).items():
                if name.startswith("_"):
                    continue
                func = getattr(obj, "__func__", None) or getattr(obj, "fget", None) or getattr(obj, "func", obj)
                if callable(func):
                    yield f"{cls.__name__}.{name}", func

    def test_public_api_is_documented(self):
        """Test every public function and method carries a docstring."""
        members = list(self.public_callables(graph_core, [graph_core.Graph]))
        members += self.public_callables(exact_poly, [exact_poly.RatPolynomial, exact_poly.IntPolynomial])
        self.assertGreater(len(members), 30)
        for name, func in members:
            with self.subTest(name=name):
                self.assertTrue((func.__doc__ or "").strip())


if __name__ == '__main__':
    unittest.main()
