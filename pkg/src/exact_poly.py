"""
Exact Polynomial Arithmetic

Dense polynomials with arbitrary-precision integer or rational coefficients,
exact characteristic polynomials of adjacency and Randić matrices, and the
closed formulas for cycles, regular graphs and Dutch windmills.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np

from .exceptions import InternalConsistencyError, InvalidParameterError, RegularityError
from .graph_core import Graph

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]

DEFAULT_VARIABLE = "λ"


class RatPolynomial:
    """
    Polynomial with rational coefficients, stored densely in ascending degree.

    Coefficients are Fractions, which keeps every value in lowest terms with
    a positive denominator. Trailing zeros are stripped, so the zero
    polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        values = [Fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "RatPolynomial":
        """coefficient · λ^degree."""
        return cls([0] * degree + [coefficient])

    @classmethod
    def variable(cls) -> "RatPolynomial":
        """The polynomial λ."""
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "RatPolynomial":
        """Monic polynomial prod (λ - r)."""
        result = cls([1])
        for root in roots:
            result = result * cls([-Fraction(root), 1])
        return result

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        """Coefficient of the highest power, 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        """Whether all coefficients vanish."""
        return not self.coeffs

    def is_monic(self) -> bool:
        """Whether the leading coefficient is 1."""
        return self.leading_coefficient == 1

    def is_integral(self) -> bool:
        """Whether every coefficient is an integer."""
        return all(c.denominator == 1 for c in self.coeffs)

    def coefficient(self, degree: int) -> Fraction:
        """Coefficient of λ^degree; 0 outside the stored range."""
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return Fraction(0)

    def _wrap(self, coeffs: Iterable[Scalar], other=None) -> "RatPolynomial":
        integral = isinstance(self, IntPolynomial) and (other is None or isinstance(other, IntPolynomial))
        result = RatPolynomial(coeffs)
        if integral:
            return IntPolynomial(result.coeffs)
        return result

    @staticmethod
    def _coerce(other) -> "RatPolynomial":
        if isinstance(other, RatPolynomial):
            return other
        if isinstance(other, (int, Rational)):
            return IntPolynomial([other]) if Fraction(other).denominator == 1 else RatPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return self._wrap((self.coefficient(i) + other.coefficient(i) for i in range(size)), other)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self._wrap([], other)
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return self._wrap(product, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise InvalidParameterError(f"Polynomial exponent must be a nonnegative integer, got {exponent!r}")
        result = self._wrap([1])
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        return self.evaluate(x)

    def evaluate(self, x):
        """
        Horner evaluation.

        Args:
            x: int or Fraction for an exact result, float for a float

        Returns:
            p(x)
        """
        result = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            result = result * x + (float(c) if isinstance(x, float) else c)
        return result

    def substitute_scaled(self, k: Scalar) -> "RatPolynomial":
        """Return p(k·λ)."""
        k = Fraction(k)
        return RatPolynomial(c * k ** i for i, c in enumerate(self.coeffs))

    def to_text(self, variable: str = DEFAULT_VARIABLE) -> str:
        """
        Render in descending powers, e.g. 'λ^3 - 3/4λ - 1/4'.

        Args:
            variable: Name of the indeterminate

        Returns:
            Human-readable polynomial
        """
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for degree in range(self.degree, -1, -1):
            c = self.coeffs[degree]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = variable if degree == 1 else f"{variable}^{degree}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts)

    def to_json(self) -> List[str]:
        """Ascending coefficient list as strings, e.g. ['-1/4', '-3/4', '0', '1']."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, values: Sequence[str]) -> "RatPolynomial":
        """Inverse of to_json."""
        return cls(Fraction(v) for v in values)

    def __repr__(self):
        return f"{type(self).__name__}({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


class IntPolynomial(RatPolynomial):
    """RatPolynomial whose coefficients are all integers."""

    __slots__ = ()

    def __init__(self, coeffs: Iterable[Union[Scalar, str]] = ()):
        super().__init__(coeffs)
        if not self.is_integral():
            raise InvalidParameterError(f"Non-integer coefficient in integer polynomial: {self.coeffs}")

    @property
    def int_coeffs(self) -> Tuple[int, ...]:
        """Coefficients as Python ints, ascending."""
        return tuple(int(c) for c in self.coeffs)


def poly_add(a: RatPolynomial, b: RatPolynomial) -> RatPolynomial:
    """Sum a + b."""
    return a + b


def poly_mul(a: RatPolynomial, b: RatPolynomial) -> RatPolynomial:
    """Product a · b."""
    return a * b


def poly_pow(a: RatPolynomial, exponent: int) -> RatPolynomial:
    """
    Power a^exponent by repeated squaring.

    Args:
        a: Base polynomial
        exponent: Nonnegative integer

    Returns:
        a raised to exponent
    """
    return a ** exponent


def poly_eval(a: RatPolynomial, x):
    """Value a(x); exact for int or Fraction x, float for float x."""
    return a.evaluate(x)


def _faddeev_leverrier(matrix: np.ndarray, integral: bool) -> List[Scalar]:
    """
    Coefficients of det(λI - M), ascending.

    Uses M_k = M·M_{k-1} + c_{n-k+1}·I and c_{n-k} = -tr(M·M_k)/k. For an
    integer matrix every division is exact; a remainder means corrupted input.
    """
    n = matrix.shape[0]
    coeffs: List[Scalar] = [0] * (n + 1)
    coeffs[n] = 1
    identity = np.zeros((n, n), dtype=object)
    for i in range(n):
        identity[i, i] = 1
    current = np.zeros((n, n), dtype=object)
    for k in range(1, n + 1):
        current = matrix.dot(current) + coeffs[n - k + 1] * identity
        product = matrix.dot(current)
        trace = sum(product[i, i] for i in range(n))
        if integral:
            quotient, remainder = divmod(trace, k)
            if remainder:
                raise InternalConsistencyError(f"Inexact Faddeev–LeVerrier division at step {k}")
            coeffs[n - k] = -quotient
        else:
            coeffs[n - k] = -Fraction(trace) / k
    return coeffs


def charpoly_adjacency(graph: Graph) -> IntPolynomial:
    """
    Exact characteristic polynomial P(G, λ) = det(λI - A(G)).

    Args:
        graph: Any simple graph; n = 0 gives the constant 1

    Returns:
        Monic integer polynomial of degree n
    """
    n = graph.n
    if n == 0:
        return IntPolynomial([1])
    matrix = graph.adjacency_matrix(dtype=object)
    poly = IntPolynomial(_faddeev_leverrier(matrix, integral=True))
    if poly.degree != n or not poly.is_monic():
        raise InternalConsistencyError(f"Characteristic polynomial has degree {poly.degree}, expected monic {n}")
    if poly.coefficient(n - 1) != 0:
        raise InternalConsistencyError("Trace identity violated: coefficient of λ^(n-1) is nonzero")
    if n >= 2 and poly.coefficient(n - 2) != -graph.edge_count:
        raise InternalConsistencyError(
            f"Edge identity violated: coefficient of λ^(n-2) is {poly.coefficient(n - 2)}, "
            f"expected {-graph.edge_count}"
        )
    return poly


def randic_charpoly(graph: Graph) -> RatPolynomial:
    """
    Exact Randić characteristic polynomial RP(G, λ) = det(λI - R(G)) for any graph.

    R(G) = D^{-1/2} A D^{-1/2} is similar to D^{-1}A, which has rational
    entries; isolated vertices contribute zero rows in both.

    Args:
        graph: Any simple graph

    Returns:
        Monic rational polynomial of degree n
    """
    n = graph.n
    if n == 0:
        return RatPolynomial([1])
    walk = np.zeros((n, n), dtype=object)
    for i, j in graph.edges:
        walk[i, j] = Fraction(1, graph.degrees[i])
        walk[j, i] = Fraction(1, graph.degrees[j])
    return RatPolynomial(_faddeev_leverrier(walk, integral=False))


@lru_cache(maxsize=None)
def lambda_recurrence(k: int) -> RatPolynomial:
    """
    Λ_k, the determinant of the k x k tridiagonal matrix with λ on the
    diagonal and -1/2 beside it.

    Λ_1 = λ, Λ_2 = λ² - 1/4 and Λ_k = λΛ_{k-1} - (1/4)Λ_{k-2}.

    Args:
        k: Index, at least 1

    Returns:
        Monic rational polynomial of degree k
    """
    if k < 1:
        raise InvalidParameterError(f"Λ_k needs k >= 1, got {k}")
    lam = RatPolynomial.variable()
    quarter = Fraction(1, 4)
    previous, current = RatPolynomial([1]), lam
    for _ in range(k - 1):
        previous, current = current, lam * current - quarter * previous
    return current


def randic_charpoly_cycle(m: int) -> RatPolynomial:
    """
    RP(C_m, λ) = λΛ_{m-1} - (1/2)Λ_{m-2} - (1/2)^{m-1}.

    Args:
        m: Cycle length, at least 3

    Returns:
        Monic rational polynomial of degree m
    """
    if m < 3:
        raise InvalidParameterError(f"Cycle length must be at least 3, got {m}")
    lam = RatPolynomial.variable()
    half = Fraction(1, 2)
    return lam * lambda_recurrence(m - 1) - half * lambda_recurrence(m - 2) - half ** (m - 1)


def randic_charpoly_regular(graph: Graph, k: int) -> RatPolynomial:
    """
    RP(G, λ) = k^{-n}·P(G, kλ) for a k-regular graph, since R(G) = A(G)/k.

    Args:
        graph: k-regular graph
        k: Common degree, at least 1

    Returns:
        Monic rational polynomial of degree n
    """
    if k < 1 or not graph.is_regular(k):
        raise RegularityError(f"Graph is not {k}-regular (degrees {sorted(set(graph.degrees))})")
    scaled = charpoly_adjacency(graph).substitute_scaled(k)
    return RatPolynomial(c / Fraction(k) ** graph.n for c in scaled.coeffs)


def randic_charpoly_windmill(m: int, n: int) -> RatPolynomial:
    """
    RP(D_m^n, λ) = Λ_{m-1}^{n-1} · RP(C_m, λ).

    Args:
        m: Cycle length, at least 3
        n: Number of cycles, at least 1

    Returns:
        Monic rational polynomial of degree (m-1)n + 1
    """
    if m < 3 or n < 1:
        raise InvalidParameterError(f"Dutch windmill needs m >= 3 and n >= 1, got m={m}, n={n}")
    return lambda_recurrence(m - 1) ** (n - 1) * randic_charpoly_cycle(m)

