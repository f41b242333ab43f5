"""
Closed-form Randić energies of graph families and a density probe.

The families are the friendship graphs F_n, the Dutch windmills D_4^n and
D_5^n, and complete bipartite graphs with one edge removed. Their Randić
energies have the exact shape a + b*sqrt(c), which the probe uses to look
for family members with Randić energy inside a given interval.
"""

import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import sympy

from .config import get_settings
from .exceptions import InvalidParameterError
from .graph_core import (
    Graph,
    make_complete_bipartite_minus_edge,
    make_cycle,
    make_dutch_windmill,
    make_friendship,
)
from .reporting import VerificationReport
from .spectral import randic_energy

logger = logging.getLogger(__name__)

FRIENDSHIP = "friendship"
WINDMILL4 = "windmill4"
WINDMILL5 = "windmill5"
KMN_MINUS_EDGE = "complete-bipartite-minus-edge"

FAMILIES = (FRIENDSHIP, WINDMILL4, WINDMILL5, KMN_MINUS_EDGE)
FAMILY_ALIASES = {
    FRIENDSHIP: FRIENDSHIP,
    WINDMILL4: WINDMILL4,
    WINDMILL5: WINDMILL5,
    KMN_MINUS_EDGE: KMN_MINUS_EDGE,
    "kmn-e": KMN_MINUS_EDGE,
}

RE_LOWER_BOUND = 2


@dataclass(frozen=True)
class FamilySpec:
    """
    A member of one of the closed-form families.

    Attributes:
        family: friendship, windmill4, windmill5 or complete-bipartite-minus-edge
        params: (n,) for the first three, (m, n) for the bipartite family
    """

    family: str
    params: Tuple[int, ...]

    def __post_init__(self):
        family = FAMILY_ALIASES.get(self.family)
        if family is None:
            raise InvalidParameterError(f"Unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        params = tuple(int(p) for p in self.params)
        if family == KMN_MINUS_EDGE:
            if len(params) != 2 or min(params) < 2:
                raise InvalidParameterError(f"{family} needs (m, n) with m, n >= 2, got {params}")
        elif len(params) != 1 or params[0] < 1:
            raise InvalidParameterError(f"{family} needs (n,) with n >= 1, got {params}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "params", params)

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse 'windmill4:3' or 'kmn-e:3,4'."""
        family, _, raw = text.strip().partition(":")
        try:
            params = tuple(int(p) for p in raw.split(",") if p.strip())
        except ValueError as e:
            raise InvalidParameterError(f"Family parameters must be integers, got {raw!r}") from e
        return cls(family.strip(), params)

    def build_graph(self) -> Graph:
        """Graph of this family member."""
        if self.family == FRIENDSHIP:
            return make_friendship(self.params[0])
        if self.family == WINDMILL4:
            return make_dutch_windmill(4, self.params[0])
        if self.family == WINDMILL5:
            return make_dutch_windmill(5, self.params[0])
        return make_complete_bipartite_minus_edge(*self.params)

    def __str__(self):
        return f"{self.family}:{','.join(str(p) for p in self.params)}"


def square_free_decomposition(value: int) -> Tuple[int, int]:
    """
    Write value = s^2 * c with c square-free.

    Args:
        value: Positive integer

    Returns:
        (s, c)
    """
    if value < 1:
        raise InvalidParameterError(f"Radicand must be positive, got {value}")
    outside, inside = 1, 1
    for prime, exponent in sympy.factorint(value).items():
        outside *= prime ** (exponent // 2)
        if exponent % 2:
            inside *= prime
    return outside, inside


@dataclass(frozen=True)
class QuadraticSurd:
    """
    Exact value a + b*sqrt(c) with rational a, b and square-free c >= 1.

    Normalized so that c == 1 only when b == 0.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    c: int = 1

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        outside, inside = square_free_decomposition(int(self.c))
        b *= outside
        if inside == 1 or b == 0:
            a, b, inside = a + b, Fraction(0), 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", inside)

    @property
    def value(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.c)

    def as_expr(self) -> sympy.Expr:
        return sympy.Rational(self.a.numerator, self.a.denominator) + sympy.Rational(
            self.b.numerator, self.b.denominator
        ) * sympy.sqrt(self.c)

    def to_text(self) -> str:
        """Render as 'a+b√c', e.g. '2+2√2', '1/2√2' or '5'."""
        if self.b == 0:
            return str(self.a)
        magnitude = abs(self.b)
        surd = f"√{self.c}" if magnitude == 1 else f"{magnitude}√{self.c}"
        if self.a == 0:
            return surd if self.b > 0 else f"-{surd}"
        return f"{self.a}{'+' if self.b > 0 else '-'}{surd}"

    def __str__(self):
        return self.to_text()


def closed_form_re(spec: FamilySpec) -> QuadraticSurd:
    """
    Exact Randić energy of a family member.

    RE(F_n) = n + 1, RE(D_4^n) = 2 + (n - 1)√2, RE(D_5^n) = 1 + n√5 and
    RE(K_{m,n} - e) = 2 + 2/√(mn).

    Args:
        spec: Family member

    Returns:
        QuadraticSurd
    """
    if spec.family == FRIENDSHIP:
        return QuadraticSurd(Fraction(spec.params[0] + 1))
    if spec.family == WINDMILL4:
        return QuadraticSurd(Fraction(2), Fraction(spec.params[0] - 1), 2)
    if spec.family == WINDMILL5:
        return QuadraticSurd(Fraction(1), Fraction(spec.params[0]), 5)
    m, n = spec.params
    product = m * n
    return QuadraticSurd(Fraction(2), Fraction(2, product), product)


def verify_closed_forms(max_n: int = 8, tol: float = 1e-8) -> VerificationReport:
    """
    Compare closed forms with numerically computed Randić energies.

    Covers n = 1..max_n for the one-parameter families, 2 <= m, n <= max_n
    for the bipartite family, and the small cases that coincide with cycles.

    Args:
        max_n: Largest family parameter
        tol: Allowed absolute difference

    Returns:
        VerificationReport
    """
    if max_n < 1:
        raise InvalidParameterError(f"max_n must be at least 1, got {max_n}")
    report = VerificationReport("closed-forms")
    specs = [FamilySpec(family, (n,)) for family in (FRIENDSHIP, WINDMILL4, WINDMILL5) for n in range(1, max_n + 1)]
    specs += [FamilySpec(KMN_MINUS_EDGE, (m, n)) for m in range(2, max_n + 1) for n in range(2, max_n + 1)]
    for spec in specs:
        exact = closed_form_re(spec)
        numeric = randic_energy(spec.build_graph(), allow_shortcut=False)
        detail = f"{exact} = {exact.value:.12f}; numeric {numeric:.12f}"
        report.check("closed-form", str(spec), abs(numeric - exact.value) <= tol, detail)

    boundary = (
        ("D_4^1 = C_4", FamilySpec(WINDMILL4, (1,)), make_cycle(4), QuadraticSurd(Fraction(2))),
        ("D_5^1 = C_5", FamilySpec(WINDMILL5, (1,)), make_cycle(5), QuadraticSurd(Fraction(1), Fraction(1), 5)),
    )
    for label, spec, cycle, expected in boundary:
        windmill_value = randic_energy(spec.build_graph(), allow_shortcut=False)
        cycle_value = randic_energy(cycle, allow_shortcut=False)
        ok = abs(windmill_value - expected.value) <= tol and abs(cycle_value - expected.value) <= tol
        report.check("boundary", label, ok and closed_form_re(spec) == expected, f"expected {expected}")
    logger.info("Closed-form check: %d lines, passed=%s", len(report.results), report.passed)
    return report


@dataclass(frozen=True)
class Witness:
    """A family member whose Randić energy lies in the probed interval."""

    spec: FamilySpec
    re: QuadraticSurd

    @property
    def re_float(self) -> float:
        return self.re.value

    def to_json(self) -> Dict[str, object]:
        return {
            "family": self.spec.family,
            "params": list(self.spec.params),
            "re_exact": self.re.to_text(),
            "re_float": self.re_float,
        }


def _inside(value: float, lo: float, hi: float) -> bool:
    return lo <= value <= hi


def _probe_friendship(lo: float, hi: float, cap: int) -> Iterator[FamilySpec]:
    start = max(1, math.ceil(lo - 1) - 1)
    for n in range(start, cap + 1):
        value = n + 1
        if value > hi:
            return
        if value >= lo:
            yield FamilySpec(FRIENDSHIP, (n,))


def _probe_increasing(family: str, lo: float, hi: float, cap: int, first_guess: float) -> Iterator[FamilySpec]:
    for n in range(max(1, math.floor(first_guess) - 1), cap + 1):
        spec = FamilySpec(family, (n,))
        value = closed_form_re(spec).value
        if value > hi:
            return
        if value >= lo:
            yield spec


def _probe_bipartite(lo: float, hi: float, cap: int) -> Iterator[FamilySpec]:
    if hi - 2 < 2 / cap:
        return
    # RE = 2 + 2/sqrt(p) with p = mn decreases in p. Pairs (p, m, n) leave the
    # heap in increasing p, and for equal p the smallest m comes first.
    smallest = 4 if hi - 2 >= 1 else max(4, math.floor(4 / (hi - 2) ** 2) - 1)
    largest = cap * cap if lo <= 2 else min(cap * cap, math.ceil(4 / (lo - 2) ** 2) + 1)
    heap: List[Tuple[int, int, int]] = []
    for m in range(2, cap + 1):
        n = max(m, -(-smallest // m))
        if n <= cap and m * n <= largest:
            heap.append((m * n, m, n))
    heapq.heapify(heap)
    previous = None
    while heap:
        product, m, n = heapq.heappop(heap)
        if n < cap and m * (n + 1) <= largest:
            heapq.heappush(heap, (m * (n + 1), m, n + 1))
        if product == previous:
            continue
        previous = product
        value = 2 + 2 / math.sqrt(product)
        if value > hi:
            continue
        if value < lo:
            return
        yield FamilySpec(KMN_MINUS_EDGE, (m, n))


def density_probe(lo: float, hi: float, cap: Optional[int] = None, limit: Optional[int] = None) -> List[Witness]:
    """
    Family members with Randić energy in [lo, hi].

    Each family is scanned from its smallest parameters and contributes at
    most `limit` witnesses; the bipartite family contributes one witness per
    product mn. Finding none is a valid outcome.

    Args:
        lo: Lower end, at least 2
        hi: Upper end, greater than lo
        cap: Largest parameter value. Defaults to RANDIC_PROBE_CAP.
        limit: Witnesses per family. Defaults to RANDIC_PROBE_LIMIT.

    Returns:
        Witnesses sorted by Randić energy
    """
    settings = get_settings()
    cap = settings.probe_cap if cap is None else cap
    limit = settings.probe_limit if limit is None else limit
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidParameterError(f"Probe interval must be finite, got [{lo}, {hi}]")
    if not lo >= RE_LOWER_BOUND:
        raise InvalidParameterError(f"Randić energy of a graph with an edge is at least 2; got lo={lo}")
    if not hi > lo:
        raise InvalidParameterError(f"Probe interval needs lo < hi, got [{lo}, {hi}]")
    if cap < 2 or limit < 1:
        raise InvalidParameterError(f"Probe needs cap >= 2 and limit >= 1, got cap={cap}, limit={limit}")

    scanners: Dict[str, Callable[[], Iterator[FamilySpec]]] = {
        FRIENDSHIP: lambda: _probe_friendship(lo, hi, cap),
        WINDMILL4: lambda: _probe_increasing(WINDMILL4, lo, hi, cap, (lo - 2) / math.sqrt(2) + 1),
        WINDMILL5: lambda: _probe_increasing(WINDMILL5, lo, hi, cap, (lo - 1) / math.sqrt(5)),
        KMN_MINUS_EDGE: lambda: _probe_bipartite(lo, hi, cap),
    }
    witnesses: List[Witness] = []
    for family in FAMILIES:
        found = 0
        for spec in scanners[family]():
            witnesses.append(Witness(spec, closed_form_re(spec)))
            found += 1
            if found >= limit:
                break
        logger.debug("Probe [%s, %s]: %d %s witnesses", lo, hi, found, family)
    order = {family: i for i, family in enumerate(FAMILIES)}
    witnesses.sort(key=lambda w: (w.re_float, order[w.spec.family], w.spec.params))
    logger.info("Probe [%s, %s]: %d witnesses", lo, hi, len(witnesses))
    return witnesses
