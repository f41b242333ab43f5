"""
Verification Harness

Aggregate checks behind `randic verify`: census counts, energy classes and
permanents, the windmill factorization, printed factorizations, the
Petersen graph, and everything at once.
"""

import logging
from typing import Optional, Sequence

from .census_catalog import (
    CATALOG_ORDER,
    KEY_ENERGY,
    KEY_RANDIC_ENERGY,
    build_catalog,
    catalog_by_name,
    enumerate_cubic,
    equivalence_classes,
    verify_tables,
)
from .config import get_settings
from .exact_poly import (
    charpoly_adjacency,
    randic_charpoly,
    randic_charpoly_cycle,
    randic_charpoly_regular,
    randic_charpoly_windmill,
)
from .families_density import WINDMILL4, WINDMILL5, FamilySpec, closed_form_re, verify_closed_forms
from .graph_core import (
    disjoint_union,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_dutch_windmill,
    make_petersen,
    make_prism,
)
from .published_tables import get_published_tables
from .reporting import VerificationReport
from .spectral import Spectrum, adjacency_spectrum, randic_energy, randic_spectrum, spectra_difference

logger = logging.getLogger(__name__)

EXPECTED_CENSUS = {4: 1, 6: 2, 8: 6, 10: 21}
EXPECTED_CLASS_SPECTRA_DIFFERENCE = 3
PETERSEN_SPECTRUM = (3.0,) + (1.0,) * 5 + (-2.0,) * 4
WINDMILL_CYCLE_LENGTHS = (3, 4, 5, 6)
WINDMILL_COPIES = (1, 2, 3)
CLOSED_FORM_WINDMILL_MAX_N = 8
CYCLE_FORMULA_MAX_M = 30


def verify_census() -> VerificationReport:
    """Census sizes for n = 4..10 and the two disconnected cubic graphs of order 10."""
    report = VerificationReport("census")
    for n, expected in EXPECTED_CENSUS.items():
        graphs = enumerate_cubic(n)
        report.check("census", f"n={n}", len(graphs) == expected, f"expected {expected}; found {len(graphs)}")
        if n != CATALOG_ORDER:
            continue
        polynomials = [charpoly_adjacency(g) for g in graphs]
        report.check("census", "distinct polynomials", len(set(polynomials)) == len(graphs))
        disconnected = [p for g, p in zip(graphs, polynomials) if not g.is_connected()]
        report.check("census", "disconnected", len(disconnected) == 2, f"found {len(disconnected)}")
        tables = get_published_tables()
        components = {"G_20": make_prism(), "G_21": make_complete_bipartite(3, 3)}
        for name, other in components.items():
            product = charpoly_adjacency(make_complete(4)) * charpoly_adjacency(other)
            union = disjoint_union([make_complete(4), other])
            ok = product in disconnected and product == tables.expected_polynomial(name)
            ok = ok and charpoly_adjacency(union) == product
            report.check("census", f"{name} union", ok, "charpoly is the product of its components")
    return report


def verify_classes(tol: Optional[float] = None, entries: Optional[Sequence] = None) -> VerificationReport:
    """
    Energy classes, spectra differences and permanents within classes.

    Args:
        tol: Equivalence tolerance. Defaults to RANDIC_MATCH_TOL.
        entries: Catalog. Defaults to build_catalog().

    Returns:
        VerificationReport
    """
    tol = get_settings().match_tol if tol is None else tol
    entries = list(entries if entries is not None else build_catalog())
    catalog = catalog_by_name(entries)
    tables = get_published_tables()
    expected = sorted(tables.energy_classes)
    report = VerificationReport("classes")
    for key in (KEY_ENERGY, KEY_RANDIC_ENERGY):
        classes = equivalence_classes(entries, key, tol)
        found = sorted(classes.non_singletons())
        report.check("classes", key, found == expected, f"non-singleton classes {found}")
        paired = sum(len(c) for c in expected)
        report.check("classes", f"{key} singletons", len(classes) - len(found) == len(entries) - paired)

    for members in tables.energy_classes:
        first, second = (catalog[name] for name in members)
        difference = spectra_difference(Spectrum(first.spectrum), Spectrum(second.spectrum))
        ok = difference == EXPECTED_CLASS_SPECTRA_DIFFERENCE
        report.check("spectra", "/".join(members), ok, f"{difference} eigenvalues differ")

    connected = [e for e in entries if e.connected]
    for key in (KEY_ENERGY, KEY_RANDIC_ENERGY):
        violations = [
            (a.name, b.name)
            for i, a in enumerate(connected)
            for b in connected[i + 1:]
            if abs(a.key(key) - b.key(key)) <= tol and a.permanent != b.permanent
        ]
        report.check("permanent", f"equal {key} => equal permanent", not violations, f"violations {violations}")

    g7, g11 = catalog["G_7"], catalog["G_11"]
    ok = g7.permanent == g11.permanent == tables.permanents["G_7"] and abs(g7.energy - g11.energy) > 0.1
    report.check("permanent", "G_7/G_11", ok, "equal permanent without equal energy")
    return report


def verify_windmill_identity(tol: float = 1e-8) -> VerificationReport:
    """
    Windmill and cycle Randić polynomials against direct computation.

    Every numeric Randić eigenvalue of D_m^n must be a root of the windmill
    formula, the formula must equal the general exact routine, and the
    absolute root sums must equal the closed-form energies.

    Args:
        tol: Bound on |RP(ρ)| and on root-sum differences

    Returns:
        VerificationReport
    """
    report = VerificationReport("windmill")
    for m in WINDMILL_CYCLE_LENGTHS:
        for n in WINDMILL_COPIES:
            graph = make_dutch_windmill(m, n)
            polynomial = randic_charpoly_windmill(m, n)
            spectrum = randic_spectrum(graph)
            worst = max(abs(polynomial.evaluate(rho)) for rho in spectrum.values)
            subject = f"D_{m}^{n}"
            ok = polynomial.degree == graph.n == (m - 1) * n + 1 and worst <= tol
            report.check("windmill", subject, ok, f"degree {polynomial.degree}; max |RP(ρ)| {worst:.2e}")
            report.check("windmill", f"{subject} exact", polynomial == randic_charpoly(graph))

    for family, m in ((WINDMILL4, 4), (WINDMILL5, 5)):
        for n in range(1, CLOSED_FORM_WINDMILL_MAX_N + 1):
            root_sum = randic_spectrum(make_dutch_windmill(m, n)).absolute_sum()
            exact = closed_form_re(FamilySpec(family, (n,)))
            report.check("root-sum", f"D_{m}^{n}", abs(root_sum - exact.value) <= tol, f"{root_sum:.12f} vs {exact}")

    for m in range(3, CYCLE_FORMULA_MAX_M + 1):
        same = randic_charpoly_cycle(m) == randic_charpoly_regular(make_cycle(m), 2)
        report.check("cycle", f"C_{m}", same, "cycle formula equals regular scaling")
    return report


def verify_factorizations(entries: Optional[Sequence] = None) -> VerificationReport:
    """Multiply out each printed factorization and compare it with the catalog polynomial."""
    catalog = catalog_by_name(entries)
    tables = get_published_tables()
    report = VerificationReport("factorizations")
    for name in tables.factorizations:
        product = tables.factored_polynomial(name)
        ok = product == catalog[name].charpoly == tables.expected_polynomial(name)
        report.check("factorization", name, ok, str(product))
    return report


def verify_petersen(tol: float = 1e-9, entries: Optional[Sequence] = None) -> VerificationReport:
    """
    The Petersen graph against the catalog.

    Checks its spectrum and energies, that exactly one catalog entry has
    its energy and spectrum, that this entry is the published match, that
    the Petersen graph is not alone in its energy class, and that no
    catalog entry has larger energy.

    Args:
        tol: Energy tolerance
        entries: Catalog. Defaults to build_catalog().

    Returns:
        VerificationReport
    """
    entries = list(entries if entries is not None else build_catalog())
    tables = get_published_tables()
    petersen = make_petersen()
    report = VerificationReport("petersen")

    spectrum = adjacency_spectrum(petersen)
    spectrum_ok = all(abs(a - b) <= 1e-10 for a, b in zip(spectrum.values, PETERSEN_SPECTRUM))
    report.check("petersen", "spectrum", spectrum_ok, "(3, 1^5, -2^4)")
    energy_value = spectrum.absolute_sum()
    report.check("petersen", "energy", abs(energy_value - 16) <= tol, f"{energy_value:.12f}")
    re_value = randic_energy(petersen, allow_shortcut=False)
    report.check("petersen", "randic energy", abs(re_value - 16 / 3) <= tol, f"{re_value:.12f}")

    matches = [
        e.name
        for e in entries
        if abs(e.energy - 16) <= tol and all(abs(a - b) <= 1e-8 for a, b in zip(e.spectrum, PETERSEN_SPECTRUM))
    ]
    report.check("petersen", "identified", matches == [tables.petersen_match], f"matches {matches}")
    same_polynomial = [e.name for e in entries if e.charpoly == charpoly_adjacency(petersen)]
    report.check("petersen", "charpoly", same_polynomial == [tables.petersen_match], f"matches {same_polynomial}")

    classes = equivalence_classes(entries, KEY_ENERGY, get_settings().match_tol)
    report.check("petersen", "not energy-unique", not classes.is_unique(tables.petersen_match))
    top = max(e.energy for e in entries)
    report.check("petersen", "maximum energy", energy_value >= top - tol, f"largest catalog energy {top:.12f}")
    return report


def run_all(tol: Optional[float] = None) -> VerificationReport:
    """
    Every check in one report.

    Args:
        tol: Tolerance for printed table values. Defaults to RANDIC_TABLE_TOL.

    Returns:
        Merged VerificationReport
    """
    entries = build_catalog()
    report = VerificationReport("all")
    for part in (
        verify_tables(tol, entries),
        verify_closed_forms(),
        verify_census(),
        verify_classes(entries=entries),
        verify_windmill_identity(),
        verify_factorizations(entries),
        verify_petersen(entries=entries),
    ):
        logger.info("%s: passed=%s", part.title, part.passed)
        report = report.merge(part)
    return report
