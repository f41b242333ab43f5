"""
Cubic Graph Census and Catalog

Enumerates cubic graphs of small even order up to cospectrality, names the
21 cubic graphs of order 10 by matching their exact characteristic
polynomials against the published table, groups them into energy classes
and checks the published tables against recomputed values.
"""

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd

from .config import get_settings
from .exceptions import CatalogMismatchError, InternalConsistencyError, InvalidParameterError
from .exact_poly import IntPolynomial, charpoly_adjacency
from .graph_core import Graph, graph6_encode
from .permanent import permanent_of_graph
from .published_tables import CATALOG_FILENAME, get_published_tables
from .reporting import STATUS_ERRATUM, CheckResult, VerificationReport
from .spectral import adjacency_spectrum, randic_energy
from .utils.export_helpers import ExportHelper
from .utils.graph_parsers import read_graph6_file, write_graph6_file

logger = logging.getLogger(__name__)

CUBIC_DEGREE = 3
CATALOG_ORDER = 10
MIN_ORDER = 4
MAX_ORDER = 10

KEY_ENERGY = "energy"
KEY_RANDIC_ENERGY = "randic_energy"
KEY_ALIASES = {"energy": KEY_ENERGY, "randic_energy": KEY_RANDIC_ENERGY, "randic": KEY_RANDIC_ENERGY}

PathLike = Union[str, Path]


def natural_key(name: str) -> Tuple:
    """Sort key placing G_2 before G_10."""
    return tuple(int(part) if part.isdigit() else part for part in re.split(r"(\d+)", name))


class _CubicSearch:
    """
    Backtracking over labeled cubic graphs.

    Vertices are completed in increasing order; each vertex takes its
    missing neighbors from higher labels with spare degree. Among vertices
    still of degree 0 only the lowest-labeled one is tried at each choice,
    since all of them are interchangeable.
    """

    def __init__(self, n: int):
        self.n = n
        self.adjacency = np.zeros((n, n), dtype=bool)
        self.degrees = [0] * n
        self.leaves = 0
        self.representatives: Dict[Tuple[int, ...], Graph] = {}

    def run(self) -> List[Graph]:
        self._complete_vertex(0)
        return list(self.representatives.values())

    def _complete_vertex(self, v: int):
        if v == self.n:
            self._record_leaf()
            return
        self._choose_neighbors(v, v + 1, CUBIC_DEGREE - self.degrees[v])

    def _choose_neighbors(self, v: int, start: int, need: int):
        if need == 0:
            self._complete_vertex(v + 1)
            return
        used_untouched = False
        for u in range(start, self.n):
            if self.degrees[u] >= CUBIC_DEGREE or self.adjacency[v, u]:
                continue
            if self.degrees[u] == 0:
                if used_untouched:
                    continue
                used_untouched = True
            self._toggle(v, u, True)
            self._choose_neighbors(v, u + 1, need - 1)
            self._toggle(v, u, False)

    def _toggle(self, v: int, u: int, present: bool):
        self.adjacency[v, u] = self.adjacency[u, v] = present
        step = 1 if present else -1
        self.degrees[v] += step
        self.degrees[u] += step

    def _record_leaf(self):
        self.leaves += 1
        graph = Graph.from_adjacency(self.adjacency.astype(np.int64))
        key = charpoly_adjacency(graph).int_coeffs
        if key not in self.representatives:
            self.representatives[key] = graph


def enumerate_cubic(n: int) -> List[Graph]:
    """
    Cubic graphs on n vertices, one per characteristic polynomial.

    Args:
        n: Even order with 4 <= n <= 10

    Returns:
        Representatives in the order the search first reaches them
    """
    if not isinstance(n, int) or n % 2 or not MIN_ORDER <= n <= MAX_ORDER:
        raise InvalidParameterError(f"Cubic census needs an even order in [{MIN_ORDER}, {MAX_ORDER}], got {n!r}")
    search = _CubicSearch(n)
    representatives = search.run()
    logger.info(
        "Cubic census n=%d: %d labeled leaves, %d cospectral classes", n, search.leaves, len(representatives)
    )
    return representatives


@dataclass(frozen=True)
class CatalogEntry:
    """
    One named cubic graph of order 10 with its invariants.

    Attributes:
        name: G_1..G_21
        graph: Representative graph
        graph6: graph6 encoding of the representative
        charpoly: Exact characteristic polynomial
        energy: E(G)
        randic_energy: RE(G), computed from the Randić spectrum
        permanent: per(A(G))
        connected: Whether the graph is connected
        spectrum: Adjacency eigenvalues, non-increasing
    """

    name: str
    graph: Graph
    graph6: str
    charpoly: IntPolynomial
    energy: float
    randic_energy: float
    permanent: int
    connected: bool
    spectrum: Tuple[float, ...]

    def key(self, key: str) -> float:
        """Value of an equivalence key, energy or randic_energy."""
        return getattr(self, KEY_ALIASES[key])

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "graph6": self.graph6,
            "n": self.graph.n,
            "edges": self.graph.edge_count,
            "connected": self.connected,
            "energy": self.energy,
            "randic_energy": self.randic_energy,
            "permanent": self.permanent,
            "charpoly": self.charpoly.to_text(),
        }


def catalog_entry(name: str, graph: Graph) -> CatalogEntry:
    """
    Compute every invariant of a cubic graph.

    Args:
        name: Entry name
        graph: Cubic graph

    Returns:
        CatalogEntry
    """
    if not graph.is_regular(CUBIC_DEGREE):
        raise InvalidParameterError(f"{name} is not cubic")
    spectrum = adjacency_spectrum(graph)
    energy_value = spectrum.absolute_sum()
    randic_value = randic_energy(graph, allow_shortcut=False)
    if abs(randic_value - energy_value / CUBIC_DEGREE) > 1e-9:
        raise InternalConsistencyError(
            f"{name}: RE = {randic_value} differs from E/3 = {energy_value / CUBIC_DEGREE} for a cubic graph"
        )
    return CatalogEntry(
        name=name,
        graph=graph,
        graph6=graph6_encode(graph),
        charpoly=charpoly_adjacency(graph),
        energy=energy_value,
        randic_energy=randic_value,
        permanent=permanent_of_graph(graph),
        connected=graph.is_connected(),
        spectrum=spectrum.values,
    )


@lru_cache(maxsize=1)
def build_catalog() -> Tuple[CatalogEntry, ...]:
    """
    Name the cubic graphs of order 10 by their published characteristic polynomials.

    A row whose printed polynomial matches no enumerated graph is matched
    through its recorded correction, with a warning.

    Returns:
        Entries G_1..G_21 in table order
    """
    tables = get_published_tables()
    by_polynomial = {charpoly_adjacency(g): g for g in enumerate_cubic(CATALOG_ORDER)}
    entries = []
    used = set()
    for name in tables.names:
        printed = tables.polynomials[name]
        if printed in by_polynomial:
            polynomial = printed
        elif name in tables.polynomial_errata and tables.polynomial_errata[name] in by_polynomial:
            polynomial = tables.polynomial_errata[name]
            logger.warning("%s: printed polynomial matches no cubic graph; using the recorded correction", name)
        else:
            raise CatalogMismatchError(f"{name}: no enumerated cubic graph has polynomial {printed}")
        if polynomial in used:
            raise CatalogMismatchError(f"{name}: polynomial already assigned to another row")
        used.add(polynomial)
        entries.append(catalog_entry(name, by_polynomial[polynomial]))
    unmatched = len(by_polynomial) - len(used)
    if unmatched:
        raise CatalogMismatchError(f"{unmatched} enumerated cubic graph(s) match no table row")
    logger.info("Built catalog of %d entries", len(entries))
    return tuple(entries)


def catalog_by_name(entries: Optional[Sequence[CatalogEntry]] = None) -> Dict[str, CatalogEntry]:
    """Entries keyed by name; builds the catalog when entries is None."""
    return {e.name: e for e in (entries if entries is not None else build_catalog())}


def catalog_graph(name: str) -> Graph:
    """Graph of a catalog entry, read from the stored graph6 catalog when present."""
    tables = get_published_tables()
    if name not in tables.names:
        raise InvalidParameterError(f"Unknown catalog entry {name!r}; expected one of G_1..G_21")
    path = get_settings().data_dir / CATALOG_FILENAME
    if path.is_file():
        graphs = load_catalog_graphs(path)
        if len(graphs) == len(tables.names):
            return graphs[tables.names.index(name)]
    return catalog_by_name()[name].graph


@dataclass(frozen=True)
class EquivalenceClasses:
    """
    Partition of catalog names by a shared invariant value.

    Attributes:
        classes: Classes in name order, each sorted by name
        key: Invariant used, 'energy' or 'randic_energy'
        tol: Linking tolerance
    """

    classes: Tuple[Tuple[str, ...], ...]
    key: str
    tol: float

    def __len__(self):
        return len(self.classes)

    def non_singletons(self) -> List[Tuple[str, ...]]:
        """Classes with at least two members."""
        return [c for c in self.classes if len(c) > 1]

    def class_of(self, name: str) -> Tuple[str, ...]:
        """The class containing name."""
        for members in self.classes:
            if name in members:
                return members
        raise InvalidParameterError(f"{name!r} is not in the partition")

    def is_unique(self, name: str) -> bool:
        """Whether name is alone in its class."""
        return len(self.class_of(name)) == 1


def equivalence_classes(
    entries: Sequence[CatalogEntry], key: str = KEY_ENERGY, tol: Optional[float] = None
) -> EquivalenceClasses:
    """
    Single-linkage grouping of entries whose key values differ by at most tol.

    Args:
        entries: Catalog entries
        key: 'energy', 'randic_energy' or 'randic'
        tol: Linking tolerance. Defaults to RANDIC_MATCH_TOL.

    Returns:
        EquivalenceClasses
    """
    if key not in KEY_ALIASES:
        raise InvalidParameterError(f"Unknown equivalence key {key!r}; expected energy or randic_energy")
    tol = get_settings().match_tol if tol is None else tol
    if tol <= 0:
        raise InvalidParameterError(f"Tolerance must be positive, got {tol}")
    ordered = sorted(entries, key=lambda e: (e.key(key), natural_key(e.name)))
    groups: List[List[str]] = []
    previous = None
    for entry in ordered:
        value = entry.key(key)
        if previous is not None and value - previous <= tol:
            groups[-1].append(entry.name)
        else:
            groups.append([entry.name])
        previous = value
    classes = sorted((tuple(sorted(g, key=natural_key)) for g in groups), key=lambda c: natural_key(c[0]))
    return EquivalenceClasses(tuple(classes), KEY_ALIASES[key], tol)


def verify_tables(
    tol: Optional[float] = None, entries: Optional[Sequence[CatalogEntry]] = None
) -> VerificationReport:
    """
    Compare the published tables with recomputed values.

    Checks exact polynomials, printed energies within tol, printed
    permanents, and the explicitly printed adjacency matrices.

    Args:
        tol: Tolerance for printed energies. Defaults to RANDIC_TABLE_TOL.
        entries: Catalog to check. Defaults to build_catalog().

    Returns:
        VerificationReport
    """
    tol = get_settings().table_tol if tol is None else tol
    tables = get_published_tables()
    catalog = catalog_by_name(entries)
    report = VerificationReport("tables")

    for name in tables.names:
        entry = catalog[name]
        printed = tables.polynomials[name]
        if printed == entry.charpoly:
            report.check("table1", name, True, "exact match")
        elif tables.polynomial_errata.get(name) == entry.charpoly:
            report.add(CheckResult("table1", name, STATUS_ERRATUM, f"printed {printed}; actual {entry.charpoly}"))
        else:
            report.check("table1", name, False, f"printed {printed}; actual {entry.charpoly}")

    for name in tables.names:
        entry = catalog[name]
        printed = tables.printed_energies(name)
        corrected = tables.expected_energies(name)
        actual = (entry.energy, entry.randic_energy)
        for label, p, c, a in zip(("E", "RE"), printed, corrected, actual):
            detail = f"printed {p:.4f}; actual {a:.6f}"
            if abs(p - a) <= tol:
                report.check("table2", f"{name} {label}", True, detail)
            elif name in tables.energy_errata and abs(c - a) <= tol:
                report.add(CheckResult("table2", f"{name} {label}", STATUS_ERRATUM, f"{detail}; corrected {c:.4f}"))
            else:
                report.check("table2", f"{name} {label}", False, detail)

    for name, printed in tables.permanents.items():
        actual = catalog[name].permanent
        report.check("permanent", name, actual == printed, f"printed {printed}; actual {actual}")

    for name in tables.matrices:
        graph = tables.matrix_graph(name)
        target = tables.petersen_match if name == "P" else name
        polynomial = charpoly_adjacency(graph)
        expected = tables.expected_polynomial(target)
        report.check("matrix", f"A({name})", polynomial == expected, f"charpoly matches row {target}")
        if target in tables.permanents:
            value = permanent_of_graph(graph)
            printed = tables.permanents[target]
            report.check("matrix", f"per A({name})", value == printed, f"printed {printed}; actual {value}")
    return report


def save_catalog(entries: Iterable[CatalogEntry], path: PathLike) -> int:
    """Write one graph6 line per entry, in the given order."""
    return write_graph6_file((e.graph for e in entries), path)


def load_catalog_graphs(path: PathLike) -> List[Graph]:
    """Graphs of a stored catalog, in file order."""
    return read_graph6_file(path)


def catalog_frame(entries: Sequence[CatalogEntry]) -> pd.DataFrame:
    """Catalog as a DataFrame, one row per entry."""
    return pd.DataFrame([e.to_dict() for e in entries])


def export_catalog(entries: Sequence[CatalogEntry], path: PathLike, fmt: str = "csv") -> int:
    """
    Export the catalog table.

    Args:
        entries: Catalog entries
        path: Output file
        fmt: 'csv', 'json' or 'txt'

    Returns:
        Number of rows written
    """
    return ExportHelper().export_data(catalog_frame(entries), fmt, path)
