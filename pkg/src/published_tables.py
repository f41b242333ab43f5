"""
Published reference values for the cubic graphs of order 10.

Loads characteristic polynomials, printed energies, permanents, explicit
adjacency matrices and known corrections from data/published_tables.json.
"""

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .config import get_settings
from .exceptions import InvalidParameterError
from .exact_poly import IntPolynomial, RatPolynomial
from .graph_core import Graph

logger = logging.getLogger(__name__)

TABLES_FILENAME = "published_tables.json"
CATALOG_FILENAME = "cubic10.g6"


@dataclass(frozen=True)
class PublishedTables:
    """
    Printed reference data, kept verbatim.

    Attributes:
        names: Entry names in table order
        polynomials: Printed characteristic polynomial per name
        energies: Printed (energy, Randić energy) strings per name
        permanents: Printed permanents for the entries that have one
        energy_classes: Printed non-singleton energy classes
        factorizations: Per name, list of (factor, multiplicity)
        matrices: Printed adjacency matrices, keyed by entry name
        petersen_match: Name of the entry identified with the Petersen graph
        polynomial_errata: Corrected polynomials for misprinted rows
        energy_errata: Corrected (energy, Randić energy) strings for misprinted rows
    """

    names: Tuple[str, ...]
    polynomials: Dict[str, IntPolynomial]
    energies: Dict[str, Tuple[str, str]]
    permanents: Dict[str, int]
    energy_classes: Tuple[Tuple[str, ...], ...]
    factorizations: Dict[str, List[Tuple[IntPolynomial, int]]]
    matrices: Dict[str, Tuple[Tuple[int, ...], ...]]
    petersen_match: str
    polynomial_errata: Dict[str, IntPolynomial]
    energy_errata: Dict[str, Tuple[str, str]]

    def expected_polynomial(self, name: str) -> IntPolynomial:
        """Characteristic polynomial of an entry, with any correction applied."""
        self._check_name(name)
        return self.polynomial_errata.get(name, self.polynomials[name])

    def expected_energies(self, name: str) -> Tuple[float, float]:
        """(E, RE) of an entry as floats, with any correction applied."""
        self._check_name(name)
        energy, randic = self.energy_errata.get(name, self.energies[name])
        return float(energy), float(randic)

    def printed_energies(self, name: str) -> Tuple[float, float]:
        """(E, RE) exactly as printed, before errata."""
        self._check_name(name)
        energy, randic = self.energies[name]
        return float(energy), float(randic)

    def factored_polynomial(self, name: str) -> IntPolynomial:
        """Multiply out the printed factorization of an entry."""
        if name not in self.factorizations:
            raise InvalidParameterError(f"No printed factorization for {name}")
        product: RatPolynomial = IntPolynomial([1])
        for factor, power in self.factorizations[name]:
            product = product * factor ** power
        return IntPolynomial(product.coeffs)

    def matrix_graph(self, name: str) -> Graph:
        """Graph of a printed adjacency matrix."""
        if name not in self.matrices:
            raise InvalidParameterError(f"No printed adjacency matrix for {name}")
        return Graph.from_adjacency(self.matrices[name])

    def _check_name(self, name: str):
        if name not in self.polynomials:
            raise InvalidParameterError(f"Unknown catalog entry {name!r}; expected one of G_1..G_21")


def _parse_tables(raw: dict) -> PublishedTables:
    errata = raw.get("errata", {})
    return PublishedTables(
        names=tuple(raw["names"]),
        polynomials={k: IntPolynomial(v) for k, v in raw["characteristic_polynomials"].items()},
        energies={k: (v[0], v[1]) for k, v in raw["energies"].items()},
        permanents={k: int(v) for k, v in raw["permanents"].items()},
        energy_classes=tuple(tuple(c) for c in raw["energy_classes"]),
        factorizations={
            k: [(IntPolynomial(coeffs), int(power)) for coeffs, power in v] for k, v in raw["factorizations"].items()
        },
        matrices={k: tuple(tuple(int(ch) for ch in row) for row in v) for k, v in raw["matrices"].items()},
        petersen_match=raw["petersen_match"],
        polynomial_errata={k: IntPolynomial(v) for k, v in errata.get("characteristic_polynomials", {}).items()},
        energy_errata={k: (v[0], v[1]) for k, v in errata.get("energies", {}).items()},
    )


def load_published_tables(path: Optional[Path] = None) -> PublishedTables:
    """
    Read the reference tables from JSON.

    Args:
        path: JSON file. If None, uses <RANDIC_DATA_DIR>/published_tables.json.

    Returns:
        PublishedTables
    """
    path = Path(path) if path is not None else get_settings().data_dir / TABLES_FILENAME
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    tables = _parse_tables(raw)
    logger.info("Loaded %d reference rows from %s", len(tables.names), path)
    return tables


@lru_cache(maxsize=1)
def get_published_tables() -> PublishedTables:
    """Cached reference tables from the configured data directory."""
    return load_published_tables()
