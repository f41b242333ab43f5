"""
Randić Energy Toolkit

Exact characteristic polynomials, energies, Randić energies and permanents
of graphs, with a catalog of the cubic graphs of order 10 and closed forms
for windmill and bipartite families.
"""

__version__ = "1.0.0"

from .census_catalog import CatalogEntry, EquivalenceClasses, build_catalog, enumerate_cubic, equivalence_classes
from .exact_poly import IntPolynomial, RatPolynomial, charpoly_adjacency, randic_charpoly
from .exceptions import RandicError
from .families_density import FamilySpec, QuadraticSurd, closed_form_re, density_probe
from .graph_core import Graph
from .permanent import permanent_of_graph, permanent_ryser
from .spectral import EnergyReport, Spectrum, energy, randic_energy

__all__ = [
    "CatalogEntry",
    "EquivalenceClasses",
    "build_catalog",
    "enumerate_cubic",
    "equivalence_classes",
    "IntPolynomial",
    "RatPolynomial",
    "charpoly_adjacency",
    "randic_charpoly",
    "RandicError",
    "FamilySpec",
    "QuadraticSurd",
    "closed_form_re",
    "density_probe",
    "Graph",
    "permanent_of_graph",
    "permanent_ryser",
    "EnergyReport",
    "Spectrum",
    "energy",
    "randic_energy",
]
