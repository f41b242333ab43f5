"""
Spectral Computations

Builds the adjacency and Randić matrices of a graph, diagonalizes them with
a cyclic Jacobi eigensolver, and computes energy and Randić energy.
"""

import json
import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from .config import get_settings
from .exceptions import ConvergenceError, InternalConsistencyError, InvalidParameterError
from .graph_core import Graph

logger = logging.getLogger(__name__)

METHOD_NUMERIC = "numeric"
METHOD_REGULAR_SHORTCUT = "regular-shortcut"
SIGNIFICANT_DIGITS = 12


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Dense real symmetric matrix; the input is mirrored from its upper triangle."""

    values: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.values, dtype=float)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidParameterError(f"Symmetric matrix must be square, got shape {matrix.shape}")
        upper = np.triu(matrix)
        mirrored = upper + np.triu(matrix, k=1).T
        mirrored.setflags(write=False)
        object.__setattr__(self, "values", mirrored)

    @property
    def n(self) -> int:
        return self.values.shape[0]

    def frobenius_norm(self) -> float:
        """||M||_F."""
        return float(np.linalg.norm(self.values))


@dataclass(frozen=True)
class Spectrum:
    """
    Eigenvalues in non-increasing order with the eigensolver's residual.

    Attributes:
        values: Eigenvalues, largest first
        residual: max_i ||M v_i - λ_i v_i||_2 over the computed eigenpairs
    """

    values: Tuple[float, ...]
    residual: float = 0.0

    def __post_init__(self):
        ordered = tuple(sorted((float(v) for v in self.values), reverse=True))
        object.__setattr__(self, "values", ordered)

    def __len__(self):
        return len(self.values)

    def absolute_sum(self) -> float:
        """Sum of absolute eigenvalues."""
        return math.fsum(abs(v) for v in self.values)


@dataclass(frozen=True)
class EnergyReport:
    """Energy and Randić energy of one graph, with how RE was obtained."""

    graph_id: str
    n: int
    edges: int
    energy: float
    randic_energy: float
    method: str
    spectrum: Tuple[float, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.energy < 0 or self.randic_energy < 0:
            raise InternalConsistencyError(f"Negative energy reported for {self.graph_id}")
        if self.edges >= 1 and self.randic_energy < 2 - 1e-9:
            raise InternalConsistencyError(
                f"Randić energy {self.randic_energy} below 2 for {self.graph_id}, which has an edge"
            )
        if self.method not in (METHOD_NUMERIC, METHOD_REGULAR_SHORTCUT):
            raise InvalidParameterError(f"Unknown Randić energy method {self.method!r}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.graph_id,
            "n": self.n,
            "edges": self.edges,
            "energy": round_significant(self.energy),
            "randic_energy": round_significant(self.randic_energy),
            "method": self.method,
            "spectrum": [round_significant(v) for v in self.spectrum],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    """Round to a number of significant digits; -0.0 becomes 0.0."""
    rounded = float(f"{value:.{digits}g}")
    return 0.0 if rounded == 0 else rounded


def adjacency_matrix(graph: Graph) -> SymMatrix:
    """A(G) as a float SymMatrix."""
    return SymMatrix(graph.adjacency_matrix(dtype=float))


def randic_matrix(graph: Graph) -> SymMatrix:
    """
    Randić matrix R(G): 1/sqrt(d_i d_j) on edges, 0 elsewhere.

    Args:
        graph: Any simple graph; isolated vertices give zero rows

    Returns:
        Symmetric matrix R(G)
    """
    matrix = np.zeros((graph.n, graph.n), dtype=float)
    degrees = graph.degrees
    for i, j in graph.edges:
        weight = 1.0 / math.sqrt(degrees[i] * degrees[j])
        matrix[i, j] = weight
        matrix[j, i] = weight
    return SymMatrix(matrix)


def jacobi_eigh(
    matrix: np.ndarray,
    offdiag_rtol: float,
    max_sweeps: int,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """
    Cyclic Jacobi diagonalization of a real symmetric matrix.

    Sweeps over all (p, q) with p < q, annihilating a[p, q] with a Givens
    rotation, until the off-diagonal Frobenius norm drops to
    offdiag_rtol * ||M||_F.

    Args:
        matrix: Symmetric matrix (not modified)
        offdiag_rtol: Relative off-diagonal stopping threshold
        max_sweeps: Sweep cap

    Returns:
        (eigenvalues, eigenvectors as columns, sweeps used)
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    vectors = np.eye(n)
    threshold = offdiag_rtol * float(np.linalg.norm(a))
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0) * float(np.linalg.norm(np.triu(a, 1)))
        if off <= threshold:
            return np.diag(a).copy(), vectors, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p = vectors[:, p].copy()
                vec_q = vectors[:, q]
                vectors[:, p] = c * vec_p - s * vec_q
                vectors[:, q] = s * vec_p + c * vec_q
    values = np.diag(a).copy()
    raise ConvergenceError(
        f"Jacobi eigensolver did not converge in {max_sweeps} sweeps",
        residual=_max_residual(matrix, values, vectors),
        sweeps=max_sweeps,
    )


def _max_residual(matrix: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    if values.size == 0:
        return 0.0
    residuals = matrix @ vectors - vectors * values
    return float(np.max(np.linalg.norm(residuals, axis=0)))


def eigenvalues_symmetric(matrix: SymMatrix, tol: Optional[float] = None) -> Spectrum:
    """
    All eigenvalues of a symmetric matrix.

    Args:
        matrix: Symmetric matrix
        tol: Residual tolerance, scaled by max(1, ||M||_F). Defaults to RANDIC_EIGEN_TOL.

    Returns:
        Spectrum sorted non-increasing
    """
    settings = get_settings()
    tol = settings.eigen_tol if tol is None else tol
    if tol <= 0:
        raise InvalidParameterError(f"Tolerance must be positive, got {tol}")
    values, vectors, sweeps = jacobi_eigh(matrix.values, settings.eigen_offdiag_rtol, settings.eigen_max_sweeps)
    residual = _max_residual(matrix.values, values, vectors)
    bound = tol * max(1.0, matrix.frobenius_norm())
    if residual > bound:
        raise ConvergenceError(
            f"Eigenpair residual {residual:.3e} exceeds tolerance {bound:.3e}", residual=residual, sweeps=sweeps
        )
    logger.debug("Jacobi converged: n=%d sweeps=%d residual=%.3e", matrix.n, sweeps, residual)
    return Spectrum(tuple(values), residual)


def adjacency_spectrum(graph: Graph, tol: Optional[float] = None) -> Spectrum:
    """Eigenvalues of A(G), non-increasing."""
    return eigenvalues_symmetric(adjacency_matrix(graph), tol)


def randic_spectrum(graph: Graph, tol: Optional[float] = None) -> Spectrum:
    """Eigenvalues of R(G), non-increasing."""
    return eigenvalues_symmetric(randic_matrix(graph), tol)


def energy(graph: Graph, tol: Optional[float] = None) -> float:
    """E(G): sum of |λ_i| over the adjacency spectrum."""
    return adjacency_spectrum(graph, tol).absolute_sum()


def randic_energy_with_method(
    graph: Graph, allow_shortcut: bool = True, tol: Optional[float] = None
) -> Tuple[float, str]:
    """
    RE(G) together with the method used.

    Args:
        graph: Any simple graph
        allow_shortcut: Use RE = E/k for k-regular graphs with k >= 1
        tol: Eigensolver tolerance

    Returns:
        (Randić energy, "regular-shortcut" or "numeric")
    """
    k = graph.regular_degree
    if allow_shortcut and k:
        return energy(graph, tol) / k, METHOD_REGULAR_SHORTCUT
    return randic_spectrum(graph, tol).absolute_sum(), METHOD_NUMERIC


def randic_energy(graph: Graph, allow_shortcut: bool = True, tol: Optional[float] = None) -> float:
    """RE(G): sum of |ρ_i| over the Randić spectrum."""
    return randic_energy_with_method(graph, allow_shortcut, tol)[0]


def energy_report(
    graph: Graph, graph_id: str = "G", allow_shortcut: bool = True, tol: Optional[float] = None
) -> EnergyReport:
    """
    Energy, Randić energy and adjacency spectrum of one graph.

    Args:
        graph: Graph to analyze
        graph_id: Label carried into the report
        allow_shortcut: Permit the regular-graph shortcut for RE
        tol: Eigensolver tolerance

    Returns:
        EnergyReport
    """
    spectrum = adjacency_spectrum(graph, tol)
    k = graph.regular_degree
    if allow_shortcut and k:
        re_value, method = spectrum.absolute_sum() / k, METHOD_REGULAR_SHORTCUT
    else:
        re_value, method = randic_spectrum(graph, tol).absolute_sum(), METHOD_NUMERIC
    return EnergyReport(
        graph_id=graph_id,
        n=graph.n,
        edges=graph.edge_count,
        energy=spectrum.absolute_sum(),
        randic_energy=re_value,
        method=method,
        spectrum=spectrum.values,
    )


def spectra_difference(a: Spectrum, b: Spectrum, tol: Optional[float] = None) -> int:
    """
    Size of the multiset difference a minus b under tolerance matching.

    Both spectra are walked in non-increasing order; values within tol of
    each other are paired off.

    Args:
        a: First spectrum
        b: Second spectrum, same length
        tol: Matching tolerance. Defaults to RANDIC_MATCH_TOL.

    Returns:
        Number of eigenvalues of a left unmatched
    """
    if len(a) != len(b):
        raise InvalidParameterError(f"Spectra have different lengths {len(a)} and {len(b)}")
    tol = get_settings().match_tol if tol is None else tol
    i = j = matched = 0
    values_a: Sequence[float] = a.values
    values_b: Sequence[float] = b.values
    while i < len(values_a) and j < len(values_b):
        if abs(values_a[i] - values_b[j]) <= tol:
            matched += 1
            i += 1
            j += 1
        elif values_a[i] > values_b[j]:
            i += 1
        else:
            j += 1
    return len(values_a) - matched
