"""
Graph representation and constructors.

Provides the immutable simple-graph value type used everywhere in the
package, constructors for the cycle, Dutch windmill, K_{m,n} minus an edge
and Petersen families, disjoint unions, and graph6 (small format) encoding.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from .exceptions import Graph6ParseError, InvalidParameterError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]

GRAPH6_MAX_N = 62

# Adjacency matrix of the Petersen graph, row by row.
PETERSEN_ADJACENCY = (
    (0, 1, 0, 0, 1, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 1, 1, 0),
    (0, 1, 0, 0, 0, 0, 0, 0, 1, 1),
    (0, 0, 1, 0, 0, 1, 0, 0, 0, 1),
    (0, 0, 0, 1, 0, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 1, 1, 0, 0),
)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..n-1.

    Edges are stored as pairs (i, j) with i < j. Instances are immutable;
    degree data is computed once on first access.
    """

    n: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InvalidParameterError(f"Vertex count must be a nonnegative integer, got {self.n!r}")
        normalized = set()
        for edge in self.edges:
            i, j = (int(v) for v in edge)
            if i == j:
                raise InvalidParameterError(f"Self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 0 or j >= self.n:
                raise InvalidParameterError(f"Edge ({i}, {j}) outside vertex range 0..{self.n - 1}")
            normalized.add((i, j))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from an edge iterable, rejecting duplicate edges.

        Args:
            n: Vertex count
            edges: Pairs of vertex labels in any order

        Returns:
            The graph
        """
        pairs = [tuple(sorted((int(u), int(v)))) for u, v in edges]
        if len(set(pairs)) != len(pairs):
            raise InvalidParameterError("Duplicate edge in edge list")
        return cls(n, frozenset(pairs))

    @classmethod
    def from_adjacency(cls, rows: Sequence[Sequence[int]]) -> "Graph":
        """
        Build a graph from a symmetric 0/1 matrix with zero diagonal.

        Args:
            rows: Square adjacency matrix

        Returns:
            The graph
        """
        matrix = np.asarray(rows, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise InvalidParameterError("Adjacency matrix must be square")
        if not np.array_equal(matrix, matrix.T):
            raise InvalidParameterError("Adjacency matrix must be symmetric")
        if np.any(np.diag(matrix) != 0) or np.any((matrix != 0) & (matrix != 1)):
            raise InvalidParameterError("Adjacency matrix must be 0/1 with zero diagonal")
        n = matrix.shape[0]
        return cls(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n) if matrix[i, j]))

    @cached_property
    def degrees(self) -> Tuple[int, ...]:
        """Vertex degrees d_0..d_{n-1}."""
        counts = [0] * self.n
        for i, j in self.edges:
            counts[i] += 1
            counts[j] += 1
        return tuple(counts)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        """Edges in lexicographic order."""
        return tuple(sorted(self.edges))

    @property
    def edge_count(self) -> int:
        """Number of edges |E|."""
        return len(self.edges)

    def degree(self, v: int) -> int:
        """Degree of vertex v."""
        return self.degrees[v]

    def neighbors(self, v: int) -> List[int]:
        """Neighbors of v in increasing order."""
        return sorted(j if i == v else i for i, j in self.edges if v in (i, j))

    @cached_property
    def regular_degree(self) -> Optional[int]:
        """Common degree k if the graph is k-regular, else None."""
        if self.n == 0:
            return None
        first = self.degrees[0]
        return first if all(d == first for d in self.degrees) else None

    def is_regular(self, k: Optional[int] = None) -> bool:
        """Whether every vertex has degree k, or any common degree when k is None."""
        if k is None:
            return self.regular_degree is not None
        return self.regular_degree == k

    def is_connected(self) -> bool:
        """Connectivity; the empty graph counts as connected."""
        if self.n == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def adjacency_matrix(self, dtype=np.int64) -> np.ndarray:
        """
        Dense adjacency matrix A(G).

        Args:
            dtype: numpy dtype; pass object for arbitrary-precision integers

        Returns:
            n x n symmetric 0/1 matrix with zero diagonal
        """
        matrix = np.zeros((self.n, self.n), dtype=dtype)
        for i, j in self.edges:
            matrix[i, j] = 1
            matrix[j, i] = 1
        return matrix

    def to_networkx(self) -> nx.Graph:
        """networkx copy with vertices 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges)
        return graph

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Apply a vertex permutation.

        Args:
            permutation: permutation[v] is the new label of vertex v

        Returns:
            Isomorphic graph with relabeled vertices
        """
        if sorted(permutation) != list(range(self.n)):
            raise InvalidParameterError("Relabeling must be a permutation of 0..n-1")
        return Graph(self.n, frozenset((permutation[i], permutation[j]) for i, j in self.edges))


def make_cycle(m: int) -> Graph:
    """Cycle C_m on vertices 0..m-1."""
    if m < 3:
        raise InvalidParameterError(f"Cycle length must be at least 3, got {m}")
    return Graph(m, frozenset((i, (i + 1) % m) for i in range(m)))


def make_dutch_windmill(m: int, n: int) -> Graph:
    """
    Dutch windmill D_m^n: n copies of C_m sharing one vertex.

    Vertex 0 is the hub. Cycle c occupies vertices 1 + c(m-1) .. (c+1)(m-1)
    in path order and the hub closes it. D_3^n is the friendship graph F_n.

    Args:
        m: Cycle length, at least 3
        n: Number of cycles, at least 1

    Returns:
        Graph with (m-1)n + 1 vertices and mn edges
    """
    if m < 3 or n < 1:
        raise InvalidParameterError(f"Dutch windmill needs m >= 3 and n >= 1, got m={m}, n={n}")
    edges = set()
    for c in range(n):
        first = 1 + c * (m - 1)
        last = (c + 1) * (m - 1)
        edges.add((0, first))
        edges.add((0, last))
        edges.update((v, v + 1) for v in range(first, last))
    return Graph((m - 1) * n + 1, frozenset(edges))


def make_friendship(n: int) -> Graph:
    """Friendship graph F_n = D_3^n."""
    return make_dutch_windmill(3, n)


def make_complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with sides 0..m-1 and m..m+n-1."""
    if m < 1 or n < 1:
        raise InvalidParameterError(f"Complete bipartite graph needs m, n >= 1, got ({m}, {n})")
    return Graph(m + n, frozenset((i, m + j) for i in range(m) for j in range(n)))


def make_complete_bipartite_minus_edge(m: int, n: int) -> Graph:
    """
    K_{m,n} - e, removing the cross edge between the first vertex of each side.

    Args:
        m: First side size, at least 2
        n: Second side size, at least 2

    Returns:
        Graph with m + n vertices and mn - 1 edges
    """
    if m < 2 or n < 2:
        raise InvalidParameterError(f"K_(m,n) - e needs m, n >= 2, got ({m}, {n})")
    full = make_complete_bipartite(m, n)
    return Graph(full.n, full.edges - {(0, m)})


def make_complete(n: int) -> Graph:
    """Complete graph K_n, n >= 1."""
    if n < 1:
        raise InvalidParameterError(f"Complete graph needs n >= 1, got {n}")
    return Graph(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def make_prism() -> Graph:
    """Triangular prism C_3 x K_2."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def make_empty(n: int) -> Graph:
    """Edgeless graph on n vertices."""
    if n < 0:
        raise InvalidParameterError(f"Vertex count must be nonnegative, got {n}")
    return Graph(n, frozenset())


def make_petersen() -> Graph:
    """The Petersen graph with the fixed labeling of PETERSEN_ADJACENCY."""
    return Graph.from_adjacency(PETERSEN_ADJACENCY)


def make_random_graph(n: int, p: float, seed: Optional[int] = None) -> Graph:
    """
    Erdős–Rényi graph G(n, p).

    Args:
        n: Vertex count
        p: Independent edge probability
        seed: Seed for numpy's default_rng

    Returns:
        Random simple graph
    """
    if n < 0 or not 0.0 <= p <= 1.0:
        raise InvalidParameterError(f"Random graph needs n >= 0 and 0 <= p <= 1, got n={n}, p={p}")
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(n, frozenset((int(i), int(j)) for i, j in zip(*np.nonzero(upper))))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """
    Vertex-disjoint union; the k-th graph's vertices are shifted past all earlier ones.

    Args:
        graphs: Nonempty list of graphs

    Returns:
        Union graph
    """
    if not graphs:
        raise InvalidParameterError("Disjoint union of an empty list")
    offset = 0
    edges = set()
    for graph in graphs:
        edges.update((i + offset, j + offset) for i, j in graph.edges)
        offset += graph.n
    return Graph(offset, frozenset(edges))


def cycle_union(lengths: Sequence[int]) -> Graph:
    """2-regular graph made of disjoint cycles of the given lengths."""
    return disjoint_union([make_cycle(m) for m in lengths])


def format_adjacency(graph: Graph) -> str:
    """Adjacency matrix as lines of space-separated 0/1 entries."""
    matrix = graph.adjacency_matrix()
    return "\n".join(" ".join(str(int(x)) for x in row) for row in matrix)


def graph6_encode(graph: Graph) -> str:
    """
    Encode a graph in small-format graph6.

    Args:
        graph: Graph with at most 62 vertices

    Returns:
        graph6 string without header or trailing newline
    """
    if graph.n > GRAPH6_MAX_N:
        raise InvalidParameterError(f"Small-format graph6 supports n <= {GRAPH6_MAX_N}, got {graph.n}")
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def graph6_decode(text: str) -> Graph:
    """
    Decode a small-format graph6 string.

    Args:
        text: graph6 string, optionally with the >>graph6<< header

    Returns:
        The decoded graph
    """
    data = text.strip()
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6ParseError("Empty graph6 string")
    if any(not 63 <= ord(ch) <= 126 for ch in data):
        raise Graph6ParseError(f"Invalid character in graph6 string {data!r}")
    if data[0] == "~":
        raise Graph6ParseError("Long-format graph6 (n > 62) is not supported")
    n = ord(data[0]) - 63
    expected = 1 + (n * (n - 1) // 2 + 5) // 6
    if len(data) != expected:
        raise Graph6ParseError(f"graph6 string for n={n} must have {expected} characters, got {len(data)}")
    padding = 6 * (expected - 1) - n * (n - 1) // 2
    if padding and (ord(data[-1]) - 63) & ((1 << padding) - 1):
        raise Graph6ParseError(f"Nonzero padding bits in graph6 string {data!r}")
    try:
        decoded = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise Graph6ParseError(f"Malformed graph6 string {data!r}: {e}") from e
    return Graph(n, frozenset((int(u), int(v)) for u, v in decoded.edges()))
