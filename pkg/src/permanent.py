"""
Matrix Permanents

Exact permanents of square integer matrices by Ryser's inclusion-exclusion
formula, walking column subsets in Gray-code order so each step updates the
row sums by a single column.
"""

import itertools
import logging
import math
from typing import List, Sequence, Union

import numpy as np

from .config import get_settings
from .exceptions import InvalidParameterError, SizeLimitError
from .graph_core import Graph

logger = logging.getLogger(__name__)

NAIVE_MAX_N = 8
RYSER_MAX_N = 30

MatrixLike = Union[np.ndarray, Sequence[Sequence[int]]]


def _as_int_rows(matrix: MatrixLike) -> List[List[int]]:
    rows = [[int(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise InvalidParameterError("Permanent needs a square matrix")
    return rows


def permanent_ryser(matrix: MatrixLike) -> int:
    """
    Exact permanent by Ryser's formula.

    per(A) = (-1)^n * sum over nonempty column sets S of
    (-1)^|S| * prod_i sum_{j in S} a_ij, in O(2^n * n) steps.

    Args:
        matrix: Square integer matrix

    Returns:
        The permanent as a Python int
    """
    rows = _as_int_rows(matrix)
    n = len(rows)
    max_n = min(get_settings().permanent_max_n, RYSER_MAX_N)
    if n > max_n:
        raise SizeLimitError(f"Ryser permanent supports n <= {max_n}, got {n}")
    if n == 0:
        return 1

    row_sums = [0] * n
    total = 0
    gray = 0
    for step in range(1, 1 << n):
        column = (step & -step).bit_length() - 1
        gray ^= 1 << column
        if gray >> column & 1:
            for i in range(n):
                row_sums[i] += rows[i][column]
        else:
            for i in range(n):
                row_sums[i] -= rows[i][column]
        term = math.prod(row_sums)
        total += -term if bin(gray).count("1") & 1 else term
    return -total if n & 1 else total


def permanent_naive(matrix: MatrixLike) -> int:
    """
    Permanent as a plain sum over all n! permutations.

    Args:
        matrix: Square integer matrix with n <= 8

    Returns:
        The permanent as a Python int
    """
    rows = _as_int_rows(matrix)
    n = len(rows)
    if n > NAIVE_MAX_N:
        raise SizeLimitError(f"Naive permanent supports n <= {NAIVE_MAX_N}, got {n}")
    return sum(
        math.prod(rows[i][permutation[i]] for i in range(n)) for permutation in itertools.permutations(range(n))
    )


def permanent_of_graph(graph: Graph) -> int:
    """per(A(G)) via Ryser."""
    value = permanent_ryser(graph.adjacency_matrix(dtype=object))
    logger.debug("per(A) = %d for graph with n=%d, |E|=%d", value, graph.n, graph.edge_count)
    return value
