# ============================================================
# 📁 File: clustering/closure.py
# 📍 Location: asymclust/clustering/closure.py
# 📝 Description: Directed minimax chain costs ((min, max) closure)
# ============================================================

"""
Minimax closure of a dissimilarity matrix.

Entry (i, j) of the closure is the smallest achievable value of the
largest link along any chain from node i to node j. It is the
Floyd-Warshall recurrence over the (min, max) semiring:

    u(i, j) ← min(u(i, j), max(u(i, k), u(k, j)))

Only min/max of input values happen, so the result is exact and every
off-diagonal value is copied from the source matrix.
"""

from dataclasses import dataclass
from typing import Union

import numpy as np

from clustering.errors import InvalidMatrixError, NetworkError
from clustering.network import Network, as_square_matrix, validate_matrix


@dataclass(frozen=True, eq=False)
class MinimaxMatrix:
    """Unidirectional minimum chain costs; diagonal zero."""

    values: np.ndarray

    @property
    def n(self) -> int:
        return self.values.shape[0]


MatrixLike = Union[np.ndarray, Network, MinimaxMatrix, list]


def _coerce(dissim: MatrixLike) -> np.ndarray:
    if isinstance(dissim, Network):
        return np.array(dissim.dissim, dtype=np.float64)
    if isinstance(dissim, MinimaxMatrix):
        return np.array(dissim.values, dtype=np.float64)

    try:
        matrix = as_square_matrix(dissim)
        validate_matrix(matrix)
    except NetworkError as e:
        raise InvalidMatrixError(f"closure input rejected: {e}") from e

    if matrix.shape[0] == 0:
        raise InvalidMatrixError("closure input rejected: empty matrix")
    return matrix


def minimax_closure(dissim: MatrixLike) -> MinimaxMatrix:
    """
    Compute directed minimax chain costs for every ordered pair.

    O(n³) time, O(n²) space; each sweep over an intermediate node k is
    one vectorised update of the whole matrix.

    Args:
        dissim: Square matrix with zero diagonal and positive finite
            off-diagonal entries (or a Network / MinimaxMatrix)

    Returns:
        MinimaxMatrix with the closure values

    Raises:
        InvalidMatrixError: input is not Network-shaped
    """
    u = _coerce(dissim)

    for k in range(u.shape[0]):
        # max(u(i, k), u(k, j)) for all i, j in one broadcast
        through_k = np.maximum(u[:, k, np.newaxis], u[np.newaxis, k, :])
        np.minimum(u, through_k, out=u)

    u.setflags(write=False)
    return MinimaxMatrix(values=u)


def pointwise_max_transpose(m: Union[MinimaxMatrix, np.ndarray]) -> np.ndarray:
    """Symmetric matrix with entry (i, j) = max(m(i, j), m(j, i))."""
    values = m.values if isinstance(m, MinimaxMatrix) else np.asarray(m, dtype=np.float64)
    result = np.maximum(values, values.T)
    result.setflags(write=False)
    return result


def is_closed(m: Union[MinimaxMatrix, np.ndarray]) -> bool:
    """True iff m(i, j) ≤ max(m(i, k), m(k, j)) for all i, j, k."""
    values = m.values if isinstance(m, MinimaxMatrix) else np.asarray(m, dtype=np.float64)
    for k in range(values.shape[0]):
        through_k = np.maximum(values[:, k, np.newaxis], values[np.newaxis, k, :])
        if (values > through_k).any():
            return False
    return True
