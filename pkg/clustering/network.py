# ============================================================
# 📁 File: clustering/network.py
# 📍 Location: asymclust/clustering/network.py
# 📝 Description: Asymmetric dissimilarity networks and symmetrization
# ============================================================

"""
A network is a finite node set with a dissimilarity for every ordered
pair. Nothing forces A(x, x') to equal A(x', x), and no triangle
inequality is assumed. Entries are strictly positive off the diagonal
and zero on it.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Sequence, Tuple

import numpy as np

from clustering.errors import (
    DuplicateLabelError,
    EmptyNetworkError,
    NegativeEntryError,
    NonFiniteEntryError,
    NonSquareError,
    NonZeroDiagonalError,
    ZeroOffDiagonalError,
)


@dataclass(frozen=True, eq=False)
class Network:
    """Node labels plus a square, possibly asymmetric, dissimilarity matrix."""

    labels: Tuple[str, ...]
    dissim: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        """Position of a label in canonical node order."""
        try:
            return self._positions[label]
        except KeyError:
            raise KeyError(f"unknown node {label!r}") from None

    def entry(self, source: str, target: str) -> float:
        """A(source, target)."""
        return float(self.dissim[self.index(source), self.index(target)])

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "matrix": self.dissim.tolist()}

    def __repr__(self) -> str:
        return f"Network(n={self.n}, labels={list(self.labels)!r})"


# ============================================================
# 🔧 Validation
# ============================================================

def _first(mask: np.ndarray) -> Tuple[int, int]:
    i, j = np.argwhere(mask)[0]
    return int(i), int(j)


def validate_matrix(matrix: np.ndarray) -> None:
    """
    Raise the first Network entry violation of a square float matrix.

    Violations are checked kind by kind (non-finite, negative, diagonal,
    zero off-diagonal); within a kind the first row-major position wins.
    """
    nonfinite = ~np.isfinite(matrix)
    if nonfinite.any():
        i, j = _first(nonfinite)
        raise NonFiniteEntryError(i, j, float(matrix[i, j]))

    negative = matrix < 0
    if negative.any():
        i, j = _first(negative)
        raise NegativeEntryError(i, j, float(matrix[i, j]))

    diagonal = np.diag(matrix)
    if (diagonal != 0).any():
        i = int(np.flatnonzero(diagonal != 0)[0])
        raise NonZeroDiagonalError(i, float(diagonal[i]))

    zero_off = (matrix == 0) & ~np.eye(matrix.shape[0], dtype=bool)
    if zero_off.any():
        i, j = _first(zero_off)
        raise ZeroOffDiagonalError(i, j, 0.0)


def as_square_matrix(dissim) -> np.ndarray:
    """Copy anything array-like into a 2-D float64 array, or raise NonSquareError."""
    try:
        matrix = np.array(dissim, dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise NonSquareError(f"matrix is not rectangular numeric data: {e}") from e

    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise NonSquareError(f"matrix of shape {matrix.shape} is not square")
    return matrix


# ============================================================
# 🏗️ Construction
# ============================================================

def new_network(labels: Iterable, dissim: Sequence[Sequence[float]]) -> Network:
    """
    Build a validated Network.

    Args:
        labels: Distinct node identifiers, in canonical order
        dissim: n×n dissimilarities, entry (i, j) = A(x_i, x_j)

    Returns:
        An immutable Network

    Raises:
        EmptyNetworkError, NonSquareError, DuplicateLabelError,
        NonFiniteEntryError, NegativeEntryError, NonZeroDiagonalError,
        ZeroOffDiagonalError
    """
    labels = tuple(str(label) for label in labels)
    if not labels:
        raise EmptyNetworkError()

    matrix = as_square_matrix(dissim)
    if matrix.shape[0] != len(labels):
        raise NonSquareError(
            f"matrix dimension {matrix.shape[0]} does not match {len(labels)} labels"
        )

    seen: set = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(label)
        seen.add(label)

    validate_matrix(matrix)
    matrix.setflags(write=False)
    return Network(labels=labels, dissim=matrix)


# ============================================================
# 🔁 Symmetrization
# ============================================================

def symmetrize_max(net: Network) -> Network:
    """Ā(x, x') = max(A(x, x'), A(x', x)); same labels."""
    matrix = np.maximum(net.dissim, net.dissim.T)
    matrix.setflags(write=False)
    return Network(labels=net.labels, dissim=matrix)


def is_symmetric(net: Network) -> bool:
    """Exact entrywise symmetry check."""
    return bool(np.array_equal(net.dissim, net.dissim.T))
