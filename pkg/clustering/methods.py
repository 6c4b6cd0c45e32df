# ============================================================
# 📁 File: clustering/methods.py
# 📍 Location: asymclust/clustering/methods.py
# 📝 Description: Reciprocal, nonreciprocal and single linkage clustering
# ============================================================

"""
The three hierarchical clustering methods, each a thin composition over
the minimax closure:

- reciprocal:     closure of the max-symmetrized network
- nonreciprocal:  pointwise max of the directed closure and its transpose
- single linkage: closure of a symmetric network

All of them return an UltrametricMatrix over the network's labels.
"""

import time
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from clustering.closure import minimax_closure, pointwise_max_transpose
from clustering.errors import AsymmetricInputError, LabelMismatchError, UnknownMethodError
from clustering.network import Network, is_symmetric, new_network, symmetrize_max
from utils.constants import METHOD_ALIASES, METHOD_NAMES, Methods
from utils.logger import app_logger, log_method_run


@dataclass(frozen=True, eq=False)
class UltrametricMatrix:
    """Symmetric matrix satisfying the strong triangle inequality."""

    labels: Tuple[str, ...]
    values: np.ndarray

    @property
    def n(self) -> int:
        return len(self.labels)

    def distance(self, a: str, b: str) -> float:
        return float(self.values[self.labels.index(a), self.labels.index(b)])

    def distinct_values(self) -> np.ndarray:
        """Sorted distinct off-diagonal values."""
        if self.n < 2:
            return np.empty(0)
        upper = self.values[np.triu_indices(self.n, k=1)]
        return np.unique(upper)

    def reordered(self, labels) -> "UltrametricMatrix":
        """Same ultrametric with rows and columns in the given label order."""
        labels = tuple(labels)
        if labels == self.labels:
            return self
        if sorted(labels) != sorted(self.labels):
            raise LabelMismatchError(
                f"labels {list(labels)} differ from {list(self.labels)}"
            )
        order = [self.labels.index(label) for label in labels]
        return _wrap(labels, self.values[np.ix_(order, order)])

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "matrix": self.values.tolist()}

    def __repr__(self) -> str:
        return f"UltrametricMatrix(n={self.n}, labels={list(self.labels)!r})"


def _wrap(labels: Tuple[str, ...], values: np.ndarray) -> UltrametricMatrix:
    values = np.array(values, dtype=np.float64)
    values.setflags(write=False)
    return UltrametricMatrix(labels=labels, values=values)


# ============================================================
# 🌳 Methods
# ============================================================

def reciprocal(net: Network) -> UltrametricMatrix:
    """u^R: minimax chain cost over max(A(x, x'), A(x', x))."""
    closure = minimax_closure(symmetrize_max(net))
    return _wrap(net.labels, closure.values)


def nonreciprocal(net: Network) -> UltrametricMatrix:
    """u^NR: max of the two directed minimax chain costs."""
    closure = minimax_closure(net)
    return _wrap(net.labels, pointwise_max_transpose(closure))


def single_linkage(net: Network) -> UltrametricMatrix:
    """
    Classical single linkage; defined here for symmetric networks only.

    Raises:
        AsymmetricInputError: some A(x, x') ≠ A(x', x)
    """
    if not is_symmetric(net):
        i, j = np.argwhere(net.dissim != net.dissim.T)[0]
        raise AsymmetricInputError(int(i), int(j))
    closure = minimax_closure(net)
    return _wrap(net.labels, closure.values)


METHODS: Dict[str, Callable[[Network], UltrametricMatrix]] = {
    Methods.RECIPROCAL: reciprocal,
    Methods.NONRECIPROCAL: nonreciprocal,
    Methods.SINGLE_LINKAGE: single_linkage,
}


def canonical_method(name: str) -> str:
    """Normalise a method identifier (`single-linkage` → `single_linkage`)."""
    key = str(name).strip().lower()
    key = METHOD_ALIASES.get(key, key)
    if key not in METHOD_NAMES:
        raise UnknownMethodError(name)
    return key


def run_method(name: str, net: Network) -> UltrametricMatrix:
    """
    Uniform dispatch used by the CLI and the verification harness.

    Raises:
        UnknownMethodError: name is not a known method
    """
    method = canonical_method(name)
    started = time.perf_counter()
    result = METHODS[method](net)
    elapsed = time.perf_counter() - started
    if net.n >= 100:
        log_method_run(method, net.n, elapsed)
    else:
        app_logger.debug(f"🌳 {method} on {net.n} nodes in {elapsed:.4f}s")
    return result


# ============================================================
# 🔁 Helpers
# ============================================================

def ultrametric_as_network(u: UltrametricMatrix) -> Network:
    """Re-read an ultrametric as a symmetric network."""
    return new_network(u.labels, u.values)


def asymmetry_gap(net: Network) -> dict:
    """
    How far apart the two extremal ultrametrics are on one network.

    Equal outputs mean the communication pattern is effectively
    symmetric at every resolution.
    """
    lower = nonreciprocal(net).values
    upper = reciprocal(net).values
    iu = np.triu_indices(net.n, k=1)
    gaps = upper[iu] - lower[iu]
    strict = int(np.count_nonzero(gaps > 0))
    return {
        "pairs": int(gaps.size),
        "strict_pairs": strict,
        "max_gap": float(gaps.max()) if gaps.size else 0.0,
    }
