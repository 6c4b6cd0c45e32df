# ============================================================
# 📁 File: clustering/oracle.py
# 📍 Location: asymclust/clustering/oracle.py
# 📝 Description: Brute-force oracles and executable axiom checks
# ============================================================

"""
Independent checks for the clustering methods.

The brute-force oracle enumerates every simple chain between two nodes
with itertools.permutations, so it shares no code path with the closure.
Axiom checks build the networks the axioms talk about and compare the
method outputs exactly.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Any, Dict, Mapping, Optional, Sequence

import numpy as np

from clustering.errors import (
    AsymmetricInputError,
    InvalidNodeMapError,
    TooLargeError,
)
from clustering.methods import (
    UltrametricMatrix,
    canonical_method,
    nonreciprocal,
    reciprocal,
    run_method,
)
from clustering.network import Network, is_symmetric, new_network, symmetrize_max
from config import Config
from utils.constants import Methods


# ============================================================
# 📋 Reports
# ============================================================

@dataclass(frozen=True)
class VerificationReport:
    """Pass/fail outcome of one check, with a counterexample on failure."""

    check_name: str
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None
    trials: int = 1
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.passed != (self.counterexample is None):
            raise ValueError("a report passes exactly when it has no counterexample")

    @classmethod
    def ok(cls, check_name: str, trials: int = 1, **details) -> "VerificationReport":
        return cls(check_name=check_name, passed=True, trials=trials, details=details)

    @classmethod
    def failure(
        cls, check_name: str, counterexample: Dict[str, Any], trials: int = 1, **details
    ) -> "VerificationReport":
        return cls(
            check_name=check_name,
            passed=False,
            counterexample=counterexample,
            trials=trials,
            details=details,
        )

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "trials": self.trials,
            "details": self.details,
        }


def _values(m) -> np.ndarray:
    return m.values if hasattr(m, "values") else np.asarray(m, dtype=np.float64)


# ============================================================
# 📐 Strong Triangle Inequality
# ============================================================

def check_ultrametric(m) -> VerificationReport:
    """
    Zero diagonal, positive symmetric off-diagonal, and
    u(i, j) ≤ max(u(i, k), u(k, j)) for every triple.

    The counterexample is the lexicographically first violating (i, j, k).
    """
    name = "ultrametric"
    values = _values(m)

    if values.ndim != 2 or values.shape[0] != values.shape[1]:
        return VerificationReport.failure(name, {"reason": "not square", "shape": list(values.shape)})

    n = values.shape[0]
    diagonal = np.diag(values)
    if (diagonal != 0).any():
        i = int(np.flatnonzero(diagonal != 0)[0])
        return VerificationReport.failure(
            name, {"reason": "non-zero diagonal", "i": i, "value": float(diagonal[i])}
        )

    asymmetric = values != values.T
    if asymmetric.any():
        i, j = (int(x) for x in np.argwhere(asymmetric)[0])
        return VerificationReport.failure(
            name,
            {"reason": "asymmetric", "i": i, "j": j,
             "u_ij": float(values[i, j]), "u_ji": float(values[j, i])},
        )

    off = ~np.eye(n, dtype=bool)
    bad = off & ~((values > 0) & np.isfinite(values))
    if bad.any():
        i, j = (int(x) for x in np.argwhere(bad)[0])
        return VerificationReport.failure(
            name, {"reason": "non-positive off-diagonal", "i": i, "j": j, "value": float(values[i, j])}
        )

    first = None
    for k in range(n):
        through_k = np.maximum(values[:, k, np.newaxis], values[np.newaxis, k, :])
        violations = values > through_k
        if violations.any():
            i, j = (int(x) for x in np.argwhere(violations)[0])
            if first is None or (i, j, k) < first:
                first = (i, j, k)

    if first is not None:
        i, j, k = first
        return VerificationReport.failure(
            name,
            {
                "reason": "strong triangle inequality",
                "i": i, "j": j, "k": k,
                "u_ij": float(values[i, j]),
                "u_ik": float(values[i, k]),
                "u_kj": float(values[k, j]),
                "inequality": "u(i,j) <= max(u(i,k), u(k,j))",
            },
        )

    return VerificationReport.ok(name, triples=n ** 3)


# ============================================================
# 🐢 Brute-force Chain Enumeration
# ============================================================

def _check_size(net: Network, bound: Optional[int]) -> int:
    bound = Config.ORACLE_MAX_NODES if bound is None else bound
    if net.n > bound:
        raise TooLargeError(net.n, bound)
    return bound


def brute_force_directed_cost(net: Network, i: int, j: int, bound: Optional[int] = None) -> float:
    """
    Minimum over all simple chains i → … → j of the largest link.

    Raises:
        TooLargeError: network exceeds the enumeration bound
    """
    _check_size(net, bound)
    if i == j:
        return 0.0

    d = net.dissim.tolist()
    others = [k for k in range(net.n) if k not in (i, j)]
    best = float("inf")
    for length in range(len(others) + 1):
        for middle in permutations(others, length):
            chain = (i, *middle, j)
            cost = max(d[a][b] for a, b in zip(chain, chain[1:]))
            best = min(best, cost)
    return best


def _directed_costs(net: Network, bound: Optional[int]) -> np.ndarray:
    costs = np.zeros((net.n, net.n))
    for i in range(net.n):
        for j in range(net.n):
            if i != j:
                costs[i, j] = brute_force_directed_cost(net, i, j, bound)
    return costs


def brute_force_method(net: Network, name: str, bound: Optional[int] = None) -> UltrametricMatrix:
    """
    Assemble a method's ultrametric from brute-force chain costs.

    Raises:
        TooLargeError, UnknownMethodError, AsymmetricInputError
    """
    method = canonical_method(name)
    _check_size(net, bound)

    if method == Methods.RECIPROCAL:
        values = _directed_costs(symmetrize_max(net), bound)
    elif method == Methods.NONRECIPROCAL:
        directed = _directed_costs(net, bound)
        values = np.maximum(directed, directed.T)
    else:
        if not is_symmetric(net):
            i, j = np.argwhere(net.dissim != net.dissim.T)[0]
            raise AsymmetricInputError(int(i), int(j))
        values = _directed_costs(net, bound)

    values.setflags(write=False)
    return UltrametricMatrix(labels=net.labels, values=values)


# ============================================================
# 🅰️ Axiom of Value
# ============================================================

def two_node_network(alpha: float, beta: float) -> Network:
    """p → q costs alpha, q → p costs beta."""
    return new_network(["p", "q"], [[0.0, alpha], [beta, 0.0]])


def check_axiom_value(name: str, alpha: float, beta: float) -> VerificationReport:
    """Two-node network must merge exactly at max(alpha, beta)."""
    method = canonical_method(name)
    if not (alpha > 0 and beta > 0):
        raise ValueError(f"alpha and beta must be positive, got {alpha}, {beta}")

    u = run_method(method, two_node_network(alpha, beta)).values[0, 1]
    expected = max(alpha, beta)
    check = f"axiom-value:{method}"
    if u == expected:
        return VerificationReport.ok(check, u=float(u))
    return VerificationReport.failure(
        check, {"alpha": alpha, "beta": beta, "u": float(u), "expected": float(expected)}
    )


# ============================================================
# 🅱️ Axiom of Transformation
# ============================================================

@dataclass(frozen=True, eq=False)
class NodeMap:
    """Dissimilarity-reducing map φ from source nodes onto target nodes."""

    source: Network
    target: Network
    mapping: Mapping[str, str]

    def image_indices(self) -> np.ndarray:
        return np.array([self.target.index(self.mapping[x]) for x in self.source.labels])


def new_node_map(source: Network, target: Network, mapping: Mapping[str, str]) -> NodeMap:
    """
    Validate totality and A_X(x, x') ≥ A_Y(φ(x), φ(x')).

    Raises:
        InvalidNodeMapError
    """
    missing = [x for x in source.labels if x not in mapping]
    if missing:
        raise InvalidNodeMapError(f"map is not total; unmapped: {missing}")

    unknown = sorted({mapping[x] for x in source.labels} - set(target.labels))
    if unknown:
        raise InvalidNodeMapError(f"map hits labels outside the target: {unknown}")

    node_map = NodeMap(source=source, target=target, mapping=dict(mapping))
    idx = node_map.image_indices()
    pulled = target.dissim[np.ix_(idx, idx)]
    increased = pulled > source.dissim
    if increased.any():
        i, j = (int(x) for x in np.argwhere(increased)[0])
        raise InvalidNodeMapError(
            f"map increases A({source.labels[i]}, {source.labels[j]}) "
            f"from {source.dissim[i, j]} to {pulled[i, j]}"
        )
    return node_map


def generate_reducing_map(net: Network, seed: int) -> NodeMap:
    """
    Random surjection onto 1..n target nodes with min-over-preimages dissimilarities.

    Target node k is named `y{k}`, numbered by its smallest preimage.
    The same seed always gives the same map.
    """
    rng = np.random.default_rng(seed)
    n = net.n
    size = int(rng.integers(1, n + 1))

    perm = rng.permutation(n)
    assign = np.empty(n, dtype=np.int64)
    assign[perm[:size]] = np.arange(size)
    if n > size:
        assign[perm[size:]] = rng.integers(0, size, size=n - size)

    renumber: Dict[int, int] = {}
    for a in assign:
        renumber.setdefault(int(a), len(renumber))
    assign = np.array([renumber[int(a)] for a in assign])

    target = np.full((size, size), np.inf)
    rows = np.repeat(assign, n)
    cols = np.tile(assign, n)
    np.minimum.at(target, (rows, cols), net.dissim.ravel())
    np.fill_diagonal(target, 0.0)

    target_labels = [f"y{k}" for k in range(size)]
    mapping = {x: target_labels[a] for x, a in zip(net.labels, assign)}
    return new_node_map(net, new_network(target_labels, target), mapping)


def check_axiom_transformation(name: str, node_map: NodeMap) -> VerificationReport:
    """u_X(x, x') ≥ u_Y(φ(x), φ(x')) for every source pair."""
    method = canonical_method(name)
    u_x = run_method(method, node_map.source).values
    u_y = run_method(method, node_map.target).values

    idx = node_map.image_indices()
    pulled = u_y[np.ix_(idx, idx)]
    check = f"axiom-transformation:{method}"
    pairs = node_map.source.n * (node_map.source.n - 1) // 2

    violations = u_x < pulled
    if violations.any():
        i, j = (int(x) for x in np.argwhere(violations)[0])
        labels = node_map.source.labels
        return VerificationReport.failure(
            check,
            {
                "x": labels[i], "x_prime": labels[j],
                "phi_x": node_map.mapping[labels[i]],
                "phi_x_prime": node_map.mapping[labels[j]],
                "u_x": float(u_x[i, j]), "u_y": float(pulled[i, j]),
            },
            pairs=pairs,
        )
    return VerificationReport.ok(check, pairs=pairs)


# ============================================================
# 🥪 Extremal Bounds
# ============================================================

def check_sandwich(net: Network, candidate: UltrametricMatrix) -> VerificationReport:
    """
    nonreciprocal(net) ≤ candidate ≤ reciprocal(net), entrywise.

    Raises:
        LabelMismatchError: candidate is defined on other labels
    """
    values = candidate.reordered(net.labels).values
    lower = nonreciprocal(net).values
    upper = reciprocal(net).values

    below = values < lower
    outside = below | (values > upper)
    if outside.any():
        i, j = (int(x) for x in np.argwhere(outside)[0])
        return VerificationReport.failure(
            "sandwich",
            {
                "x": net.labels[i], "x_prime": net.labels[j],
                "lower": float(lower[i, j]),
                "candidate": float(values[i, j]),
                "upper": float(upper[i, j]),
                "violated": "lower" if below[i, j] else "upper",
            },
        )
    return VerificationReport.ok("sandwich")


# ============================================================
# 🎲 Random Inputs
# ============================================================

def random_network(
    rng: np.random.Generator,
    n: int,
    symmetric: bool = False,
    labels: Optional[Sequence[str]] = None,
) -> Network:
    """Off-diagonal entries uniform in (0, 1]."""
    values = 1.0 - rng.random((n, n))
    if symmetric:
        values = np.triu(values, k=1)
        values = values + values.T
    np.fill_diagonal(values, 0.0)
    labels = labels if labels is not None else [f"x{i + 1}" for i in range(n)]
    return new_network(labels, values)
