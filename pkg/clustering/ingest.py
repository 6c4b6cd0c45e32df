# ============================================================
# 📁 File: clustering/ingest.py
# 📍 Location: asymclust/clustering/ingest.py
# 📝 Description: Directed message counts → dissimilarity network
# ============================================================

"""
Message-count ingestion.

More messages from x to x' mean a smaller dissimilarity A(x, x').
Raw values are reciprocal counts; directed pairs with no message get a
finite cap so every network stays finite and always merges into one
cluster eventually.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from clustering.errors import EmptyEdgeListError, ParseError
from clustering.network import Network, new_network
from config import Config
from utils.constants import (
    MISSING_EDGE_POLICIES,
    NORMALIZATION_POLICIES,
    MissingEdges,
    Policies,
)
from utils.logger import app_logger, log_ingest


Record = Tuple[str, str, int]


@dataclass(frozen=True)
class EdgeList:
    """Directed message counts; no self-edges, one record per ordered pair."""

    records: Tuple[Record, ...]

    def labels(self) -> List[str]:
        """Every node that appears in a record, sorted."""
        return sorted({label for source, target, _ in self.records for label in (source, target)})

    def activity(self) -> Dict[str, int]:
        """Messages sent plus received, per node."""
        totals: Dict[str, int] = {}
        for source, target, count in self.records:
            totals[source] = totals.get(source, 0) + count
            totals[target] = totals.get(target, 0) + count
        return totals

    def restricted_to(self, labels: Iterable[str]) -> "EdgeList":
        keep = set(labels)
        return EdgeList(
            records=tuple(r for r in self.records if r[0] in keep and r[1] in keep)
        )


def representable_count(count: int) -> bool:
    """Whether count converts to a float without overflow."""
    try:
        float(count)
    except OverflowError:
        return False
    return True


def new_edge_list(records: Iterable[Tuple[str, str, int]]) -> EdgeList:
    """
    Sum duplicate (source, target) records and drop self-edges.

    Raises:
        ParseError: a count is not a positive integer or does not fit in a float
    """
    totals: Dict[Tuple[str, str], int] = {}
    self_edges = 0

    for source, target, count in records:
        if isinstance(count, bool) or int(count) != count or count <= 0:
            raise ParseError(f"message count must be a positive integer, got {count!r}")
        if not representable_count(count):
            raise ParseError(f"message count {count} is too large")
        source, target = str(source), str(target)
        if source == target:
            self_edges += 1
            continue
        totals[(source, target)] = totals.get((source, target), 0) + int(count)

    if self_edges:
        app_logger.debug(f"🔁 Dropped {self_edges} self-edge records")

    return EdgeList(records=tuple((s, t, c) for (s, t), c in sorted(totals.items())))


# ============================================================
# ✂️ Node Selection
# ============================================================

def top_k_edges(edges: EdgeList, k: int) -> EdgeList:
    """Keep only the k most active nodes (ties broken by label)."""
    activity = edges.activity()
    ranked = sorted(activity, key=lambda label: (-activity[label], label))
    return edges.restricted_to(ranked[:k])


def largest_strongly_connected(edges: EdgeList) -> List[str]:
    """
    Labels of the largest strongly connected component.

    Ties go to the component holding the alphabetically smallest label.
    """
    labels = edges.labels()
    index = {label: i for i, label in enumerate(labels)}
    rows = [index[s] for s, _, _ in edges.records]
    cols = [index[t] for _, t, _ in edges.records]
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(labels), len(labels)))

    _, component = connected_components(graph, directed=True, connection="strong")
    sizes = np.bincount(component)
    best = max(range(len(sizes)), key=lambda c: (sizes[c], -int(np.flatnonzero(component == c)[0])))
    return [label for label, c in zip(labels, component) if c == best]


# ============================================================
# 📏 Counts → Dissimilarities
# ============================================================

def counts_to_dissimilarity(
    edges: EdgeList,
    policy: str = Config.DEFAULT_POLICY,
    missing: str = Config.DEFAULT_MISSING,
    factor: Optional[float] = None,
) -> Network:
    """
    Build a network from message counts.

    raw(i, j) = 1 / count(i, j) where messages exist; missing directed
    pairs get factor × the largest finite raw value. Under
    `inverse-normalized` everything is then divided by the global
    maximum so off-diagonal values lie in (0, 1].

    Args:
        edges: Directed message counts
        policy: `inverse-normalized` or `inverse`
        missing: `cap`, or `scc` to first keep only the largest strongly
            connected component
        factor: Cap multiplier, Config.MISSING_EDGE_FACTOR when omitted

    Raises:
        EmptyEdgeListError: no record between distinct nodes
        ValueError: unknown policy, or factor not above 1
    """
    if policy not in NORMALIZATION_POLICIES:
        raise ValueError(f"unknown normalization policy {policy!r}")
    if missing not in MISSING_EDGE_POLICIES:
        raise ValueError(f"unknown missing-edge policy {missing!r}")
    if not edges.records:
        raise EmptyEdgeListError()

    factor = Config.MISSING_EDGE_FACTOR if factor is None else factor
    if not factor > 1:
        raise ValueError(f"missing-edge factor must exceed 1, got {factor!r}")

    if missing == MissingEdges.SCC:
        component = largest_strongly_connected(edges)
        if len(component) < 2:
            app_logger.warning("⚠️ Largest strongly connected component is a single node")
        edges = edges.restricted_to(component)
        labels = component
    else:
        labels = edges.labels()

    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    raw = np.full((n, n), np.nan)
    for source, target, count in edges.records:
        raw[index[source], index[target]] = 1.0 / count
    np.fill_diagonal(raw, 0.0)

    absent = np.isnan(raw)
    if absent.any():
        raw[absent] = factor * np.nanmax(raw)

    if policy == Policies.INVERSE_NORMALIZED and n > 1:
        raw = raw / raw.max()

    log_ingest(len(edges.records), n, policy, missing)
    return new_network(labels, raw)
