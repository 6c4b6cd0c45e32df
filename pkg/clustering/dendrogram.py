# ============================================================
# 📁 File: clustering/dendrogram.py
# 📍 Location: asymclust/clustering/dendrogram.py
# 📝 Description: Ultrametric ⇄ dendrogram conversion, cuts and Newick
# ============================================================

"""
Dendrograms as ordered merge events.

Cluster identifiers follow the linkage-matrix convention: leaves are
0..n-1 in canonical node order, every merge creates the next integer.
Several clusters may merge in one event (ties are genuine in minimax
ultrametrics), and several events may share a resolution when disjoint
groups form at the same δ.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from clustering.errors import InvalidDendrogramError, NotUltrametricError, ParseError
from clustering.methods import UltrametricMatrix
from clustering.oracle import VerificationReport, check_ultrametric
from utils.constants import NEWICK_UNSAFE, format_number, json_number


# ============================================================
# 🧱 Types
# ============================================================

@dataclass(frozen=True)
class MergeEvent:
    """At `resolution`, the clusters in `merged` unite into `new_cluster`."""

    resolution: float
    merged: Tuple[int, ...]
    new_cluster: int

    def to_dict(self) -> dict:
        return {
            "resolution": json_number(self.resolution),
            "merged": list(self.merged),
            "new": self.new_cluster,
        }


@dataclass(frozen=True)
class Dendrogram:
    """Merge tree over `labels`; events sorted by resolution."""

    labels: Tuple[str, ...]
    events: Tuple[MergeEvent, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def resolutions(self) -> List[float]:
        """Distinct event resolutions, ascending."""
        return sorted({event.resolution for event in self.events})

    @cached_property
    def _member_map(self) -> Dict[int, Tuple[int, ...]]:
        members: Dict[int, Tuple[int, ...]] = {i: (i,) for i in range(self.n)}
        for event in self.events:
            merged: List[int] = []
            for cluster in event.merged:
                merged.extend(members.get(cluster, ()))
            members[event.new_cluster] = tuple(sorted(merged))
        return members

    def members(self, cluster_id: int) -> Tuple[int, ...]:
        """
        Leaf indices under one cluster id, ascending.

        Raises:
            KeyError: no leaf or event has this id
        """
        try:
            return self._member_map[cluster_id]
        except KeyError:
            raise KeyError(f"unknown cluster id {cluster_id}") from None

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "events": [event.to_dict() for event in self.events],
        }


@dataclass(frozen=True)
class Partition:
    """Disjoint cover of the labels, read off a dendrogram at `resolution`."""

    blocks: Tuple[Tuple[str, ...], ...]
    resolution: float

    def block_of(self, label: str) -> Tuple[str, ...]:
        for block in self.blocks:
            if label in block:
                return block
        raise KeyError(f"unknown node {label!r}")

    def together(self, a: str, b: str) -> bool:
        return b in self.block_of(a)

    def refines(self, other: "Partition") -> bool:
        """Every block of self sits inside one block of other."""
        return all(set(block) <= set(other.block_of(block[0])) for block in self.blocks)

    def to_dict(self) -> dict:
        return {
            "resolution": json_number(self.resolution),
            "blocks": [list(block) for block in self.blocks],
        }


# ============================================================
# 🔄 Ultrametric → Dendrogram
# ============================================================

def ultrametric_to_dendrogram(u: UltrametricMatrix) -> Dendrogram:
    """
    Union all pairs with u ≤ δ_k for each distinct value δ_k, emitting one
    event per cluster formed at δ_k.

    Raises:
        NotUltrametricError: u fails the strong triangle inequality
    """
    report = check_ultrametric(u)
    if not report.passed:
        raise NotUltrametricError(report.counterexample)

    n = u.n
    values = u.values
    forest = DisjointSet(range(n))
    cluster_of_root: Dict[int, int] = {i: i for i in range(n)}
    least: Dict[int, int] = {i: i for i in range(n)}
    next_id = n
    events: List[MergeEvent] = []

    rows, cols = np.triu_indices(n, k=1)
    upper = values[rows, cols]

    for delta in np.unique(upper):
        at_delta = np.flatnonzero(upper == delta)
        pairs = [(int(rows[p]), int(cols[p])) for p in at_delta]

        involved = {node for pair in pairs for node in pair}
        old_root = {node: forest[node] for node in involved}
        for a, b in pairs:
            forest.merge(a, b)

        groups: Dict[int, set] = {}
        for node in involved:
            groups.setdefault(forest[node], set()).add(old_root[node])

        formed = []
        for new_root, roots in groups.items():
            if len(roots) < 2:
                continue
            merged = sorted((cluster_of_root[r] for r in roots), key=least.__getitem__)
            formed.append((new_root, merged))
        formed.sort(key=lambda item: least[item[1][0]])

        for new_root, merged in formed:
            events.append(
                MergeEvent(resolution=float(delta), merged=tuple(merged), new_cluster=next_id)
            )
            least[next_id] = least[merged[0]]
            cluster_of_root[new_root] = next_id
            next_id += 1

    return Dendrogram(labels=tuple(u.labels), events=tuple(events))


# ============================================================
# ✅ Validation (D1 / D2)
# ============================================================

def validate_dendrogram(d: Dendrogram) -> VerificationReport:
    """
    Check boundary conditions (D1), merge-only growth (D2) and event
    resolutions. Each property reports its first violating event.
    """
    violations: Dict[str, dict] = {}

    def flag(prop: str, event: Optional[int], reason: str) -> None:
        violations.setdefault(prop, {"property": prop, "event": event, "reason": reason})

    n = d.n
    if n == 0 or len(set(d.labels)) != n:
        flag("D1", None, "labels must be non-empty and distinct")

    alive = set(range(n))
    used = set(range(n))
    formed_at: Dict[int, float] = {}
    previous = 0.0

    for index, event in enumerate(d.events):
        delta = event.resolution
        if not (np.isfinite(delta) and delta > 0):
            flag("resolution", index, f"resolution {delta!r} must be positive and finite")
        elif delta < previous:
            flag("resolution", index, f"resolution {delta!r} comes after {previous!r}")
        else:
            previous = delta

        if len(set(event.merged)) < 2:
            flag("D2", index, "an event must combine at least two clusters")
        if len(set(event.merged)) != len(event.merged):
            flag("D2", index, "an event lists the same cluster more than once")

        for cluster in event.merged:
            if cluster not in alive:
                flag("D2", index, f"cluster {cluster} is not present below this resolution")
            elif formed_at.get(cluster) == delta:
                flag("resolution", index, f"cluster {cluster} forms and merges at the same resolution")

        if event.new_cluster in used:
            flag("D2", index, f"cluster id {event.new_cluster} is reused")

        alive -= set(event.merged)
        alive.add(event.new_cluster)
        used.add(event.new_cluster)
        formed_at[event.new_cluster] = delta

    if n > 0 and len(alive) != 1:
        flag("D1", None, f"{len(alive)} clusters remain after the last event")

    details = {prop: prop not in violations for prop in ("D1", "D2", "resolution")}
    if not violations:
        return VerificationReport.ok("dendrogram", trials=len(d.events), **details)

    first = min(
        violations.values(),
        key=lambda v: (v["event"] is None, v["event"] if v["event"] is not None else 0),
    )
    return VerificationReport.failure("dendrogram", first, trials=len(d.events), **details)


def _require_valid(d: Dendrogram) -> None:
    report = validate_dendrogram(d)
    if not report.passed:
        raise InvalidDendrogramError(report)


# ============================================================
# 🔄 Dendrogram → Ultrametric
# ============================================================

def dendrogram_to_ultrametric(d: Dendrogram) -> UltrametricMatrix:
    """
    u(x, x') = resolution of the earliest event uniting x and x'.

    Raises:
        InvalidDendrogramError
    """
    _require_valid(d)
    members = {i: [i] for i in range(d.n)}
    values = np.zeros((d.n, d.n))

    for event in d.events:
        groups = [members.pop(cluster) for cluster in event.merged]
        for a in range(len(groups)):
            for b in range(a + 1, len(groups)):
                block = np.ix_(groups[a], groups[b])
                values[block] = event.resolution
                values[np.ix_(groups[b], groups[a])] = event.resolution
        members[event.new_cluster] = [leaf for group in groups for leaf in group]

    values.setflags(write=False)
    return UltrametricMatrix(labels=d.labels, values=values)


# ============================================================
# ✂️ Cuts
# ============================================================

def cut(d: Dendrogram, delta: float) -> Partition:
    """Clusters present at resolution delta (events with resolution ≤ delta applied)."""
    if not delta >= 0:
        raise ValueError(f"resolution must be non-negative, got {delta!r}")
    _require_valid(d)

    members: Dict[int, List[int]] = {i: [i] for i in range(d.n)}
    for event in d.events:
        if event.resolution > delta:
            break
        merged: List[int] = []
        for cluster in event.merged:
            merged.extend(members.pop(cluster))
        members[event.new_cluster] = merged

    blocks = sorted(sorted(group) for group in members.values())
    return Partition(
        blocks=tuple(tuple(d.labels[i] for i in block) for block in blocks),
        resolution=float(delta),
    )


# ============================================================
# 🌲 Newick
# ============================================================

def newick_label(label: str) -> str:
    if NEWICK_UNSAFE.search(label):
        return "'" + label.replace("'", "''") + "'"
    return label


def to_newick(d: Dendrogram) -> str:
    """
    Newick text where each branch length is parent resolution minus
    child resolution (leaves sit at 0). Children are ordered by their
    smallest member in canonical node order.
    """
    _require_valid(d)
    n = d.n
    height: Dict[int, float] = {i: 0.0 for i in range(n)}
    children: Dict[int, Tuple[int, ...]] = {}
    least: Dict[int, int] = {i: i for i in range(n)}

    root = 0
    for event in d.events:
        height[event.new_cluster] = event.resolution
        children[event.new_cluster] = tuple(sorted(event.merged, key=least.__getitem__))
        least[event.new_cluster] = min(least[c] for c in event.merged)
        root = event.new_cluster

    def render(cluster: int) -> str:
        if cluster < n:
            return newick_label(d.labels[cluster])
        parts = [
            f"{render(child)}:{format_number(height[cluster] - height[child])}"
            for child in children[cluster]
        ]
        return "(" + ",".join(parts) + ")"

    return render(root) + ";"


def dendrogram_from_dict(payload: dict) -> Dendrogram:
    """
    Inverse of Dendrogram.to_dict; structure is checked, semantics are not.

    Raises:
        ParseError
    """
    try:
        labels = tuple(str(label) for label in payload["labels"])
        events = tuple(
            MergeEvent(
                resolution=float(event["resolution"]),
                merged=tuple(int(c) for c in event["merged"]),
                new_cluster=int(event["new"]),
            )
            for event in payload["events"]
        )
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed tree document: {e}") from e
    return Dendrogram(labels=labels, events=events)
