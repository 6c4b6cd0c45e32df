# ============================================================
# 📁 File: clustering/compare.py
# 📍 Location: asymclust/clustering/compare.py
# 📝 Description: Differences between two hierarchical clusterings
# ============================================================

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple, Union

import numpy as np

from clustering.dendrogram import Dendrogram, dendrogram_to_ultrametric
from clustering.methods import UltrametricMatrix
from utils.constants import json_number


@dataclass(frozen=True)
class ResolutionAgreement:
    resolution: float
    identical: bool
    rand_index: float

    def to_dict(self) -> dict:
        return {
            "resolution": json_number(self.resolution),
            "identical": self.identical,
            "rand_index": self.rand_index,
        }


@dataclass(frozen=True)
class ComparisonReport:
    labels: Tuple[str, ...]
    max_abs_difference: float
    agreements: Tuple[ResolutionAgreement, ...]

    @property
    def identical(self) -> bool:
        return self.max_abs_difference == 0

    def to_dict(self) -> dict:
        return {
            "labels": list(self.labels),
            "max_abs_difference": json_number(self.max_abs_difference),
            "identical": self.identical,
            "agreements": [a.to_dict() for a in self.agreements],
        }


Clustering = Union[UltrametricMatrix, Dendrogram]


def _as_ultrametric(item: Clustering) -> UltrametricMatrix:
    if isinstance(item, Dendrogram):
        return dendrogram_to_ultrametric(item)
    return item


def compare_ultrametrics(
    first: Clustering,
    second: Clustering,
    resolutions: Optional[Iterable[float]] = None,
) -> ComparisonReport:
    """
    Entrywise max |u1 − u2| plus per-resolution partition agreement.

    Partitions are compared through co-membership (u ≤ δ). By default the
    resolutions are 0 and every merge height of either clustering.

    Raises:
        LabelMismatchError: the two clusterings cover different labels
    """
    a = _as_ultrametric(first)
    b = _as_ultrametric(second).reordered(a.labels)

    difference = float(np.abs(a.values - b.values).max()) if a.n else 0.0

    if resolutions is None:
        grid = sorted({0.0, *a.distinct_values().tolist(), *b.distinct_values().tolist()})
    else:
        grid = sorted({float(delta) for delta in resolutions})

    rows, cols = np.triu_indices(a.n, k=1)
    agreements = []
    for delta in grid:
        together_a = a.values[rows, cols] <= delta
        together_b = b.values[rows, cols] <= delta
        matches = int(np.count_nonzero(together_a == together_b))
        total = int(rows.size)
        agreements.append(
            ResolutionAgreement(
                resolution=delta,
                identical=matches == total,
                rand_index=matches / total if total else 1.0,
            )
        )

    return ComparisonReport(
        labels=tuple(a.labels),
        max_abs_difference=difference,
        agreements=tuple(agreements),
    )
