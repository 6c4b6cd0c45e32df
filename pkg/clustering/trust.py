# ============================================================
# 📁 File: clustering/trust.py
# 📍 Location: asymclust/clustering/trust.py
# 📝 Description: Circles of trust bracketed by the extremal methods
# ============================================================

"""
Any admissible trust ultrametric T lies between the nonreciprocal and
reciprocal ultrametrics. At resolution δ a pair is therefore:

- certain-in:  u^R ≤ δ, together under every admissible method
- certain-out: u^NR > δ, apart under every admissible method
- ambiguous:   otherwise, the answer depends on the method
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from clustering.dendrogram import Partition, cut, ultrametric_to_dendrogram
from clustering.methods import nonreciprocal, reciprocal
from clustering.network import Network
from utils.constants import TRUST_EMOJIS, TrustStatus, json_number
from utils.logger import app_logger


@dataclass(frozen=True)
class PairTrust:
    first: str
    second: str
    lower: float
    upper: float
    status: TrustStatus

    def to_dict(self) -> dict:
        return {
            "pair": [self.first, self.second],
            "nonreciprocal": json_number(self.lower),
            "reciprocal": json_number(self.upper),
            "status": self.status.value,
        }


@dataclass(frozen=True)
class TrustReport:
    delta: float
    pairs: Tuple[PairTrust, ...]
    nonreciprocal_cut: Partition
    reciprocal_cut: Partition

    def counts(self) -> Dict[str, int]:
        totals = {status.value: 0 for status in TrustStatus}
        for pair in self.pairs:
            totals[pair.status.value] += 1
        return totals

    def circles(self) -> Tuple[Tuple[str, ...], ...]:
        """Groups that form a circle of trust under every admissible method."""
        return tuple(block for block in self.reciprocal_cut.blocks if len(block) > 1)

    def to_dict(self) -> dict:
        return {
            "delta": json_number(self.delta),
            "counts": self.counts(),
            "pairs": [pair.to_dict() for pair in self.pairs],
            "certain_circles": [list(block) for block in self.circles()],
            "cuts": {
                "nonreciprocal": self.nonreciprocal_cut.to_dict(),
                "reciprocal": self.reciprocal_cut.to_dict(),
            },
        }


def classify(lower: float, upper: float, delta: float) -> TrustStatus:
    if upper <= delta:
        return TrustStatus.CERTAIN_IN
    if lower > delta:
        return TrustStatus.CERTAIN_OUT
    return TrustStatus.AMBIGUOUS


def trust_bounds(net: Network, delta: float) -> TrustReport:
    """Classify every unordered pair at resolution delta."""
    if not delta >= 0:
        raise ValueError(f"resolution must be non-negative, got {delta!r}")

    lower = nonreciprocal(net)
    upper = reciprocal(net)

    pairs = []
    for i in range(net.n):
        for j in range(i + 1, net.n):
            low, high = float(lower.values[i, j]), float(upper.values[i, j])
            pairs.append(PairTrust(net.labels[i], net.labels[j], low, high, classify(low, high, delta)))

    report = TrustReport(
        delta=float(delta),
        pairs=tuple(pairs),
        nonreciprocal_cut=cut(ultrametric_to_dendrogram(lower), delta),
        reciprocal_cut=cut(ultrametric_to_dendrogram(upper), delta),
    )

    summary = ", ".join(
        f"{TRUST_EMOJIS[status]} {report.counts()[status.value]} {status.value}"
        for status in TrustStatus
    )
    app_logger.info(f"🤝 Trust at δ={delta:g}: {summary}")
    return report
