# ============================================================
# 📁 File: clustering/errors.py
# 📍 Location: asymclust/clustering/errors.py
# 📝 Description: Exception hierarchy for networks, methods and trees
# ============================================================

from typing import Any, Optional


class ClusteringError(Exception):
    """Base class for every error raised by the toolkit."""


# ============================================================
# 🕸️ Network Validation
# ============================================================

class NetworkError(ClusteringError, ValueError):
    """A dissimilarity matrix or label list breaks a Network invariant."""

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class EmptyNetworkError(NetworkError):
    def __init__(self):
        super().__init__("a network needs at least one node")


class NonSquareError(NetworkError):
    pass


class DuplicateLabelError(NetworkError):
    def __init__(self, label: str):
        super().__init__(f"duplicate label {label!r}")
        self.label = label


class EntryError(NetworkError):
    """Invalid value at matrix position (i, j)."""

    reason = "invalid entry"

    def __init__(self, i: int, j: int, value: float):
        super().__init__(f"{self.reason} at ({i}, {j}): {value!r}")
        self.i = i
        self.j = j
        self.value = value


class NonFiniteEntryError(EntryError):
    reason = "non-finite dissimilarity"


class NegativeEntryError(EntryError):
    reason = "negative dissimilarity"


class ZeroOffDiagonalError(EntryError):
    reason = "zero dissimilarity between distinct nodes"


class NonZeroDiagonalError(EntryError):
    reason = "non-zero self dissimilarity"

    def __init__(self, i: int, value: float):
        super().__init__(i, i, value)


class InvalidMatrixError(NetworkError):
    """Matrix handed to the closure does not have Network shape."""


# ============================================================
# 🌳 Methods & Trees
# ============================================================

class AsymmetricInputError(ClusteringError, ValueError):
    def __init__(self, i: int, j: int):
        super().__init__(
            f"single linkage needs symmetric dissimilarities; ({i}, {j}) differs from ({j}, {i})"
        )
        self.i = i
        self.j = j


class UnknownMethodError(ClusteringError, ValueError):
    def __init__(self, name: str):
        super().__init__(f"unknown clustering method {name!r}")
        self.name = name


class NotUltrametricError(ClusteringError, ValueError):
    def __init__(self, counterexample: Optional[dict]):
        super().__init__(f"matrix is not an ultrametric: {counterexample}")
        self.counterexample = counterexample


class InvalidDendrogramError(ClusteringError, ValueError):
    def __init__(self, report: Any):
        super().__init__(f"invalid dendrogram: {getattr(report, 'counterexample', report)}")
        self.report = report


class LabelMismatchError(ClusteringError, ValueError):
    pass


# ============================================================
# 🧪 Oracle
# ============================================================

class TooLargeError(ClusteringError, ValueError):
    def __init__(self, n: int, bound: int):
        super().__init__(f"brute-force enumeration limited to {bound} nodes, got {n}")
        self.n = n
        self.bound = bound


class InvalidNodeMapError(ClusteringError, ValueError):
    pass


# ============================================================
# 📂 Ingestion & Export
# ============================================================

class ParseError(ClusteringError, ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def __str__(self) -> str:
        if self.line is not None:
            return f"line {self.line}: {self.message}"
        return self.message


class EmptyEdgeListError(ClusteringError, ValueError):
    def __init__(self):
        super().__init__("edge list has no records between distinct nodes")


class UnsupportedFormatError(ClusteringError, ValueError):
    def __init__(self, fmt: str, kind: str):
        super().__init__(f"format {fmt!r} is not supported for {kind}")
        self.fmt = fmt
        self.kind = kind
