# ============================================================
# 📁 File: clustering/__init__.py
# 📍 Location: asymclust/clustering/__init__.py
# 📝 Description: Clustering library exports
# ============================================================

"""
Hierarchical clustering of asymmetric networks.
Pure functions over immutable values; nothing here touches files.
"""

# Errors
from clustering.errors import (
    ClusteringError,
    NetworkError,
    EntryError,
    EmptyNetworkError,
    NonSquareError,
    DuplicateLabelError,
    NonFiniteEntryError,
    NegativeEntryError,
    ZeroOffDiagonalError,
    NonZeroDiagonalError,
    InvalidMatrixError,
    AsymmetricInputError,
    UnknownMethodError,
    NotUltrametricError,
    InvalidDendrogramError,
    LabelMismatchError,
    TooLargeError,
    InvalidNodeMapError,
    ParseError,
    EmptyEdgeListError,
    UnsupportedFormatError,
)

# Networks and the closure
from clustering.network import (
    Network,
    new_network,
    validate_matrix,
    symmetrize_max,
    is_symmetric,
)
from clustering.closure import (
    MinimaxMatrix,
    minimax_closure,
    pointwise_max_transpose,
    is_closed,
)

# Methods
from clustering.methods import (
    UltrametricMatrix,
    METHODS,
    reciprocal,
    nonreciprocal,
    single_linkage,
    canonical_method,
    run_method,
    ultrametric_as_network,
    asymmetry_gap,
)

# Verification
from clustering.oracle import (
    VerificationReport,
    NodeMap,
    check_ultrametric,
    brute_force_directed_cost,
    brute_force_method,
    two_node_network,
    check_axiom_value,
    new_node_map,
    generate_reducing_map,
    check_axiom_transformation,
    check_sandwich,
    random_network,
)

# Dendrograms
from clustering.dendrogram import (
    MergeEvent,
    Dendrogram,
    Partition,
    ultrametric_to_dendrogram,
    validate_dendrogram,
    dendrogram_to_ultrametric,
    cut,
    to_newick,
    dendrogram_from_dict,
)

# Message networks, trust and comparison
from clustering.ingest import (
    EdgeList,
    new_edge_list,
    representable_count,
    top_k_edges,
    largest_strongly_connected,
    counts_to_dissimilarity,
)
from clustering.trust import PairTrust, TrustReport, trust_bounds
from clustering.compare import ResolutionAgreement, ComparisonReport, compare_ultrametrics
from clustering.suites import SUITES, run_suite


# ============================================================
# 📦 All Exports
# ============================================================

__all__ = [
    # Errors
    "ClusteringError",
    "NetworkError",
    "EntryError",
    "EmptyNetworkError",
    "NonSquareError",
    "DuplicateLabelError",
    "NonFiniteEntryError",
    "NegativeEntryError",
    "ZeroOffDiagonalError",
    "NonZeroDiagonalError",
    "InvalidMatrixError",
    "AsymmetricInputError",
    "UnknownMethodError",
    "NotUltrametricError",
    "InvalidDendrogramError",
    "LabelMismatchError",
    "TooLargeError",
    "InvalidNodeMapError",
    "ParseError",
    "EmptyEdgeListError",
    "UnsupportedFormatError",

    # Networks
    "Network",
    "new_network",
    "validate_matrix",
    "symmetrize_max",
    "is_symmetric",
    "MinimaxMatrix",
    "minimax_closure",
    "pointwise_max_transpose",
    "is_closed",

    # Methods
    "UltrametricMatrix",
    "METHODS",
    "reciprocal",
    "nonreciprocal",
    "single_linkage",
    "canonical_method",
    "run_method",
    "ultrametric_as_network",
    "asymmetry_gap",

    # Verification
    "VerificationReport",
    "NodeMap",
    "check_ultrametric",
    "brute_force_directed_cost",
    "brute_force_method",
    "two_node_network",
    "check_axiom_value",
    "new_node_map",
    "generate_reducing_map",
    "check_axiom_transformation",
    "check_sandwich",
    "random_network",
    "SUITES",
    "run_suite",

    # Dendrograms
    "MergeEvent",
    "Dendrogram",
    "Partition",
    "ultrametric_to_dendrogram",
    "validate_dendrogram",
    "dendrogram_to_ultrametric",
    "cut",
    "to_newick",
    "dendrogram_from_dict",

    # Ingestion, trust, comparison
    "EdgeList",
    "new_edge_list",
    "representable_count",
    "top_k_edges",
    "largest_strongly_connected",
    "counts_to_dissimilarity",
    "PairTrust",
    "TrustReport",
    "trust_bounds",
    "ResolutionAgreement",
    "ComparisonReport",
    "compare_ultrametrics",
]
