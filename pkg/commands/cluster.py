# ============================================================
# 📁 File: commands/cluster.py
# 📍 Location: asymclust/commands/cluster.py
# 📝 Description: `cluster`: run methods, export trees and cuts
# ============================================================

import argparse

from clustering.dendrogram import cut, to_newick, ultrametric_to_dendrogram
from clustering.methods import asymmetry_gap, canonical_method, run_method
from config import RunConfig
from storage import export, format_for_path, load_network, write_export
from utils.constants import BOTH_ORDER, Formats, Methods
from utils.logger import app_logger, log_command
from utils.output import emit, reject, suffixed_path


# ============================================================
# 📊 Constants
# ============================================================

METHOD_CHOICES = ("reciprocal", "nonreciprocal", "single-linkage", Methods.BOTH)


def resolve_methods(name: str) -> tuple:
    """`both` expands to nonreciprocal then reciprocal."""
    if name == Methods.BOTH:
        return BOTH_ORDER
    return (canonical_method(name),)


def _output_path(path: str, method: str, several: bool):
    return suffixed_path(path, method) if several else path


# ============================================================
# 🌳 Cluster Command
# ============================================================

def cluster_command(args: argparse.Namespace) -> int:
    """
    Cluster one network with the requested method(s).

    Stdout receives one JSON document with, per method, the ultrametric,
    the merge events, the Newick string and every requested cut.
    """
    log_command("cluster", args.input)

    run = RunConfig(methods=(args.method,), cuts=tuple(args.cut))
    is_valid, errors = run.validate()
    if not is_valid:
        return reject(errors)

    net = load_network(args.input)
    methods = resolve_methods(args.method)
    several = len(methods) > 1

    results = []
    for method in methods:
        u = run_method(method, net)
        tree = ultrametric_to_dendrogram(u)

        if args.output_ultrametric:
            path = _output_path(args.output_ultrametric, method, several)
            write_export(u, path, format_for_path(path))
        if args.output_tree:
            path = _output_path(args.output_tree, method, several)
            write_export(tree, path, format_for_path(path))

        results.append({
            "method": method,
            "ultrametric": u,
            "tree": tree,
            "newick": to_newick(tree),
            "cuts": [cut(tree, delta) for delta in sorted(set(run.cuts))],
        })
        app_logger.info(f"🌲 {method}: {len(tree.events)} merge events")

    document = {"input": str(args.input), "labels": list(net.labels), "results": results}
    if set(methods) == set(BOTH_ORDER):
        document["asymmetry_gap"] = asymmetry_gap(net)

    emit(export(document, Formats.JSON))
    return 0


# ============================================================
# 📦 Handler Registration
# ============================================================

def register_cluster_handlers(subparsers) -> None:
    """Register the `cluster` subcommand."""
    parser = subparsers.add_parser(
        "cluster",
        help="cluster a dissimilarity network",
        description="Compute reciprocal / nonreciprocal / single-linkage ultrametrics.",
    )
    parser.add_argument("input", help="matrix file (.csv or .json)")
    parser.add_argument(
        "--method",
        choices=METHOD_CHOICES,
        default=Methods.BOTH,
        help="clustering method; both = nonreciprocal then reciprocal (default)",
    )
    parser.add_argument(
        "--output-ultrametric",
        metavar="PATH",
        help="write the ultrametric (.csv or .json); tagged per method with --method both",
    )
    parser.add_argument(
        "--output-tree",
        metavar="PATH",
        help="write the dendrogram (.json, .csv or .nwk); tagged per method with --method both",
    )
    parser.add_argument(
        "--cut",
        type=float,
        action="append",
        default=[],
        metavar="DELTA",
        help="report the partition at this resolution (repeatable)",
    )
    parser.set_defaults(handler=cluster_command)
