# ============================================================
# 📁 File: commands/ingest.py
# 📍 Location: asymclust/commands/ingest.py
# 📝 Description: `ingest`: message counts → dissimilarity matrix
# ============================================================

import argparse

from clustering.ingest import counts_to_dissimilarity, top_k_edges
from config import Config, RunConfig
from storage import export, format_for_path, load_edge_list, write_export
from utils.constants import MISSING_EDGE_POLICIES, NORMALIZATION_POLICIES, Formats
from utils.logger import app_logger, log_command
from utils.output import emit, reject


def ingest_command(args: argparse.Namespace) -> int:
    """Convert an edge list and print (or write) the resulting matrix."""
    log_command("ingest", args.input)

    fmt = args.format or (format_for_path(args.output) if args.output else Formats.JSON)
    run = RunConfig(
        policy=args.policy,
        missing=args.missing,
        formats=(fmt,),
        top_k=args.top_k,
    )
    _, errors = run.validate()
    if fmt == Formats.NEWICK:
        errors.append("❌ a network cannot be written as Newick")
    if errors:
        return reject(errors)

    edges = load_edge_list(args.input)
    if run.top_k is not None:
        edges = top_k_edges(edges, run.top_k)
        app_logger.info(f"✂️ Kept the {run.top_k} most active nodes")

    net = counts_to_dissimilarity(edges, policy=run.policy, missing=run.missing)

    if args.output:
        write_export(net, args.output, fmt)
    else:
        emit(export(net, fmt))
    return 0


# ============================================================
# 📦 Handler Registration
# ============================================================

def register_ingest_handlers(subparsers) -> None:
    """Register the `ingest` subcommand."""
    parser = subparsers.add_parser(
        "ingest",
        help="turn a source,target,count edge list into a network",
        description="Build dissimilarities inversely proportional to message counts.",
    )
    parser.add_argument("input", help="edge-list CSV with header source,target,count")
    parser.add_argument(
        "--policy",
        choices=NORMALIZATION_POLICIES,
        default=Config.DEFAULT_POLICY,
        help="normalisation policy (default: %(default)s)",
    )
    parser.add_argument(
        "--missing",
        choices=MISSING_EDGE_POLICIES,
        default=Config.DEFAULT_MISSING,
        help="missing directed pairs: cap them, or keep the largest strongly connected component",
    )
    parser.add_argument("--top-k", type=int, metavar="K", help="keep only the K most active nodes")
    parser.add_argument("--output", metavar="PATH", help="write the matrix here instead of stdout")
    parser.add_argument(
        "--format",
        choices=(Formats.CSV, Formats.JSON),
        help="output format (default: from --output suffix, else json)",
    )
    parser.set_defaults(handler=ingest_command)
