# ============================================================
# 📁 File: commands/compare.py
# 📍 Location: asymclust/commands/compare.py
# 📝 Description: `compare`: difference between two clusterings
# ============================================================

import argparse

from clustering.compare import compare_ultrametrics
from config import RunConfig
from storage import export, load_clustering
from utils.constants import Formats
from utils.logger import app_logger, log_command
from utils.output import emit, reject


def compare_command(args: argparse.Namespace) -> int:
    log_command("compare", f"{args.first} vs {args.second}")

    run = RunConfig(cuts=tuple(args.cut))
    is_valid, errors = run.validate()
    if not is_valid:
        return reject(errors)

    report = compare_ultrametrics(
        load_clustering(args.first),
        load_clustering(args.second),
        resolutions=run.cuts or None,
    )
    app_logger.info(f"📏 max |u1 − u2| = {report.max_abs_difference:g}")
    emit(export(report, Formats.JSON))
    return 0


def register_compare_handlers(subparsers) -> None:
    """Register the `compare` subcommand."""
    parser = subparsers.add_parser(
        "compare",
        help="compare two trees or ultrametrics over the same labels",
    )
    parser.add_argument("first", help="tree JSON or ultrametric (.csv / .json)")
    parser.add_argument("second", help="tree JSON or ultrametric (.csv / .json)")
    parser.add_argument(
        "--cut",
        type=float,
        action="append",
        default=[],
        metavar="DELTA",
        help="compare partitions only at these resolutions (repeatable)",
    )
    parser.set_defaults(handler=compare_command)
