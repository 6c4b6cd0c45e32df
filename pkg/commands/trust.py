# ============================================================
# 📁 File: commands/trust.py
# 📍 Location: asymclust/commands/trust.py
# 📝 Description: `trust`: certain and ambiguous circles of trust
# ============================================================

import argparse

from clustering.trust import trust_bounds
from config import RunConfig
from storage import export, load_network
from utils.constants import Formats
from utils.logger import log_command
from utils.output import emit, reject


def trust_command(args: argparse.Namespace) -> int:
    log_command("trust", args.input)

    run = RunConfig(cuts=(args.delta,), formats=(args.format,))
    is_valid, errors = run.validate()
    if not is_valid:
        return reject(errors)

    report = trust_bounds(load_network(args.input), args.delta)
    emit(export(report, args.format))
    return 0


def register_trust_handlers(subparsers) -> None:
    """Register the `trust` subcommand."""
    parser = subparsers.add_parser(
        "trust",
        help="classify pairs as certain-in, certain-out or ambiguous at δ",
    )
    parser.add_argument("input", help="matrix file (.csv or .json)")
    parser.add_argument("--delta", type=float, required=True, metavar="DELTA", help="resolution")
    parser.add_argument(
        "--format",
        choices=(Formats.JSON, Formats.CSV),
        default=Formats.JSON,
        help="json report (default) or one csv row per pair",
    )
    parser.set_defaults(handler=trust_command)
