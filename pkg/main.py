# ============================================================
# 📁 File: main.py
# 📍 Location: asymclust/main.py
# 📝 Description: Command-line entry point
# ============================================================

"""
asymclust command line.

    python main.py cluster network.json --method both --cut 2.5
    python main.py ingest messages.csv --output network.csv
    python main.py trust network.csv --delta 0.75
    python main.py verify --suite all --trials 200 --seed 7
    python main.py compare a.json b.json

Exit codes: 0 success, 1 invalid input or usage, 2 verification failure.
"""

import argparse
import sys
from typing import List, NoReturn, Optional

from clustering.errors import ClusteringError
from commands import register_all_command_handlers
from config import Config
from utils.constants import ExitCode
from utils.logger import (
    app_logger,
    error_logger,
    log_error_with_context,
    log_startup,
    setup_logging,
)


# ============================================================
# 🧰 Argument Parser
# ============================================================

class CliParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit 1; exit 2 belongs to `verify`."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.VALIDATION, f"{self.prog}: error: {message}\n")


def build_parser() -> CliParser:
    parser = CliParser(
        prog="asymclust",
        description="Hierarchical clustering of asymmetric networks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="warnings and errors only")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_all_command_handlers(subparsers)
    return parser


def _log_level(args: argparse.Namespace) -> Optional[str]:
    if args.verbose:
        return "DEBUG"
    if args.quiet:
        return "WARNING"
    return Config.LOG_LEVEL or None


# ============================================================
# 🚀 Entry Point
# ============================================================

def cli_main(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv, run one subcommand and return its exit status.

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        0, 1 or 2
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else ExitCode.VALIDATION

    setup_logging(
        debug=Config.DEBUG,
        use_colors=Config.use_colors(),
        use_emojis=Config.LOG_EMOJIS,
        level=_log_level(args),
    )
    log_startup(f"asymclust {args.command} | {Config.display_config_simple()}")

    is_valid, errors = Config.validate()
    if not is_valid:
        for error in errors:
            error_logger.error(error)
        return ExitCode.VALIDATION

    try:
        return args.handler(args)
    except (ClusteringError, ValueError) as e:
        log_error_with_context(
            e,
            f"{args.command} failed",
            path=getattr(args, "input", None),
            show_traceback=Config.DEBUG,
        )
        return ExitCode.VALIDATION
    except OSError as e:
        log_error_with_context(e, f"{args.command} could not access a file", path=e.filename)
        return ExitCode.VALIDATION
    except KeyboardInterrupt:
        app_logger.warning("⏹️ Interrupted")
        return ExitCode.VALIDATION


if __name__ == "__main__":
    sys.exit(cli_main())
