# ============================================================
# 📁 File: commands/verify.py
# 📍 Location: asymclust/commands/verify.py
# 📝 Description: `verify`: seeded axiom, oracle and property suites
# ============================================================

import argparse
import time

from clustering.suites import run_suite
from config import Config, RunConfig
from storage import export
from utils.constants import SUITE_NAMES, ExitCode, Formats, Suites
from utils.logger import app_logger, error_logger, log_command
from utils.output import emit, reject


def verify_command(args: argparse.Namespace) -> int:
    """
    Run a verification suite and print the JSON report.

    Returns:
        0 when every check passed, 2 otherwise
    """
    log_command("verify", args.suite)

    run = RunConfig(suite=args.suite, trials=args.trials, seed=args.seed)
    is_valid, errors = run.validate()
    if not is_valid:
        return reject(errors)

    started = time.perf_counter()
    reports = run_suite(run.suite, trials=run.trials, seed=run.seed)
    elapsed = time.perf_counter() - started

    failed = [report.check_name for report in reports if not report.passed]
    emit(export(
        {
            "suite": run.suite,
            "trials": run.trials,
            "seed": run.seed,
            "passed": not failed,
            "reports": reports,
        },
        Formats.JSON,
    ))

    if failed:
        error_logger.error(f"❌ {len(failed)} check(s) failed: {', '.join(failed)}")
        return ExitCode.VERIFICATION

    app_logger.info(f"✅ {len(reports)} checks passed in {elapsed:.1f}s")
    return ExitCode.OK


def register_verify_handlers(subparsers) -> None:
    """Register the `verify` subcommand."""
    parser = subparsers.add_parser(
        "verify",
        help="run seeded verification suites (exit 2 on failure)",
    )
    parser.add_argument(
        "--suite",
        choices=SUITE_NAMES + (Suites.ALL,),
        default=Suites.ALL,
        help="which suite to run (default: %(default)s)",
    )
    parser.add_argument(
        "--trials",
        type=int,
        default=Config.VERIFY_TRIALS,
        help="base trial count per check (default: %(default)s)",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=Config.VERIFY_SEED,
        help="base random seed (default: %(default)s)",
    )
    parser.set_defaults(handler=verify_command)
