# ============================================================
# 📁 File: utils/output.py
# 📍 Location: asymclust/utils/output.py
# 📝 Description: Shared output helpers for the subcommands
# ============================================================

import sys
from pathlib import Path
from typing import Iterable, Union

from utils.constants import ExitCode
from utils.logger import error_logger


def emit(text: str) -> None:
    """Write machine-readable output to stdout."""
    sys.stdout.write(text)
    sys.stdout.flush()


def reject(errors: Iterable[str]) -> int:
    """Log every validation message and return the validation exit code."""
    for error in errors:
        error_logger.error(error)
    return ExitCode.VALIDATION


def suffixed_path(path: Union[str, Path], tag: str) -> Path:
    """
    Insert a tag before the suffix: `out.csv` → `out.reciprocal.csv`.

    Args:
        path: Requested output path
        tag: Method name or other distinguishing tag

    Returns:
        The tagged path in the same directory
    """
    path = Path(path)
    return path.with_name(f"{path.stem}.{tag}{path.suffix}")
