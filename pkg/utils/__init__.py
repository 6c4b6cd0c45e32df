# ============================================================
# 📁 File: utils/__init__.py
# 📍 Location: asymclust/utils/__init__.py
# 📝 Description: Utils package exports
# ============================================================

"""
asymclust Utilities Package
Logging, shared constants and output helpers.
"""

# Logger exports
from utils.logger import (
    app_logger,
    error_logger,
    setup_logging,
    log_startup,
    log_command,
    log_method_run,
    log_ingest,
    log_verification,
    log_error_with_context,
)

# Constants exports
from utils.constants import (
    Methods,
    METHOD_NAMES,
    METHOD_ALIASES,
    BOTH_ORDER,
    Policies,
    NORMALIZATION_POLICIES,
    MissingEdges,
    MISSING_EDGE_POLICIES,
    Formats,
    OUTPUT_FORMATS,
    FORMAT_SUFFIXES,
    Suites,
    SUITE_NAMES,
    TrustStatus,
    TRUST_EMOJIS,
    ExitCode,
    format_number,
    json_number,
)

# Output exports
from utils.output import emit, reject, suffixed_path


__all__ = [
    # Logger
    "app_logger",
    "error_logger",
    "setup_logging",
    "log_startup",
    "log_command",
    "log_method_run",
    "log_ingest",
    "log_verification",
    "log_error_with_context",

    # Constants
    "Methods",
    "METHOD_NAMES",
    "METHOD_ALIASES",
    "BOTH_ORDER",
    "Policies",
    "NORMALIZATION_POLICIES",
    "MissingEdges",
    "MISSING_EDGE_POLICIES",
    "Formats",
    "OUTPUT_FORMATS",
    "FORMAT_SUFFIXES",
    "Suites",
    "SUITE_NAMES",
    "TrustStatus",
    "TRUST_EMOJIS",
    "ExitCode",
    "format_number",
    "json_number",

    # Output
    "emit",
    "reject",
    "suffixed_path",
]
