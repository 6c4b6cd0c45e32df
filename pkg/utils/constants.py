# ============================================================
# 📁 File: utils/constants.py
# 📍 Location: asymclust/utils/constants.py
# 📝 Description: Method names, policies, formats and exit codes
# ============================================================

"""
Shared vocabulary for the library and the command line.
Every enumerated choice the CLI accepts is declared here once.
"""

import math
import re
from enum import Enum
from typing import Dict, Tuple


# ============================================================
# 🌳 Clustering Methods
# ============================================================

class Methods:
    """Canonical method identifiers."""

    RECIPROCAL = "reciprocal"
    NONRECIPROCAL = "nonreciprocal"
    SINGLE_LINKAGE = "single_linkage"

    # CLI-only pseudo method: nonreciprocal then reciprocal
    BOTH = "both"


METHOD_NAMES: Tuple[str, ...] = (
    Methods.RECIPROCAL,
    Methods.NONRECIPROCAL,
    Methods.SINGLE_LINKAGE,
)

METHOD_ALIASES: Dict[str, str] = {
    "single-linkage": Methods.SINGLE_LINKAGE,
    "single": Methods.SINGLE_LINKAGE,
    "r": Methods.RECIPROCAL,
    "nr": Methods.NONRECIPROCAL,
}

# Lower bound first in every combined output
BOTH_ORDER: Tuple[str, ...] = (Methods.NONRECIPROCAL, Methods.RECIPROCAL)


# ============================================================
# 📥 Ingestion Policies
# ============================================================

class Policies:
    """Normalisation policies for message-count ingestion."""

    INVERSE_NORMALIZED = "inverse-normalized"
    INVERSE = "inverse"


NORMALIZATION_POLICIES: Tuple[str, ...] = (
    Policies.INVERSE_NORMALIZED,
    Policies.INVERSE,
)


class MissingEdges:
    """How directed pairs without any message are handled."""

    CAP = "cap"
    SCC = "scc"


MISSING_EDGE_POLICIES: Tuple[str, ...] = (MissingEdges.CAP, MissingEdges.SCC)


# ============================================================
# 📤 Output Formats
# ============================================================

class Formats:
    """Serialisation formats understood by storage.export."""

    CSV = "csv"
    JSON = "json"
    NEWICK = "newick"


OUTPUT_FORMATS: Tuple[str, ...] = (Formats.CSV, Formats.JSON, Formats.NEWICK)

FORMAT_SUFFIXES: Dict[str, str] = {
    ".csv": Formats.CSV,
    ".json": Formats.JSON,
    ".nwk": Formats.NEWICK,
    ".newick": Formats.NEWICK,
    ".tree": Formats.NEWICK,
}

# Characters that force a Newick label into single quotes
NEWICK_UNSAFE = re.compile(r"""[\[\]'"(),:;\s]""")


# ============================================================
# 🧪 Verification Suites
# ============================================================

class Suites:
    """Names accepted by `verify --suite`."""

    AXIOMS = "axioms"
    ORACLE = "oracle"
    SANDWICH = "sandwich"
    DENDROGRAM = "dendrogram"
    SYMMETRIC = "symmetric"
    ALL = "all"


SUITE_NAMES: Tuple[str, ...] = (
    Suites.AXIOMS,
    Suites.ORACLE,
    Suites.SANDWICH,
    Suites.DENDROGRAM,
    Suites.SYMMETRIC,
)


# ============================================================
# 🤝 Trust Classification
# ============================================================

class TrustStatus(str, Enum):
    """Where a pair sits relative to the two extremal cuts."""

    CERTAIN_IN = "certain-in"
    CERTAIN_OUT = "certain-out"
    AMBIGUOUS = "ambiguous"


TRUST_EMOJIS: Dict[TrustStatus, str] = {
    TrustStatus.CERTAIN_IN: "🤝",
    TrustStatus.CERTAIN_OUT: "🚫",
    TrustStatus.AMBIGUOUS: "❔",
}


# ============================================================
# 🚦 Exit Codes
# ============================================================

class ExitCode:
    """Process exit statuses of the CLI."""

    OK = 0
    VALIDATION = 1
    VERIFICATION = 2


# ============================================================
# 🎯 Helper Functions
# ============================================================

def format_number(value: float) -> str:
    """Shortest round-trip decimal; integral values lose the trailing `.0`."""
    value = float(value)
    if math.isfinite(value) and value.is_integer() and abs(value) < 2 ** 53:
        return str(int(value))
    return repr(value)


def json_number(value: float):
    """JSON-ready number matching format_number."""
    value = float(value)
    if math.isfinite(value) and value.is_integer() and abs(value) < 2 ** 53:
        return int(value)
    return value
