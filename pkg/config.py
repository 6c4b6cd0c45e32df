# ============================================================
# 📁 File: config.py
# 📍 Location: asymclust/config.py
# 📝 Description: Environment configuration and per-run settings
# ============================================================

import math
import os
from dataclasses import dataclass
from typing import Optional, Tuple

from dotenv import load_dotenv

from utils.constants import (
    METHOD_NAMES,
    METHOD_ALIASES,
    MISSING_EDGE_POLICIES,
    NORMALIZATION_POLICIES,
    OUTPUT_FORMATS,
    SUITE_NAMES,
    Methods,
    Suites,
)

load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() == "true"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name, "")
    return int(raw) if raw.strip().lstrip("-").isdigit() else default


def _env_float(name: str, default: float) -> float:
    try:
        return float(os.getenv(name, str(default)))
    except ValueError:
        return default


class Config:
    """Central configuration for the clustering toolkit."""

    # ========================
    # 📝 Logging
    # ========================

    DEBUG: bool = _env_bool("DEBUG", "false")
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "")
    LOG_EMOJIS: bool = _env_bool("LOG_EMOJIS", "true")

    # "auto" follows the TTY check of the diagnostic stream
    LOG_COLORS: str = os.getenv("LOG_COLORS", "auto").lower()

    # ========================
    # 🧪 Verification
    # ========================

    # Largest network the brute-force chain enumerator accepts
    ORACLE_MAX_NODES: int = _env_int("ORACLE_MAX_NODES", 8)

    # Largest network drawn by the oracle-equivalence suite
    ORACLE_SUITE_MAX_NODES: int = _env_int("ORACLE_SUITE_MAX_NODES", 6)

    SANDWICH_MAX_NODES: int = _env_int("SANDWICH_MAX_NODES", 50)
    REDUCING_MAP_MAX_NODES: int = _env_int("REDUCING_MAP_MAX_NODES", 20)

    VERIFY_TRIALS: int = _env_int("VERIFY_TRIALS", 200)
    VERIFY_SEED: int = _env_int("VERIFY_SEED", 7)

    # ========================
    # 📥 Ingestion
    # ========================

    DEFAULT_POLICY: str = os.getenv("DEFAULT_POLICY", "inverse-normalized")
    DEFAULT_MISSING: str = os.getenv("DEFAULT_MISSING", "cap")

    # Missing directed pairs get this multiple of the largest finite raw value
    MISSING_EDGE_FACTOR: float = _env_float("MISSING_EDGE_FACTOR", 2.0)

    @classmethod
    def validate(cls) -> tuple[bool, list[str]]:
        """Validate configuration settings."""
        errors: list[str] = []

        if cls.ORACLE_MAX_NODES < 1:
            errors.append("❌ ORACLE_MAX_NODES must be at least 1")

        if cls.ORACLE_SUITE_MAX_NODES > cls.ORACLE_MAX_NODES:
            errors.append("❌ ORACLE_SUITE_MAX_NODES cannot exceed ORACLE_MAX_NODES")

        if cls.ORACLE_SUITE_MAX_NODES < 2:
            errors.append("❌ ORACLE_SUITE_MAX_NODES must be at least 2")

        if cls.SANDWICH_MAX_NODES < 3:
            errors.append("❌ SANDWICH_MAX_NODES must be at least 3")

        if cls.REDUCING_MAP_MAX_NODES < 2:
            errors.append("❌ REDUCING_MAP_MAX_NODES must be at least 2")

        if cls.VERIFY_TRIALS < 1:
            errors.append("❌ VERIFY_TRIALS must be positive")

        if cls.DEFAULT_POLICY not in NORMALIZATION_POLICIES:
            errors.append(f"❌ DEFAULT_POLICY must be one of {', '.join(NORMALIZATION_POLICIES)}")

        if cls.DEFAULT_MISSING not in MISSING_EDGE_POLICIES:
            errors.append(f"❌ DEFAULT_MISSING must be one of {', '.join(MISSING_EDGE_POLICIES)}")

        if not cls.MISSING_EDGE_FACTOR > 1.0:
            errors.append("❌ MISSING_EDGE_FACTOR must be greater than 1")

        if cls.LOG_COLORS not in ("auto", "true", "false"):
            errors.append("⚠️ LOG_COLORS should be auto, true or false")

        return len(errors) == 0, errors

    @classmethod
    def use_colors(cls) -> Optional[bool]:
        """Tri-state color setting for setup_logging."""
        if cls.LOG_COLORS == "auto":
            return None
        return cls.LOG_COLORS == "true"

    @classmethod
    def display_config_simple(cls) -> str:
        """Simple one-line config display for startup logs."""
        return (
            f"oracle≤{cls.ORACLE_MAX_NODES} | trials={cls.VERIFY_TRIALS} "
            f"seed={cls.VERIFY_SEED} | policy={cls.DEFAULT_POLICY}/{cls.DEFAULT_MISSING} "
            f"×{cls.MISSING_EDGE_FACTOR:g}"
        )


config = Config()


# ============================================================
# 🎛️ Per-run Settings
# ============================================================

@dataclass(frozen=True)
class RunConfig:
    """Everything one CLI invocation was asked to do."""

    methods: Tuple[str, ...] = ()
    cuts: Tuple[float, ...] = ()
    policy: str = Config.DEFAULT_POLICY
    missing: str = Config.DEFAULT_MISSING
    formats: Tuple[str, ...] = ()
    seed: int = Config.VERIFY_SEED
    trials: int = Config.VERIFY_TRIALS
    suite: str = Suites.ALL
    top_k: Optional[int] = None

    def validate(self) -> tuple[bool, list[str]]:
        """Check resolutions and enumerated choices."""
        errors: list[str] = []

        for name in self.methods:
            canonical = METHOD_ALIASES.get(name.lower(), name.lower())
            if canonical not in METHOD_NAMES and canonical != Methods.BOTH:
                errors.append(f"❌ unknown method: {name}")

        for delta in self.cuts:
            if not math.isfinite(delta):
                errors.append(f"❌ resolution must be finite: {delta}")
            elif delta < 0:
                errors.append(f"❌ resolution must be non-negative: {delta}")

        if self.policy not in NORMALIZATION_POLICIES:
            errors.append(f"❌ unknown normalization policy: {self.policy}")

        if self.missing not in MISSING_EDGE_POLICIES:
            errors.append(f"❌ unknown missing-edge policy: {self.missing}")

        for fmt in self.formats:
            if fmt not in OUTPUT_FORMATS:
                errors.append(f"❌ unknown output format: {fmt}")

        if self.trials < 1:
            errors.append("❌ trials must be positive")

        if self.seed < 0:
            errors.append("❌ seed must be non-negative")

        if self.suite not in SUITE_NAMES and self.suite != Suites.ALL:
            errors.append(f"❌ unknown suite: {self.suite}")

        if self.top_k is not None and self.top_k < 1:
            errors.append("❌ top-k must be positive")

        return len(errors) == 0, errors
