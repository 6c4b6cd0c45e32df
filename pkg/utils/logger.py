# ============================================================
# 📁 File: utils/logger.py
# 📍 Location: asymclust/utils/logger.py
# 📝 Description: Colored diagnostic logging with emoji support
# ============================================================

import logging
import sys
from datetime import datetime
from typing import Optional, TextIO


class ColorCodes:
    """ANSI color codes for terminal output."""

    RESET = "\033[0m"

    RED = "\033[31m"
    CYAN = "\033[36m"
    WHITE = "\033[37m"

    BRIGHT_BLACK = "\033[90m"
    BRIGHT_RED = "\033[91m"
    BRIGHT_GREEN = "\033[92m"
    BRIGHT_YELLOW = "\033[93m"

    BOLD = "\033[1m"
    DIM = "\033[2m"


class EmojiFormatter(logging.Formatter):
    """
    Formatter that adds colors and emojis to log messages.
    Keeps the diagnostic stream readable during long verification runs.
    """

    LEVEL_FORMATS = {
        logging.DEBUG: {
            "emoji": "🔍",
            "color": ColorCodes.BRIGHT_BLACK,
            "label": "DEBUG"
        },
        logging.INFO: {
            "emoji": "📗",
            "color": ColorCodes.BRIGHT_GREEN,
            "label": "INFO"
        },
        logging.WARNING: {
            "emoji": "⚠️",
            "color": ColorCodes.BRIGHT_YELLOW,
            "label": "WARN"
        },
        logging.ERROR: {
            "emoji": "❌",
            "color": ColorCodes.BRIGHT_RED,
            "label": "ERROR"
        },
        logging.CRITICAL: {
            "emoji": "🔥",
            "color": ColorCodes.RED + ColorCodes.BOLD,
            "label": "CRITICAL"
        }
    }

    def __init__(self, use_colors: bool = True, use_emojis: bool = True):
        """
        Initialize the formatter.

        Args:
            use_colors: Enable ANSI color codes
            use_emojis: Enable emoji prefixes
        """
        super().__init__()
        self.use_colors = use_colors
        self.use_emojis = use_emojis

    def _paint(self, text: str, color: str) -> str:
        if not self.use_colors:
            return text
        return f"{color}{text}{ColorCodes.RESET}"

    def format(self, record: logging.LogRecord) -> str:
        """
        Format the log record with colors and emojis.

        Args:
            record: The log record to format

        Returns:
            Formatted log string
        """
        level_fmt = self.LEVEL_FORMATS.get(record.levelno, {
            "emoji": "📝",
            "color": ColorCodes.WHITE,
            "label": "LOG"
        })

        timestamp = datetime.fromtimestamp(record.created).strftime("%Y-%m-%d %H:%M:%S")

        parts = [self._paint(timestamp, ColorCodes.DIM)]
        if self.use_emojis:
            parts.append(level_fmt["emoji"])
        parts.append(self._paint(f"[{level_fmt['label']:^8}]", level_fmt["color"]))
        parts.append(self._paint(record.name, ColorCodes.CYAN))
        parts.append("→")
        parts.append(self._paint(record.getMessage(), level_fmt["color"]))

        formatted = " ".join(parts)

        if record.exc_info:
            formatted += "\n" + self._paint(
                self.formatException(record.exc_info), ColorCodes.BRIGHT_RED
            )

        return formatted


class LoggerFactory:
    """Factory class for creating configured loggers."""

    _loggers: dict[str, logging.Logger] = {}
    _handler: Optional[logging.Handler] = None

    @classmethod
    def setup(
        cls,
        level: int = logging.INFO,
        use_colors: Optional[bool] = None,
        use_emojis: bool = True,
        stream: Optional[TextIO] = None,
    ) -> None:
        """
        Install the emoji handler on the package loggers.

        Diagnostics always go to stderr; stdout carries machine-readable
        output only. Calling setup again replaces the previous handler.

        Args:
            level: Minimum logging level
            use_colors: Enable colored output (default: only on a TTY)
            use_emojis: Enable emoji prefixes
            stream: Target stream, stderr when omitted
        """
        stream = stream if stream is not None else sys.stderr
        if use_colors is None:
            use_colors = hasattr(stream, "isatty") and stream.isatty()

        handler = logging.StreamHandler(stream)
        handler.setFormatter(EmojiFormatter(use_colors=use_colors, use_emojis=use_emojis))

        for logger in (app_logger, error_logger):
            if cls._handler is not None:
                logger.removeHandler(cls._handler)
            logger.addHandler(handler)
            logger.setLevel(level)
            logger.propagate = False

        cls._handler = handler

    @classmethod
    def reset(cls) -> None:
        """Detach the installed handler; the loggers go back to silent."""
        if cls._handler is None:
            return
        for logger in (app_logger, error_logger):
            logger.removeHandler(cls._handler)
        cls._handler = None

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Get or create a logger with the given name.

        Args:
            name: Logger name

        Returns:
            Logger instance
        """
        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(name)
        return cls._loggers[name]


# ============================================================
# 📦 Pre-configured Logger Instances
# ============================================================

def setup_logging(
    debug: bool = False,
    use_colors: Optional[bool] = None,
    use_emojis: bool = True,
    level: Optional[str] = None,
) -> None:
    """
    Initialize the logging system.

    Args:
        debug: Enable debug level logging
        use_colors: Force colors on or off (auto-detect when None)
        use_emojis: Enable emoji prefixes
        level: Explicit level name, overrides debug
    """
    if level:
        resolved = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            resolved = logging.INFO
    else:
        resolved = logging.DEBUG if debug else logging.INFO
    LoggerFactory.setup(level=resolved, use_colors=use_colors, use_emojis=use_emojis)


# Library logger; silent until setup_logging installs a handler
app_logger = LoggerFactory.get_logger("🌳 asymclust")

error_logger = LoggerFactory.get_logger("🚨 Error")

app_logger.addHandler(logging.NullHandler())
error_logger.addHandler(logging.NullHandler())


# ============================================================
# 📊 Specialized Logging Functions
# ============================================================

def log_startup(message: str) -> None:
    """Log startup-related messages with special formatting."""
    app_logger.debug(f"🚀 {message}")


def log_command(command: str, target: Optional[str] = None) -> None:
    """
    Log a CLI subcommand execution.

    Args:
        command: Subcommand name
        target: Input path or suite the command works on
    """
    suffix = f" on {target}" if target else ""
    app_logger.info(f"📨 Command {command}{suffix}")


def log_method_run(method: str, n: int, seconds: float) -> None:
    """
    Log a finished clustering run.

    Args:
        method: Canonical method name
        n: Number of nodes
        seconds: Wall-clock duration
    """
    app_logger.info(f"🌳 {method} on {n} nodes in {seconds:.3f}s")


def log_ingest(records: int, nodes: int, policy: str, missing: str) -> None:
    """Log a message-count ingestion."""
    app_logger.info(
        f"📥 Ingested {records} edge records → {nodes} nodes "
        f"(policy={policy}, missing={missing})"
    )


def log_verification(check_name: str, passed: bool, trials: int) -> None:
    """Log the outcome of one verification check."""
    if passed:
        app_logger.info(f"✅ {check_name}: {trials} trials passed")
    else:
        error_logger.error(f"❌ {check_name}: failed after {trials} trials")


def log_error_with_context(
    error: Exception,
    context: str,
    path: Optional[str] = None,
    show_traceback: bool = False,
) -> None:
    """
    Log an error with additional context.

    Args:
        error: The exception that occurred
        context: Description of what was happening
        path: Related input file (optional)
        show_traceback: Attach the traceback (debug runs)
    """
    context_parts = [f"Context: {context}"]
    if path:
        location = path
        line = getattr(error, "line", None)
        if line is not None:
            location = f"{path}:{line}"
        context_parts.append(f"File: {location}")

    error_logger.error(
        f"{' | '.join(context_parts)} | Error: {type(error).__name__}: {error}",
        exc_info=show_traceback,
    )
