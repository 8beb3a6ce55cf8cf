"""Logging configuration: console logger plus a structured JSON event logger."""

import json
import logging
import os
import sys
import time
from logging.handlers import RotatingFileHandler
from typing import Any, Optional

from app.core.config import settings


def setup_logging(level: Optional[str] = None) -> logging.Logger:
    """
    Configure and return the application logger.

    Logs go to stderr so that reports written to stdout stay machine-readable.
    When BOHRNET_LOG_DIR is set, logs also go to a rotating file.
    """
    log_level = level or settings.log_level

    formatter = logging.Formatter(
        fmt="%(asctime)s | %(levelname)-8s | %(name)s:%(lineno)d | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )

    logger = logging.getLogger("bohrnet")
    logger.setLevel(log_level.upper())

    # Re-running setup (CLI --log-level) must not stack handlers
    if not logger.handlers:
        stderr_handler = logging.StreamHandler(sys.stderr)
        stderr_handler.setFormatter(formatter)
        logger.addHandler(stderr_handler)

        if settings.log_dir:
            try:
                os.makedirs(settings.log_dir, exist_ok=True)
                file_handler = RotatingFileHandler(
                    filename=os.path.join(settings.log_dir, "bohrnet.log"),
                    maxBytes=10 * 1024 * 1024,  # 10MB
                    backupCount=5,
                )
                file_handler.setFormatter(formatter)
                logger.addHandler(file_handler)
            except (OSError, PermissionError) as e:
                logger.warning(f"Could not create file logger: {e}. Using stderr only.")

    logger.propagate = False

    # Modules log under their import path (app.*); give them the same handlers
    modules = logging.getLogger("app")
    modules.setLevel(log_level.upper())
    if not modules.handlers:
        for handler in logger.handlers:
            modules.addHandler(handler)
    modules.propagate = False

    return logger


class StructuredLogger(logging.Logger):
    """Logger that outputs one JSON object per event."""

    def _log_json(self, level: int, message: str, **extra: Any) -> None:
        log_entry = {
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z", time.localtime()),
            "level": logging.getLevelName(level),
            "message": message,
            **extra,
        }
        if self.isEnabledFor(level):
            self.log(level, json.dumps(log_entry, sort_keys=True, default=str))

    def info_json(self, message: str, **extra: Any) -> None:
        """Log INFO level JSON."""
        self._log_json(logging.INFO, message, **extra)

    def debug_json(self, message: str, **extra: Any) -> None:
        """Log DEBUG level JSON."""
        self._log_json(logging.DEBUG, message, **extra)

    def error_json(self, message: str, **extra: Any) -> None:
        """Log ERROR level JSON."""
        self._log_json(logging.ERROR, message, **extra)


def get_structured_logger(name: str = "bohrnet.events") -> StructuredLogger:
    """Create and configure a structured JSON logger."""
    previous = logging.getLoggerClass()
    logging.setLoggerClass(StructuredLogger)
    try:
        structured = logging.getLogger(name)
    finally:
        logging.setLoggerClass(previous)

    if not structured.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(message)s"))
        structured.addHandler(handler)
        # level inherited from the "bohrnet" logger
        structured.propagate = False

    return structured  # type: ignore


logger = setup_logging()
