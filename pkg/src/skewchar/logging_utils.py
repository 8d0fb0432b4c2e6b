"""Logging utilities for the skewchar CLI and library.

Goals:
- Consistent log format across modules
- Run-scoped run_id so suite cases can be told apart
- Simple env-based log level control
"""

from __future__ import annotations

import contextvars
import logging
import os
import uuid
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

RUN_ID_CTX: contextvars.ContextVar[str] = contextvars.ContextVar("run_id", default="-")


class RunIdFilter(logging.Filter):
    """Inject run_id into every LogRecord."""

    def filter(self, record: logging.LogRecord) -> bool:  # noqa: A003 (Filter.filter)
        record.run_id = RUN_ID_CTX.get("-")
        return True


def new_run_id() -> str:
    return uuid.uuid4().hex[:8]


def _parse_log_level(level_name: Optional[str], default: int = logging.WARNING) -> int:
    if not level_name:
        return default
    name = level_name.strip().upper()
    return getattr(logging, name, default)


def _truthy(value: str) -> bool:
    return value.strip().lower() in {"1", "true", "yes", "y", "on"}


def configure_logging(level_override: Optional[str] = None) -> None:
    """Configure Python logging for skewchar.

    Records go to stderr so that stdout carries only command output.

    Controlled by env:
    - SKEWCHAR_LOG_LEVEL: DEBUG/INFO/WARNING/ERROR (default WARNING)
    - SKEWCHAR_LOG_TO_FILE: 1/true/yes to enable file logging (default false)
    - SKEWCHAR_LOG_FILE: log file path (default: ./var/logs/skewchar.log)
    - SKEWCHAR_LOG_MAX_BYTES: rotate when file exceeds this size (default 10MB)
    - SKEWCHAR_LOG_BACKUP_COUNT: number of rotated files to keep (default 5)
    """
    level = _parse_log_level(level_override or os.getenv("SKEWCHAR_LOG_LEVEL", "WARNING"))

    fmt = "%(asctime)s %(levelname)s %(name)s:%(lineno)d [run=%(run_id)s] %(message)s"
    datefmt = "%Y-%m-%d %H:%M:%S"

    root = logging.getLogger()
    formatter = logging.Formatter(fmt=fmt, datefmt=datefmt)
    run_id_filter = RunIdFilter()

    if not root.handlers:
        sh = logging.StreamHandler()
        sh.setLevel(level)
        sh.setFormatter(formatter)
        sh.addFilter(run_id_filter)
        root.addHandler(sh)
        root.setLevel(level)
    else:
        root.setLevel(level)
        for h in root.handlers:
            h.setLevel(level)
            h.setFormatter(formatter)
            if not any(isinstance(f, RunIdFilter) for f in getattr(h, "filters", [])):
                h.addFilter(run_id_filter)

    if not _truthy(os.getenv("SKEWCHAR_LOG_TO_FILE", "false")):
        return

    default_path = Path.cwd() / "var" / "logs" / "skewchar.log"
    file_path = Path(os.getenv("SKEWCHAR_LOG_FILE", str(default_path))).expanduser()
    try:
        file_path.parent.mkdir(parents=True, exist_ok=True)
    except OSError:
        logging.getLogger(__name__).exception("Failed to create log directory: %s", file_path.parent)
        return

    max_bytes = int(os.getenv("SKEWCHAR_LOG_MAX_BYTES", str(10 * 1024 * 1024)))
    backup_count = int(os.getenv("SKEWCHAR_LOG_BACKUP_COUNT", "5"))

    # Repeated configure_logging calls (tests, suite workers) must not stack handlers.
    for h in root.handlers:
        if isinstance(h, RotatingFileHandler) and Path(h.baseFilename) == file_path.resolve():
            return
    fh = RotatingFileHandler(
        filename=str(file_path),
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding="utf-8",
    )
    fh.setLevel(level)
    fh.setFormatter(formatter)
    fh.addFilter(run_id_filter)
    root.addHandler(fh)
