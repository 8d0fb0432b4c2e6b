"""Environment-driven settings.

Values come from the process environment, optionally seeded from a ``.env``
file in the working directory.
"""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from skewchar.exceptions import ConfigError, SizeCapExceeded

logger = logging.getLogger(__name__)

_dotenv_loaded = False


def _env_int(name: str, default: int, *, minimum: int = 0) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    jobs: int = 1
    max_boxes: int = 40
    max_rank: int = 6
    max_fusion_length: int = 6
    max_order: int = 12

    def with_jobs(self, jobs: Optional[int]) -> "Settings":
        if jobs is None:
            return self
        if jobs < 1:
            raise ConfigError(f"--jobs must be >= 1, got {jobs}")
        return replace(self, jobs=jobs)

    def check_caps(
        self,
        *,
        boxes: Optional[int] = None,
        rank: Optional[int] = None,
        fusion_length: Optional[int] = None,
        order: Optional[int] = None,
        force: bool = False,
    ) -> None:
        """Raise SizeCapExceeded when a request is over a cap, unless forced."""
        violations = []
        if boxes is not None and boxes > self.max_boxes:
            violations.append(f"diagram has {boxes} boxes (cap {self.max_boxes})")
        if rank is not None and rank > self.max_rank:
            violations.append(f"m+n={rank} (cap {self.max_rank})")
        if fusion_length is not None and fusion_length > self.max_fusion_length:
            violations.append(f"tensor length {fusion_length} (cap {self.max_fusion_length})")
        if order is not None and order > self.max_order:
            violations.append(f"operator order {order} (cap {self.max_order})")
        if not violations:
            return
        message = "; ".join(violations)
        if force:
            logger.warning("size cap overridden by --force: %s", message)
            return
        raise SizeCapExceeded(f"{message}; pass --force to run anyway")


def load_settings() -> Settings:
    """Read settings from the environment (and ``.env`` on first call).

    Controlled by env:
    - SKEWCHAR_JOBS: worker processes for batch work (default 1)
    - SKEWCHAR_MAX_BOXES: diagram size cap (default 40)
    - SKEWCHAR_MAX_RANK: cap on m+n (default 6)
    - SKEWCHAR_MAX_FUSION_LENGTH: cap on tensor length for fusion (default 6)
    - SKEWCHAR_MAX_ORDER: cap on operator truncation order (default 12)
    """
    global _dotenv_loaded
    if not _dotenv_loaded:
        load_dotenv()
        _dotenv_loaded = True
    return Settings(
        jobs=_env_int("SKEWCHAR_JOBS", 1, minimum=1),
        max_boxes=_env_int("SKEWCHAR_MAX_BOXES", 40),
        max_rank=_env_int("SKEWCHAR_MAX_RANK", 6),
        max_fusion_length=_env_int("SKEWCHAR_MAX_FUSION_LENGTH", 6),
        max_order=_env_int("SKEWCHAR_MAX_ORDER", 12),
    )
