"""
Runtime configuration.

Settings come from environment variables, optionally read from a .env file
in the working directory. Every tolerance-taking operation falls back to
these values when it is called with tol=None.
"""

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, TypeVar

from dotenv import load_dotenv

from .exceptions import ConfigurationError

T = TypeVar("T")

DEFAULT_DATA_DIR = Path(__file__).resolve().parent.parent / "data"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _env(name: str, default: T, cast: Callable[[str], T]) -> T:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return cast(raw.strip())
    except ValueError as e:
        raise ConfigurationError(f"Invalid value for {name}: {raw!r} ({e})") from e


@dataclass(frozen=True)
class Settings:
    """Tolerances, limits and paths used across the package."""

    eigen_tol: float = 1e-12
    eigen_offdiag_rtol: float = 1e-13
    eigen_max_sweeps: int = 100
    match_tol: float = 1e-6
    table_tol: float = 2e-4
    permanent_max_n: int = 30
    probe_cap: int = 10_000
    probe_limit: int = 200
    data_dir: Path = DEFAULT_DATA_DIR
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build settings from the process environment.

        Returns:
            Settings with every unset variable left at its default
        """
        load_dotenv()
        settings = cls(
            eigen_tol=_env("RANDIC_EIGEN_TOL", cls.eigen_tol, float),
            eigen_offdiag_rtol=_env("RANDIC_EIGEN_OFFDIAG_RTOL", cls.eigen_offdiag_rtol, float),
            eigen_max_sweeps=_env("RANDIC_EIGEN_MAX_SWEEPS", cls.eigen_max_sweeps, int),
            match_tol=_env("RANDIC_MATCH_TOL", cls.match_tol, float),
            table_tol=_env("RANDIC_TABLE_TOL", cls.table_tol, float),
            permanent_max_n=_env("RANDIC_PERMANENT_MAX_N", cls.permanent_max_n, int),
            probe_cap=_env("RANDIC_PROBE_CAP", cls.probe_cap, int),
            probe_limit=_env("RANDIC_PROBE_LIMIT", cls.probe_limit, int),
            data_dir=_env("RANDIC_DATA_DIR", DEFAULT_DATA_DIR, Path),
            log_level=_env("RANDIC_LOG_LEVEL", cls.log_level, str).upper(),
        )
        if settings.eigen_tol <= 0 or settings.match_tol <= 0 or settings.table_tol <= 0:
            raise ConfigurationError("Tolerances must be positive")
        if settings.eigen_max_sweeps < 1 or settings.probe_cap < 2 or settings.probe_limit < 1:
            raise ConfigurationError("Sweep cap, probe cap and probe limit must be positive")
        return settings


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings, read once from the environment."""
    return Settings.from_env()


def configure_logging(level: Optional[str] = None) -> None:
    """
    Install a single stream handler on the package logger.

    Args:
        level: Logging level name. If None, uses RANDIC_LOG_LEVEL.
    """
    level_name = (level or get_settings().log_level).upper()
    package_logger = logging.getLogger("src")
    if not package_logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        package_logger.addHandler(handler)
    package_logger.setLevel(getattr(logging, level_name, logging.WARNING))
