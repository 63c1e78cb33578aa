"""Configuration, constants, and logging setup for the CLI."""

import logging
import os
from dataclasses import dataclass
from enum import IntEnum

import dotenv
from rich.console import Console
from rich.logging import RichHandler

dotenv.load_dotenv()

# Color scheme
COLORS = {
    "primary": "#10b981",
    "dim": "#6b7280",
    "pass": "#10b981",
    "fail": "#ef4444",
    "warn": "#fbbf24",
}

# Numerical defaults
DEFAULT_DENSE_CAP = 2**14
DEFAULT_AUTO_DENSE_LIMIT = 4096
DEFAULT_SYMMETRY_TOL = 1e-10
DEFAULT_SCALAR_EPS = 1e-12
SMALL_GAMMA = 1e-8
# cosh(γ)² must stay inside double range
MAX_ABS_GAMMA = 300.0

# Rich console instances
console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)

_PACKAGE_LOGGER = "asymmetry_cli"


class ExitCode(IntEnum):
    """Process exit codes shared by every subcommand."""

    OK = 0
    USAGE = 2
    SCALAR_DEGENERATE = 3
    IO = 4
    VERIFY_FAILED = 5


def _env_int(name: str, default: int, *, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        msg = f"{name} must be an integer, got {raw!r}"
        raise ValueError(msg) from None
    if value < minimum:
        msg = f"{name} must be >= {minimum}, got {value}"
        raise ValueError(msg)
    return value


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        msg = f"{name} must be a number, got {raw!r}"
        raise ValueError(msg) from None
    if not value > 0:
        msg = f"{name} must be positive, got {value}"
        raise ValueError(msg)
    return value


@dataclass
class Settings:
    """Global settings read from the environment (and `.env`) at startup.

    Every field can be overridden by the matching command-line flag.

    Attributes:
        threads: Worker count for sweeps (`ASYM_THREADS`).
        dense_cap: Largest Hilbert-space dimension `to_dense` will build (`ASYM_DENSE_CAP`).
        auto_dense_limit: `--backend auto` picks dense up to this dimension
            (`ASYM_AUTO_DENSE_LIMIT`).
        symmetry_tol: Absolute tolerance on commutator norms (`ASYM_SYMMETRY_TOL`).
        scalar_eps: Threshold below which an operator counts as scalar (`ASYM_SCALAR_EPS`).
        log_level: Level for the package logger (`ASYM_LOG_LEVEL`).
    """

    threads: int = 1
    dense_cap: int = DEFAULT_DENSE_CAP
    auto_dense_limit: int = DEFAULT_AUTO_DENSE_LIMIT
    symmetry_tol: float = DEFAULT_SYMMETRY_TOL
    scalar_eps: float = DEFAULT_SCALAR_EPS
    log_level: str = "WARNING"

    @classmethod
    def from_environment(cls) -> "Settings":
        """Create settings from the current environment.

        Returns:
            Settings instance with detected configuration

        Raises:
            ValueError: If a variable is set but malformed.
        """
        log_level = os.environ.get("ASYM_LOG_LEVEL", "WARNING").strip().upper() or "WARNING"
        if log_level not in logging.getLevelNamesMapping():
            msg = f"ASYM_LOG_LEVEL must be a logging level name, got {log_level!r}"
            raise ValueError(msg)

        return cls(
            threads=_env_int("ASYM_THREADS", 1),
            dense_cap=_env_int("ASYM_DENSE_CAP", DEFAULT_DENSE_CAP, minimum=2),
            auto_dense_limit=_env_int("ASYM_AUTO_DENSE_LIMIT", DEFAULT_AUTO_DENSE_LIMIT, minimum=2),
            symmetry_tol=_env_float("ASYM_SYMMETRY_TOL", DEFAULT_SYMMETRY_TOL),
            scalar_eps=_env_float("ASYM_SCALAR_EPS", DEFAULT_SCALAR_EPS),
            log_level=log_level,
        )


def setup_logging(level: str | int | None = None) -> None:
    """Route the package logger through a single rich handler on stderr.

    Args:
        level: Logging level; defaults to `settings.log_level`.
    """
    logger = logging.getLogger(_PACKAGE_LOGGER)
    logger.setLevel(level if level is not None else settings.log_level)
    if not any(isinstance(h, RichHandler) for h in logger.handlers):
        handler = RichHandler(console=err_console, show_path=False, rich_tracebacks=True)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
    logger.propagate = False


settings = Settings.from_environment()
