"""Configuration management for josephideal."""

import os
from typing import Tuple

from .exceptions import ConfigError
from .linalg.modular import DEFAULT_PRIMES

"""Runtime defaults, overridable from the environment."""
class Config:

    def __init__(self):
        self.jobs = self._get_int("JOSEPH_JOBS", 1)
        self.mem_cap_mb = self._get_int("JOSEPH_MEM_CAP_MB", 2048)
        self.log_level = os.getenv("JOSEPH_LOG_LEVEL", "WARNING").upper()
        self.seed = self._get_int("JOSEPH_SEED", 20240521)
        self.primes = self._get_primes()

    """Read an integer variable.

    Returns:
        The parsed value, or ``default`` when the variable is unset
    """
    def _get_int(self, name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{name} must be an integer, got {raw!r}") from exc

    def _get_primes(self) -> Tuple[int, ...]:
        raw = os.getenv("JOSEPH_PRIMES")
        if not raw:
            return DEFAULT_PRIMES

        # Comma separated, e.g. "2147483629,2147483587"
        try:
            primes = tuple(int(p) for p in raw.split(",") if p.strip())
        except ValueError as exc:
            raise ConfigError(f"JOSEPH_PRIMES must be comma-separated integers, got {raw!r}") from exc
        if not primes or any(p < 3 for p in primes):
            raise ConfigError("JOSEPH_PRIMES needs at least one odd prime")
        return primes


# Singleton instance
config = Config()
