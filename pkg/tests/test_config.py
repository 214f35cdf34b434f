"""Tests for environment configuration."""

import pytest

from josephideal.config import Config
from josephideal.exceptions import ConfigError
from josephideal.linalg import DEFAULT_PRIMES


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("JOSEPH_JOBS", "JOSEPH_MEM_CAP_MB", "JOSEPH_LOG_LEVEL", "JOSEPH_SEED", "JOSEPH_PRIMES"):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


class TestConfig:
    """Test defaults and overrides."""

    def test_defaults(self, clean_env):
        """Test values with nothing set."""
        cfg = Config()
        assert cfg.jobs == 1
        assert cfg.mem_cap_mb == 2048
        assert cfg.log_level == "WARNING"
        assert cfg.primes == DEFAULT_PRIMES

    def test_integer_override(self, clean_env):
        """Test JOSEPH_JOBS and the log level are read."""
        clean_env.setenv("JOSEPH_JOBS", "4")
        clean_env.setenv("JOSEPH_LOG_LEVEL", "debug")
        cfg = Config()
        assert cfg.jobs == 4
        assert cfg.log_level == "DEBUG"

    def test_blank_uses_default(self, clean_env):
        """Test an empty variable counts as unset."""
        clean_env.setenv("JOSEPH_MEM_CAP_MB", " ")
        assert Config().mem_cap_mb == 2048

    def test_bad_integer(self, clean_env):
        """Test a non-integer raises ConfigError."""
        clean_env.setenv("JOSEPH_JOBS", "many")
        with pytest.raises(ConfigError):
            Config()

    def test_primes(self, clean_env):
        """Test a comma-separated prime list."""
        clean_env.setenv("JOSEPH_PRIMES", "101, 103,")
        assert Config().primes == (101, 103)

    @pytest.mark.parametrize("raw", ["101,x", "2"])
    def test_bad_primes(self, clean_env, raw):
        """Test malformed or too small primes raise ConfigError."""
        clean_env.setenv("JOSEPH_PRIMES", raw)
        with pytest.raises(ConfigError):
            Config()
