"""Process-wide numerical and runtime defaults."""

import logging
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """Defaults read from SPA_OUTAGE_* environment variables."""

    # Logging
    log_level: str = "INFO"
    log_json: bool = False

    # Execution
    threads: int = 1
    seed: int = 20240601
    record_timing: bool = False

    # CGF quadrature
    quad_epsabs: float = 1e-12
    quad_epsrel: float = 1e-10
    quad_limit: int = 200

    # Gil-Pelaez inversion
    inversion_abs_tol: float = 1e-9
    inversion_rel_tol: float = 1e-7
    inversion_max_panels: int = 2**14

    # Monte Carlo
    mc_trials: int = 100_000
    mc_stream_block: int = 2**14

    model_config = SettingsConfigDict(
        env_prefix="SPA_OUTAGE_", env_file=".env", case_sensitive=False, extra="ignore"
    )

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        """Accept only standard logging level names."""
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {v!r}")
        return level

    @field_validator("quad_epsabs", "quad_epsrel", "inversion_abs_tol", "inversion_rel_tol")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("tolerances must be positive")
        return v

    @field_validator("threads", "quad_limit", "mc_trials", "mc_stream_block")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be at least 1")
        return v

    @field_validator("inversion_max_panels")
    @classmethod
    def validate_max_panels(cls, v: int) -> int:
        if v < 16:
            raise ValueError("inversion_max_panels must be at least 16")
        return v

    @field_validator("seed")
    @classmethod
    def validate_seed(cls, v: int) -> int:
        if not 0 <= v < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return v


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()


def validate_config() -> bool:
    """
    Validate the environment configuration.

    Raises:
        ValidationError: If configuration is invalid

    Returns:
        True if valid
    """
    get_settings()
    return True
