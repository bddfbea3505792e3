"""
Configuration settings for the quantum solvable algebra toolkit.
Uses Pydantic for settings management and validation.
"""

import os
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


class Settings(BaseSettings):
    """
    Configuration settings with defaults and environment variable binding.
    Every variable can be overridden with a QSOLV_ prefixed environment variable.
    """
    # Run log
    RUN_LOG_PATH: str = Field(default="storage/logs/runs.log")
    ENABLE_RUN_LOG: bool = Field(default=True)

    # Logging
    LOG_LEVEL: str = Field(default="INFO")
    LOG_FORMAT: str = Field(default="%(asctime)s - %(name)s - %(levelname)s - %(message)s")

    # Rewriting
    REWRITE_FUEL: int = Field(default=10**6, description="Elementary rewrites allowed per product")

    # Enumeration bounds
    MINOR_ENUMERATION_LIMIT: int = Field(default=12)
    BRUTE_FORCE_MAX_GENERATORS: int = Field(default=4)
    BRUTE_FORCE_MAX_L: int = Field(default=7)
    COMMUTANT_MAX_UNKNOWNS: int = Field(default=10**4)

    # Poisson rank sampling
    GENERIC_RANK_SAMPLES: int = Field(default=5)

    # Identity suites
    DEFAULT_SEED: int = Field(default=0)
    DEFAULT_DEGREE: int = Field(default=3)
    DEFAULT_CASES: int = Field(default=10)

    # Reports
    REPORT_SCHEMA_VERSION: str = Field(default="1.0")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="QSOLV_",
        case_sensitive=True,
        extra="ignore",
    )


# Create global settings instance
settings = Settings()


def get_run_log_path() -> str:
    """
    Get the path of the structured run log, creating its directory.

    Returns:
        Path to the JSON-lines run log
    """
    directory = os.path.dirname(settings.RUN_LOG_PATH)
    if directory:
        os.makedirs(directory, exist_ok=True)
    return settings.RUN_LOG_PATH
