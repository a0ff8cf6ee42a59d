"""
Numeric and CLI settings for heightforge.
Read from HEIGHTFORGE_* environment variables and an optional .env file.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Numeric and CLI settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="heightforge", validation_alias="HEIGHTFORGE_APP_NAME")
    log_level: str = Field(default="WARNING", validation_alias="HEIGHTFORGE_LOG_LEVEL")
    random_seed: int = Field(default=20240101, validation_alias="HEIGHTFORGE_SEED")

    # Ball arithmetic and refinement
    initial_precision_bits: int = Field(
        default=64, ge=16, validation_alias="HEIGHTFORGE_INITIAL_PRECISION"
    )
    precision_cap_bits: int = Field(default=8192, ge=16, validation_alias="HEIGHTFORGE_PREC_CAP")
    default_tolerance: float = Field(default=1e-10, gt=0, validation_alias="HEIGHTFORGE_TOLERANCE")
    root_max_iterations: int = Field(
        default=500, validation_alias="HEIGHTFORGE_ROOT_MAX_ITERATIONS"
    )

    # p-adic lifting
    padic_start_precision: int = Field(default=20, validation_alias="HEIGHTFORGE_PADIC_START")
    padic_safety_margin: int = Field(default=10, validation_alias="HEIGHTFORGE_PADIC_MARGIN")
    padic_precision_cap: int = Field(default=5120, validation_alias="HEIGHTFORGE_PADIC_CAP")

    # Irreducibility certification
    irreducibility_prime_bound: int = Field(
        default=200, validation_alias="HEIGHTFORGE_IRREDUCIBILITY_PRIME_BOUND"
    )
    irreducibility_prime_count: int = Field(
        default=20, validation_alias="HEIGHTFORGE_IRREDUCIBILITY_PRIMES"
    )

    # Archimedean sup norms
    sup_norm_grid: int = Field(default=64, ge=4, validation_alias="HEIGHTFORGE_SUP_GRID")
    sup_norm_max_cells: int = Field(default=200000, validation_alias="HEIGHTFORGE_SUP_MAX_CELLS")
    sup_norm_max_vars: int = Field(default=3, validation_alias="HEIGHTFORGE_SUP_MAX_VARS")

    # Corpus
    corpus_path: Optional[str] = Field(default=None, validation_alias="HEIGHTFORGE_CORPUS")


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
