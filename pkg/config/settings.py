# config/settings.py
# Runtime settings for the Suzuki semigroup toolkit

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Diagnostics and safety limits.

    Nothing here changes a computed number: tables and reports depend on the
    command line alone.
    """

    model_config = SettingsConfigDict(env_prefix="SUZUKI_", extra="ignore")

    log_level: str = "WARNING"

    # Largest membership table a semigroup may materialize
    max_bound: int = Field(default=50_000_000, ge=1)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance"""
    return Settings()
