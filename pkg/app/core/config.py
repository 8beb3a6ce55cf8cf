"""Application configuration using pydantic-settings."""

from functools import lru_cache
from typing import Optional

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables (prefix BOHRNET_)."""

    model_config = SettingsConfigDict(
        env_prefix="BOHRNET_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "bohrnet"
    log_level: str = "INFO"
    log_dir: Optional[str] = None

    # Context posets
    include_trivial_context: bool = True
    context_cap: int = Field(default=4096, description="Max contexts per net-wide poset")
    opens_cap: int = Field(default=1 << 16, description="Max Alexandrov opens to enumerate")

    # Algebras
    ambient_dim_cap: int = Field(default=64, description="Max dimension d of the ambient M_d")

    # Spacetime
    region_cap: int = Field(default=50_000, description="Max causally complete regions")

    # Descent & spectra
    cover_cap: int = Field(default=512, description="Max covers checked per net")
    section_cap: int = Field(default=1_000_000, description="Max global sections counted")

    # Execution
    threads: int = 1
    json_indent: int = 2

    @model_validator(mode="after")
    def check_limits(self):
        """Normalize log level and reject non-positive caps."""
        self.log_level = self.log_level.upper()

        caps = (
            "ambient_dim_cap", "context_cap", "opens_cap", "region_cap", "cover_cap", "section_cap"
        )
        for name in caps:
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.threads < 1:
            raise ValueError("threads must be at least 1")

        return self


@lru_cache
def get_settings() -> Settings:
    """Cached settings instance."""
    return Settings()


settings = get_settings()
