"""Application settings and configuration."""

import math
import os
import sys
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, ValidationError


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    # Numerical defaults
    default_tol: float = Field(default=1e-12, gt=0.0, lt=1.0)
    max_quad_evaluations: int = Field(default=200_000, gt=0)
    max_series_terms: int = Field(default=200_000, gt=0)

    # Branch convention, default phi=-pi and phi'=0
    phi: float = -math.pi
    phi_prime: float = 0.0

    # Application Configuration
    verbose: bool = False

    model_config = SettingsConfigDict(
        env_prefix="LERCH_",
        env_file=".env.lerch",  # Use dedicated config file
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )


# Global settings instance
try:
    settings = Settings()
except ValidationError as e:
    print("❌ Error: Invalid lerchzeta environment settings.", file=sys.stderr)
    for err in e.errors():
        field = ".".join(str(part) for part in err["loc"])
        print(f"  LERCH_{field.upper()}: {err['msg']}", file=sys.stderr)
    print(f"\nCheck your environment or the .env.lerch file in {os.getcwd()}", file=sys.stderr)
    print("\nExample .env.lerch file:", file=sys.stderr)
    print("  LERCH_DEFAULT_TOL=1e-12", file=sys.stderr)
    print("  LERCH_VERBOSE=false", file=sys.stderr)
    sys.exit(1)
