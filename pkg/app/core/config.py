"""
PythParam Configuration
Load settings from environment variables
"""
from functools import lru_cache

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    # ============================================
    # Application Settings
    # ============================================
    APP_NAME: str = "PythParam"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = "WARNING"

    # ============================================
    # Budgets (one environment variable each)
    # ============================================
    # points in the residue box {0..d-1}^arity of is_integer_valued
    RESIDUE_BOX_BUDGET: int = 1_000_000
    # largest n accepted by four_square
    FOUR_SQUARE_BUDGET: int = 100_000_000
    # largest bound accepted by enumerate_triples
    ENUMERATE_BUDGET: int = 10_000
    # largest radius accepted by check_image_box
    IMAGE_RADIUS_BUDGET: int = 30
    # largest k accepted by falling_factorial_identity
    FALLING_FACTORIAL_BUDGET: int = 20
    SWEEP_TIME_LIMIT_SECONDS: int = 600

    # ============================================
    # Verification Settings
    # ============================================
    MAX_STORED_FAILURES: int = 100
    # image-box points compared against the symbolic triple: every k-th
    SYMBOLIC_SUBSAMPLE_STRIDE: int = 97
    DEFAULT_JOBS: int = 1

    @field_validator(
        "RESIDUE_BOX_BUDGET",
        "FOUR_SQUARE_BUDGET",
        "ENUMERATE_BUDGET",
        "IMAGE_RADIUS_BUDGET",
        "FALLING_FACTORIAL_BUDGET",
        "SWEEP_TIME_LIMIT_SECONDS",
        "MAX_STORED_FAILURES",
        "SYMBOLIC_SUBSAMPLE_STRIDE",
        "DEFAULT_JOBS",
    )
    @classmethod
    def _positive(cls, value: int) -> int:
        if value <= 0:
            raise ValueError("budgets must be positive")
        return value

    model_config = SettingsConfigDict(
        env_prefix="PYTHPARAM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()


# Global settings instance
settings = get_settings()
