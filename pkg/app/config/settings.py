"""
Configuration settings for the down-up sampler
Loads environment variables (and an optional .env file) and provides application settings
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="DOWNUP_",
        extra="ignore",
    )

    # Application
    LOG_LEVEL: str = "INFO"

    # Enumeration limits for exact (small-instance) analysis
    ENUMERATION_CAP: int = 24  # edges; C(24, 11) subsets stays desk-scale
    SUPPORT_CAP: int = 5000
    SUBSET_SCAN_CAP: int = 250_000
    HESSIAN_DIMENSION_CAP: int = 64
    EIGENVALUE_RELATIVE_TOLERANCE: float = 1e-9

    # Walk schedule
    SCHEDULE_CONSTANT: float = 4.0  # the unspecified constant in O(k log(k/eps))
    DEFAULT_EPSILON: float = 0.01
    DEFAULT_SEED: int = 0

    # Sampler structural checks
    DEBUG_CHECKS: bool = False  # check after every step
    CHECK_INTERVAL: int = 0  # 0 = check once at the end of each chain

    def validate(self) -> bool:
        """Validate that all settings are usable"""
        caps = [
            self.ENUMERATION_CAP,
            self.SUPPORT_CAP,
            self.SUBSET_SCAN_CAP,
            self.HESSIAN_DIMENSION_CAP,
        ]
        return (
            all(cap > 0 for cap in caps)
            and self.SCHEDULE_CONSTANT > 0
            and 0 < self.DEFAULT_EPSILON < 1
            and self.CHECK_INTERVAL >= 0
        )


# Global settings instance
settings = Settings()
