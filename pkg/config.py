"""Configuration settings for the Sun polynomial verifier."""
import os
from pydantic_settings import BaseSettings
from dotenv import load_dotenv, find_dotenv

load_dotenv(find_dotenv(usecwd=True))


class Settings(BaseSettings):
    """Application settings."""

    # Application
    log_level: str = os.getenv("LOG_LEVEL", "INFO")
    app_title: str = "Sun polynomial congruence verifier"
    app_version: str = "0.1.0"

    # Memo caches
    binom_cache_rows: int = int(os.getenv("BINOM_CACHE_ROWS", "512"))
    family_cache_max_n: int = int(os.getenv("FAMILY_CACHE_MAX_N", "400"))
    qbinom_cache_rows: int = int(os.getenv("QBINOM_CACHE_ROWS", "160"))

    # Suite runner defaults (flags override these)
    default_jobs: int = int(os.getenv("VERIFY_JOBS", "1"))
    default_format: str = os.getenv("VERIFY_FORMAT", "text")
    default_n_range: str = os.getenv("VERIFY_N_RANGE", "1..20")
    default_m_range: str = os.getenv("VERIFY_M_RANGE", "1..20")
    default_d_range: str = os.getenv("VERIFY_D_RANGE", "2..12")
    parallel_chunksize: int = int(os.getenv("VERIFY_CHUNKSIZE", "16"))

    # Property harnesses
    random_seed: int = int(os.getenv("RANDOM_SEED", "20160501"))

    class Config:
        env_file = ".env"
        case_sensitive = False
        extra = "ignore"  # Ignore extra fields instead of raising error


settings = Settings()
