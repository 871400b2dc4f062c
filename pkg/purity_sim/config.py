"""
config.py — Centralised settings loaded from the environment / .env.
Enumeration caps, Monte-Carlo batching and statistical thresholds live here.
"""
import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="PURITY_",
        extra="ignore",
    )

    # ── App ───────────────────────────────────
    log_level: str = "INFO"

    # ── Exhaustive enumeration caps ───────────
    enumeration_max_n: int = Field(default=10, ge=0)
    enumeration_max_d: int = Field(default=4, ge=2)
    greene_max_length: int = Field(default=10, ge=0)
    word_sum_max_words: int = Field(default=1_100_000, ge=1)

    # ── Monte Carlo ───────────────────────────
    batch_size: int = Field(default=2048, ge=1)  # fixed so results never depend on workers
    letter_chunk: int = Field(default=4096, ge=1)
    batch_letter_budget: int = Field(default=1 << 20, ge=1)  # letters buffered per batch round (8 MB as int64)
    workers: int = Field(default=0, ge=0)  # 0 = all cores

    # ── Statistics ────────────────────────────
    confidence_level: float = Field(default=0.95, gt=0.0, lt=1.0)
    acceptance_sigmas: float = Field(default=4.0, gt=0.0)
    float_tolerance: float = Field(default=1e-12, gt=0.0)

    def resolve_workers(self, workers: int | None = None) -> int:
        """Return the effective worker count (explicit value, else setting, 0 = all cores)."""
        value = self.workers if workers is None else workers
        if value <= 0:
            return os.cpu_count() or 1
        return value


settings = Settings()
