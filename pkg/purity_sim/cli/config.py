"""
cli/config.py — Validated configuration for one CLI invocation.
"""
from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

Command = Literal["rsk", "fidelity", "simulate", "sweep", "oracle", "bounds", "lemmas"]

NEEDS_SPECTRUM = {"simulate", "sweep", "oracle", "bounds", "lemmas"}
NEEDS_N = {"simulate", "oracle", "lemmas"}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    spectrum: str | None = None
    word: str | None = None
    d: int | None = Field(default=None, ge=2)
    n: int | None = Field(default=None, ge=1)
    k: int = Field(default=1, ge=1)
    delta: float = Field(default=0.1, gt=0.0, le=1.0)
    trials: int = Field(default=1000, ge=1)
    seed: int = Field(default=0, ge=0)
    workers: int | None = Field(default=None, ge=0)
    format: Literal["csv", "json"] = "csv"
    out: Path | None = None
    cap: int | None = Field(default=None, ge=0)
    n_grid: tuple[int, ...] | None = None
    delta_grid: tuple[float, ...] | None = None

    @field_validator("n_grid", "delta_grid", mode="before")
    @classmethod
    def _split_grid(cls, value):
        if isinstance(value, str):
            return tuple(token for token in (t.strip() for t in value.split(",")) if token)
        return value

    @field_validator("n_grid")
    @classmethod
    def _positive_n(cls, value):
        if value is not None and any(n < 1 for n in value):
            raise ValueError(f"n-grid entries must be positive, got {value}")
        return value

    @field_validator("delta_grid")
    @classmethod
    def _delta_range(cls, value):
        if value is not None and any(not 0 < delta <= 1 for delta in value):
            raise ValueError(f"δ-grid entries must lie in (0, 1], got {value}")
        return value

    @model_validator(mode="after")
    def _command_requirements(self) -> RunConfig:
        if self.command in NEEDS_SPECTRUM and not self.spectrum:
            raise ValueError(f"'{self.command}' needs --spectrum")
        if self.command in NEEDS_N and self.n is None:
            raise ValueError(f"'{self.command}' needs --n")
        if self.command == "sweep":
            grids = [g for g in (self.n_grid, self.delta_grid) if g is not None]
            if len(grids) != 1:
                raise ValueError("'sweep' needs exactly one of --n-grid or --delta-grid")
            if not grids[0]:
                raise ValueError("'sweep' needs a nonempty grid")
        return self
