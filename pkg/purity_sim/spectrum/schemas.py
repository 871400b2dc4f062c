"""
spectrum/schemas.py — Pydantic models for the noisy state's spectrum and run parameters.

A Spectrum is either exact (every entry a Fraction, used by the oracle) or
float (used by Monte Carlo). Mixed input collapses to float mode. Entries
are accepted in any order and stored ascending, so p[-1] is p_d.
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from purity_sim.config import settings
from purity_sim.core.errors import GapError, SpectrumError

Probability = Fraction | float


class Spectrum(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    p: tuple[Probability, ...] = Field(description="Eigenvalues of ρ, ascending")

    @field_validator("p", mode="before")
    @classmethod
    def _coerce_and_sort(cls, value):
        values = list(value)
        if any(isinstance(x, float) for x in values):
            values = [float(x) for x in values]
        else:
            values = [Fraction(x) for x in values]
        return tuple(sorted(values))

    @model_validator(mode="after")
    def _check_distribution(self) -> Spectrum:
        if len(self.p) < 2:
            raise ValueError(f"Spectrum needs d >= 2 entries, got {len(self.p)}")
        if any(x < 0 for x in self.p):
            raise ValueError(f"Probabilities must be nonnegative, got {self.p}")
        total = sum(self.p)
        if self.exact:
            if total != 1:
                raise ValueError(f"Probabilities must sum to 1 exactly, got {total}")
        elif abs(total - 1.0) > settings.float_tolerance:
            raise ValueError(f"Probabilities must sum to 1, got {total!r}")
        return self

    @classmethod
    def of(cls, values: Iterable[Probability | int | str]) -> Spectrum:
        """Validated constructor raising SpectrumError instead of ValidationError."""
        try:
            return cls(p=tuple(values))
        except ValidationError as exc:
            raise SpectrumError(exc.errors()[0]["msg"]) from exc
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SpectrumError(str(exc)) from exc

    @property
    def d(self) -> int:
        return len(self.p)

    @property
    def exact(self) -> bool:
        return isinstance(self.p[0], Fraction)

    @property
    def p_max(self) -> Probability:
        """p_d, the principal eigenvalue."""
        return self.p[-1]

    @property
    def p_second(self) -> Probability:
        """p_{d-1}."""
        return self.p[-2]

    @property
    def gap(self) -> Probability:
        """g = p_d − p_{d-1}."""
        return self.p[-1] - self.p[-2]

    def require_gap(self) -> Probability:
        g = self.gap
        if g <= 0:
            raise GapError(f"Spectrum {self} has no spectral gap (p_d == p_(d-1))")
        return g

    def one(self) -> Probability:
        """The multiplicative identity in this spectrum's number mode."""
        return Fraction(1) if self.exact else 1.0

    def coerce(self, value) -> Probability:
        """Bring a scalar into this spectrum's number mode (decimal literals stay exact)."""
        if not self.exact:
            return float(value)
        if isinstance(value, float):
            return Fraction(repr(value))
        return Fraction(value)

    def to_float(self) -> Spectrum:
        return self if not self.exact else Spectrum.of(float(x) for x in self.p)

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.p)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.p)


class RunParameters(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Input copies")
    k: int = Field(ge=1, description="Output copies")
    delta: float = Field(default=1.0, gt=0.0, le=1.0, description="Target infidelity")
