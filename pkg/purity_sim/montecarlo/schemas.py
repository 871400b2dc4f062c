"""
montecarlo/schemas.py — Pydantic models for sampled trials and their aggregates.
"""
from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from purity_sim.core.reports import VerificationReport


class TrialRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    lambda1: int = Field(ge=0)
    lambda2: int = Field(ge=0)
    overhang_sum: int = Field(ge=0, description="Σ b_i = |μ| − n + λ₁")
    fidelity: float = Field(ge=0.0, le=1.0)
    fallback_used: bool = Field(description="λ₁ − λ₂ < k, so the output was maximally mixed")
    event_held: bool = Field(description="λ₁ − λ₂ ≥ ½·g·n")

    @model_validator(mode="after")
    def _rows_ordered(self) -> TrialRecord:
        if self.lambda2 > self.lambda1:
            raise ValueError(f"λ₂={self.lambda2} exceeds λ₁={self.lambda1}")
        return self


class EstimationResult(BaseModel):
    """
    Sample statistics over independent trials at one (p, n, k, seed).

    ci_halfwidth is the normal-approximation half-width at the configured
    confidence level; it understates uncertainty when nearly every trial has
    fidelity 1, and is 0 with ci_defined False for a single trial.
    """

    model_config = ConfigDict(frozen=True)

    spectrum: str
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    trials: int = Field(ge=1)
    seed: int = Field(ge=0)

    mean_fidelity: float = Field(ge=0.0, le=1.0)
    fidelity_std_error: float = Field(ge=0.0)
    ci_halfwidth: float = Field(ge=0.0)
    ci_defined: bool

    mean_lambda1: float
    lambda1_std_error: float = Field(ge=0.0)
    second_row_moment: float = Field(ge=0.0, description="Mean of (λ₂ − p_{d−1}·n)²")
    second_row_std_error: float = Field(ge=0.0)
    mean_overhang_sum: float = Field(ge=0.0)
    overhang_std_error: float = Field(ge=0.0)
    fallback_rate: float = Field(ge=0.0, le=1.0)

    event_failure_rate: float = Field(ge=0.0, le=1.0, description="Fraction of trials with λ₁ − λ₂ < ½·g·n")
    event_failure_ci_low: float = Field(ge=0.0, le=1.0)
    event_failure_ci_high: float = Field(ge=0.0, le=1.0)
    first_row_low_rate: float = Field(ge=0.0, le=1.0, description="Fraction with λ₁ ≤ p_d·n − ¼·g·n")
    second_row_high_rate: float = Field(ge=0.0, le=1.0, description="Fraction with λ₂ ≥ p_{d−1}·n + ¼·g·n")
    event_bound_trials: int = Field(ge=0, description="Trials on the good event once ½·g·n ≥ 2k")
    event_bound_violations: int = Field(ge=0, description="Of those, trials whose fidelity fell below the event lower bound")


class TheoremReport(VerificationReport):
    """Verification of the sample-complexity guarantee at n = required_samples(p, k, δ)."""

    n: int
    target_fidelity: float
    slack: float = Field(description="mean fidelity − (1 − δ)")
    estimation: EstimationResult


class LemmaReport(VerificationReport):
    estimation: EstimationResult


class ScalingRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    mean_fidelity: float
    ci_halfwidth: float
    scaled_infidelity: float = Field(description="n · (1 − mean fidelity)")
    ratio_to_previous: float | None = None
    reference_rate: float = Field(description="p₁/g² for qubits, the fine-grained rate otherwise")
