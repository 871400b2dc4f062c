"""
montecarlo/checks.py — Sampled verification of the sample-complexity guarantee,
the row lemmas and the 1/n infidelity scaling.

A sampled check passes when the observed statistic is within
settings.acceptance_sigmas standard errors of its bound. Failures are
reported, never raised.
"""
from __future__ import annotations

from collections.abc import Sequence
from math import sqrt

from purity_sim.config import settings
from purity_sim.core.errors import DomainError
from purity_sim.core.reports import CheckResult
from purity_sim.montecarlo.estimator import estimate
from purity_sim.montecarlo.schemas import EstimationResult, LemmaReport, ScalingRow, TheoremReport
from purity_sim.spectrum.bounds import (
    concentration_bound,
    fine_grained_rate,
    first_row_bound,
    first_row_tail_bound,
    guaranteed_fidelity,
    meets_event_margin,
    overhang_mean_bound,
    qubit_asymptotic_infidelity,
    required_samples,
    second_row_bound,
    second_row_tail_bound,
)
from purity_sim.spectrum.schemas import RunParameters, Spectrum
from purity_sim.utils.logging import get_logger

logger = get_logger(__name__)


def verify_theorem(
    p: Spectrum, k: int, delta: float, trials: int, seed: int, workers: int | None = None
) -> TheoremReport:
    """Run at n = required_samples(p, k, δ) and check mean fidelity + CI ≥ 1 − δ."""
    p = p.to_float()
    n = required_samples(p, k, delta)
    result = estimate(p, RunParameters(n=n, k=k, delta=delta), trials, seed, workers=workers)
    target = 1.0 - delta

    checks = [
        CheckResult.sampled("mean_fidelity", result.mean_fidelity, ">=", target, result.ci_halfwidth),
        CheckResult.exact("event_margin", p.gap * n / 2, ">=", 2 * k),
        CheckResult.exact("guaranteed_fidelity", guaranteed_fidelity(p, n, k), ">=", target),
        event_bound_check(result),
    ]
    report = TheoremReport(
        title="theorem",
        parameters={"spectrum": str(p), "k": k, "delta": delta, "trials": trials, "seed": seed},
        checks=checks,
        n=n,
        target_fidelity=target,
        slack=result.mean_fidelity - target,
        estimation=result,
    )
    if not meets_event_margin(p, n, k):
        logger.warning("event_margin_not_met", n=n, k=k)
    logger.info("theorem_verified", n=n, k=k, delta=delta, passed=report.passed, slack=report.slack)
    return report


def event_bound_check(result: EstimationResult) -> CheckResult:
    """Every sampled trial on the good event has fidelity at or above the event lower bound."""
    return CheckResult.exact("event_fidelity_bound_violations", result.event_bound_violations, "==", 0)


def _rate_error(rate: float, trials: int) -> float:
    return sqrt(rate * (1.0 - rate) / trials)


def lemma_checks(p: Spectrum, result: EstimationResult) -> list[CheckResult]:
    """Row-lemma and concentration checks against one EstimationResult."""
    sigmas = settings.acceptance_sigmas
    n, trials = result.n, result.trials
    return [
        CheckResult.sampled(
            "first_row_mean", result.mean_lambda1, "<=", first_row_bound(p, n), sigmas * result.lambda1_std_error
        ),
        CheckResult.sampled(
            "second_row_moment",
            result.second_row_moment,
            "<=",
            second_row_bound(p, n),
            sigmas * result.second_row_std_error,
        ),
        CheckResult.sampled(
            "overhang_mean",
            result.mean_overhang_sum,
            "<=",
            overhang_mean_bound(p),
            sigmas * result.overhang_std_error,
        ),
        CheckResult.sampled(
            "first_row_tail",
            result.first_row_low_rate,
            "<=",
            first_row_tail_bound(p, n),
            sigmas * _rate_error(result.first_row_low_rate, trials),
        ),
        CheckResult.sampled(
            "second_row_tail",
            result.second_row_high_rate,
            "<=",
            second_row_tail_bound(p, n),
            sigmas * _rate_error(result.second_row_high_rate, trials),
        ),
        CheckResult.sampled(
            "event_failure",
            result.event_failure_rate,
            "<=",
            concentration_bound(p, n),
            sigmas * _rate_error(result.event_failure_rate, trials),
        ),
        event_bound_check(result),
    ]


def check_lemmas(
    p: Spectrum, n: int, trials: int, seed: int, workers: int | None = None
) -> LemmaReport:
    p = p.to_float()
    p.require_gap()
    result = estimate(p, RunParameters(n=n, k=1), trials, seed, workers=workers)
    report = LemmaReport(
        title="lemmas",
        parameters={"spectrum": str(p), "n": n, "trials": trials, "seed": seed},
        checks=lemma_checks(p, result),
        estimation=result,
    )
    logger.info("lemmas_checked", n=n, trials=trials, passed=report.passed)
    return report


def reference_rate(p: Spectrum) -> float:
    """p₁/g² for qubits (the known asymptotic infidelity times n), else the fine-grained rate."""
    if p.d == 2:
        return float(qubit_asymptotic_infidelity(p, 1))
    return float(fine_grained_rate(p))


def scaling_study(
    p: Spectrum, k: int, ns: Sequence[int], trials: int, seed: int, workers: int | None = None
) -> list[ScalingRow]:
    """n·(1 − mean fidelity) across a grid of n; should stay bounded as n doubles."""
    if not ns:
        raise DomainError("scaling_study needs a nonempty n grid")
    p = p.to_float()
    reference = reference_rate(p)
    rows: list[ScalingRow] = []
    for n in ns:
        result = estimate(p, RunParameters(n=n, k=k), trials, seed, workers=workers)
        scaled = n * (1.0 - result.mean_fidelity)
        previous = rows[-1].scaled_infidelity if rows else None
        rows.append(
            ScalingRow(
                n=n,
                mean_fidelity=result.mean_fidelity,
                ci_halfwidth=result.ci_halfwidth,
                scaled_infidelity=scaled,
                ratio_to_previous=scaled / previous if previous else None,
                reference_rate=reference,
            )
        )
    return rows
