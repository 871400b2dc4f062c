"""
montecarlo/estimator.py — Sample-mean estimation of E[F(λ, T)] under RSK^n(p).

Trial i always draws from trial_stream(seed, i) and trials are grouped into
batches of settings.batch_size by index. Batches go to the runner and come
back in index order, so every statistic is bit-identical for any worker count.
"""
from __future__ import annotations

from math import sqrt
from typing import NamedTuple

import numpy as np
from scipy import stats

from purity_sim.config import settings
from purity_sim.core.errors import DomainError
from purity_sim.core.streams import trial_stream
from purity_sim.fidelity.formula import event_fidelity_lower_bound, fidelity_from_shapes
from purity_sim.montecarlo.schemas import EstimationResult, TrialRecord
from purity_sim.montecarlo.streaming import BatchTableaux, StreamingTableau, batch_fidelity
from purity_sim.runners.factory import get_runner
from purity_sim.spectrum.sampling import letter_cdf, sample_letters
from purity_sim.spectrum.schemas import RunParameters, Spectrum
from purity_sim.utils.logging import get_logger

logger = get_logger(__name__)


class TrialColumns(NamedTuple):
    """Per-trial outcomes as parallel arrays, in trial-index order."""

    lambda1: np.ndarray
    lambda2: np.ndarray
    overhang_sum: np.ndarray
    fidelity: np.ndarray
    fallback: np.ndarray

    @classmethod
    def concat(cls, parts: list[TrialColumns]) -> TrialColumns:
        return cls(*(np.concatenate(column) for column in zip(*parts)))


def run_trial(p: Spectrum, n: int, k: int, stream: np.random.Generator) -> TrialRecord:
    """One sample of (λ, T) by streaming insertion, drawing letters in chunks."""
    p = p.to_float()
    if n < 1 or k < 1:
        raise DomainError(f"n and k must be positive, got n={n}, k={k}")
    cdf = letter_cdf(p)
    engine = StreamingTableau(p.d)
    remaining = n
    while remaining:
        chunk = min(settings.letter_chunk, remaining)
        engine.extend(sample_letters(cdf, chunk, stream).tolist())
        remaining -= chunk

    lam, mu = engine.shape, engine.mu
    value = fidelity_from_shapes(lam, mu, k, p.d, exact=False)
    return TrialRecord(
        lambda1=lam.row(1),
        lambda2=lam.row(2),
        overhang_sum=mu.n - n + lam.row(1),
        fidelity=value.value,
        fallback_used=value.fallback_used,
        event_held=lam.row(1) - lam.row(2) >= p.gap * n / 2,
    )


def batch_chunk_length(size: int) -> int:
    """Letters drawn per trial per round, so one round holds at most batch_letter_budget letters."""
    return max(1, min(settings.letter_chunk, settings.batch_letter_budget // max(size, 1)))


def _simulate_batch(task: tuple[Spectrum, int, int, int, int, int]) -> TrialColumns:
    p, n, k, seed, start, size = task
    cdf = letter_cdf(p)
    streams = [trial_stream(seed, index) for index in range(start, start + size)]
    engine = BatchTableaux(p.d, size)
    step = batch_chunk_length(size)
    remaining = n
    while remaining:
        chunk = min(step, remaining)
        letters = np.stack([sample_letters(cdf, chunk, stream) for stream in streams], axis=1)
        for column in letters:
            engine.insert(column)
        remaining -= chunk

    lam, mu = engine.shapes()
    values, fallback = batch_fidelity(lam, mu, k)
    return TrialColumns(
        lambda1=lam[:, 0].copy(),
        lambda2=lam[:, 1].copy(),
        overhang_sum=mu.sum(axis=1) - n + lam[:, 0],
        fidelity=values,
        fallback=fallback,
    )


def simulate_trials(
    p: Spectrum, n: int, k: int, trials: int, seed: int, workers: int | None = None
) -> TrialColumns:
    if n < 1 or k < 1:
        raise DomainError(f"n and k must be positive, got n={n}, k={k}")
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    if seed < 0:
        raise DomainError(f"seed must be nonnegative, got {seed}")
    p = p.to_float()
    size = settings.batch_size
    tasks = [(p, n, k, seed, start, min(size, trials - start)) for start in range(0, trials, size)]
    with get_runner(workers) as runner:
        parts = runner.map(_simulate_batch, tasks)
    return TrialColumns.concat(parts)


def _mean_and_error(values: np.ndarray) -> tuple[float, float]:
    mean = float(np.mean(values))
    if values.size < 2:
        return mean, 0.0
    return mean, float(np.std(values, ddof=1)) / sqrt(values.size)


def _z_score() -> float:
    return float(stats.norm.ppf(0.5 + settings.confidence_level / 2))


def _event_bound_violations(
    columns: TrialColumns, gaps: np.ndarray, g: float, n: int, k: int
) -> tuple[int, int]:
    """
    Trials on the good event, and how many of them have fidelity below
    event_fidelity_lower_bound. The bound only applies once ½·g·n ≥ 2k.
    """
    if g <= 0 or g * n / 2 < 2 * k:
        return 0, 0
    on_event = gaps >= g * n / 2
    bound = event_fidelity_lower_bound(columns.overhang_sum[on_event].astype(np.float64), k, g, n)
    below = bound > columns.fidelity[on_event] + settings.float_tolerance
    return int(np.count_nonzero(on_event)), int(np.count_nonzero(below))


def summarise(p: Spectrum, n: int, k: int, seed: int, columns: TrialColumns) -> EstimationResult:
    p = p.to_float()
    trials = columns.fidelity.size
    g = p.gap

    mean_fidelity, fidelity_se = _mean_and_error(columns.fidelity)
    mean_lambda1, lambda1_se = _mean_and_error(columns.lambda1.astype(np.float64))
    deviation = (columns.lambda2 - p.p_second * n) ** 2
    second_moment, second_se = _mean_and_error(deviation)
    mean_overhang, overhang_se = _mean_and_error(columns.overhang_sum.astype(np.float64))

    gaps = columns.lambda1 - columns.lambda2
    failures = int(np.count_nonzero(gaps < g * n / 2))
    bound_trials, bound_violations = _event_bound_violations(columns, gaps, g, n, k)
    wilson = stats.binomtest(failures, trials).proportion_ci(
        confidence_level=settings.confidence_level, method="wilson"
    )

    return EstimationResult(
        spectrum=str(p),
        n=n,
        k=k,
        trials=trials,
        seed=seed,
        mean_fidelity=min(1.0, mean_fidelity),
        fidelity_std_error=fidelity_se,
        ci_halfwidth=_z_score() * fidelity_se if trials > 1 else 0.0,
        ci_defined=trials > 1,
        mean_lambda1=mean_lambda1,
        lambda1_std_error=lambda1_se,
        second_row_moment=second_moment,
        second_row_std_error=second_se,
        mean_overhang_sum=mean_overhang,
        overhang_std_error=overhang_se,
        fallback_rate=float(np.mean(columns.fallback)),
        event_failure_rate=failures / trials,
        event_failure_ci_low=float(wilson.low),
        event_failure_ci_high=float(wilson.high),
        first_row_low_rate=float(np.mean(columns.lambda1 <= p.p_max * n - g * n / 4)),
        second_row_high_rate=float(np.mean(columns.lambda2 >= p.p_second * n + g * n / 4)),
        event_bound_trials=bound_trials,
        event_bound_violations=bound_violations,
    )


def estimate(
    p: Spectrum, params: RunParameters, trials: int, seed: int, workers: int | None = None
) -> EstimationResult:
    logger.info("estimate_start", spectrum=str(p), n=params.n, k=params.k, trials=trials, seed=seed)
    columns = simulate_trials(p, params.n, params.k, trials, seed, workers=workers)
    result = summarise(p, params.n, params.k, seed, columns)
    logger.info(
        "estimate_done",
        n=params.n,
        k=params.k,
        mean_fidelity=result.mean_fidelity,
        ci_halfwidth=result.ci_halfwidth,
    )
    return result
