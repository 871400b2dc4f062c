"""
oracle/checks.py — Exact pass/fail report over one (p, n, k) point.
"""
from __future__ import annotations

from fractions import Fraction

from purity_sim.core.reports import CheckResult, VerificationReport
from purity_sim.oracle.exact import (
    exact_event_breakdown,
    exact_overhang_mean,
    exact_row_moments,
    exact_rsk_distribution,
    pair_sum_expected_fidelity,
    word_sum_expected_fidelity,
)
from purity_sim.spectrum.bounds import (
    concentration_bound,
    first_row_bound,
    first_row_tail_bound,
    overhang_mean_bound,
    second_row_bound,
    second_row_tail_bound,
)
from purity_sim.spectrum.schemas import Spectrum
from purity_sim.utils.logging import get_logger

logger = get_logger(__name__)


def run_oracle_checks(
    p: Spectrum, n: int, k: int, cap: int | None = None, workers: int | None = 1
) -> VerificationReport:
    """
    Exact checks at small n:
      - total RSK mass is 1
      - word-sum and pair-sum expected fidelities agree
      - second-row moment bound
    and, when p has a spectral gap:
      - first-row bound and the overhang identity E[Σb] = E[λ₁] − p_d·n
      - both row tail bounds and the concentration bound
    """
    dist = exact_rsk_distribution(p, n, cap)
    word_sum = word_sum_expected_fidelity(p, n, k, cap=cap, workers=workers)
    pair_sum = pair_sum_expected_fidelity(p, n, k, cap=cap)
    mean_lambda1, second_moment = exact_row_moments(p, n, cap)

    checks = [
        CheckResult.exact("total_mass", dist.total(), "==", Fraction(1)),
        CheckResult.exact("word_sum_equals_pair_sum", word_sum, "==", pair_sum),
        CheckResult.exact("second_row_moment", second_moment, "<=", second_row_bound(p, n)),
    ]

    if p.gap > 0 and n >= 1:
        overhang_mean = exact_overhang_mean(p, n, cap)
        breakdown = exact_event_breakdown(p, n, cap)
        g = p.gap
        checks += [
            CheckResult.exact("first_row_mean", mean_lambda1, "<=", first_row_bound(p, n)),
            CheckResult.exact("overhang_identity", overhang_mean, "==", mean_lambda1 - p.p_max * n),
            CheckResult.exact("overhang_mean", overhang_mean, "<=", overhang_mean_bound(p)),
            CheckResult.exact("overhang_mean_gap_form", overhang_mean_bound(p), "<=", (1 - p.p_max) / g),
            CheckResult.exact("first_row_tail", breakdown.first_row_low, "<=", first_row_tail_bound(p, n)),
            CheckResult.exact("second_row_tail", breakdown.second_row_high, "<=", second_row_tail_bound(p, n)),
            CheckResult.exact("event_failure", breakdown.event_failure, "<=", concentration_bound(p, n)),
        ]
    else:
        logger.info("oracle_gap_checks_skipped", spectrum=str(p), n=n)

    report = VerificationReport(
        title="oracle",
        parameters={"spectrum": str(p), "n": n, "k": k, "expected_fidelity": str(word_sum)},
        checks=checks,
    )
    logger.info("oracle_checks_done", n=n, k=k, passed=report.passed)
    return report
