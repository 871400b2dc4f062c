"""
oracle/ — Exact enumeration of the RSK distribution at small n.
"""
from purity_sim.oracle.checks import run_oracle_checks
from purity_sim.oracle.exact import (
    EventBreakdown,
    RskDistribution,
    exact_event_breakdown,
    exact_event_probability,
    exact_expected_fidelity,
    exact_overhang_mean,
    exact_row_moments,
    exact_rsk_distribution,
    pair_sum_expected_fidelity,
    word_sum_expected_fidelity,
)

__all__ = [
    "EventBreakdown",
    "RskDistribution",
    "exact_event_breakdown",
    "exact_event_probability",
    "exact_expected_fidelity",
    "exact_overhang_mean",
    "exact_row_moments",
    "exact_rsk_distribution",
    "pair_sum_expected_fidelity",
    "run_oracle_checks",
    "word_sum_expected_fidelity",
]
