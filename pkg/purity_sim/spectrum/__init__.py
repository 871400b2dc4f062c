"""
spectrum/ — Probability spectra of the noisy state, word sampling and sample-complexity formulas.
"""
from purity_sim.spectrum.bounds import (
    concentration_bound,
    event_threshold,
    fine_grained_rate,
    first_row_bound,
    first_row_tail_bound,
    gap_rate,
    guaranteed_fidelity,
    meets_event_margin,
    overhang_mean_bound,
    qubit_asymptotic_infidelity,
    required_samples,
    second_row_bound,
    second_row_tail_bound,
)
from purity_sim.spectrum.parsing import parse_spectrum
from purity_sim.spectrum.sampling import depolarizing, letter_cdf, sample_letters, sample_word
from purity_sim.spectrum.schemas import RunParameters, Spectrum

__all__ = [
    "RunParameters",
    "Spectrum",
    "concentration_bound",
    "depolarizing",
    "event_threshold",
    "fine_grained_rate",
    "first_row_bound",
    "first_row_tail_bound",
    "gap_rate",
    "guaranteed_fidelity",
    "letter_cdf",
    "meets_event_margin",
    "overhang_mean_bound",
    "parse_spectrum",
    "qubit_asymptotic_infidelity",
    "required_samples",
    "sample_letters",
    "sample_word",
    "second_row_bound",
    "second_row_tail_bound",
]
