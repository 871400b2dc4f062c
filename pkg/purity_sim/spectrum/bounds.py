"""
spectrum/bounds.py — Sample-complexity and concentration formulas.

Every formula works in both number modes: exact Fractions for an exact
Spectrum, floats otherwise. Constants:
  required samples      n ≥ 12k + (2032 + 4k)/δ · (1−p_d)/g²
  first-row tail        Pr[λ₁ ≤ p_d n − gn/4] ≤ 16/n · (1−p_d)/g²   (Chebyshev on h_d)
  second-row tail       Pr[λ₂ ≥ p_{d-1} n + gn/4] ≤ 2016/n · (1−p_d)/g² (Markov on X²)
  denominator event     Pr[λ₁ − λ₂ < gn/2] ≤ 2032/n · (1−p_d)/g²
"""
from __future__ import annotations

from fractions import Fraction
from math import ceil

from purity_sim.core.errors import DomainError
from purity_sim.spectrum.schemas import Probability, Spectrum

LINEAR_TERM = 12
SAMPLE_CONSTANT = 2032
PER_COPY_CONSTANT = 4
FIRST_ROW_TAIL_CONSTANT = 16
SECOND_ROW_TAIL_CONSTANT = 2016
CONCENTRATION_CONSTANT = FIRST_ROW_TAIL_CONSTANT + SECOND_ROW_TAIL_CONSTANT
SECOND_MOMENT_PEAK_CONSTANT = 84
SECOND_MOMENT_MASS_CONSTANT = 42


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")


def _decimal(value) -> Fraction:
    return Fraction(repr(float(value)))


def gap_rate(p: Spectrum) -> Probability:
    """(1 − p_d)/g², the rate governing every bound below."""
    g = p.require_gap()
    return (p.one() - p.p_max) / (g * g)


def required_samples(p: Spectrum, k: int, delta: float | Probability) -> int:
    """Copies sufficient for fidelity ≥ 1 − δ with k output copies."""
    _check_k(k)
    delta = p.coerce(delta)
    if not 0 < delta <= 1:
        raise DomainError(f"δ must lie in (0, 1], got {delta}")
    rate = gap_rate(p)
    if not p.exact:
        # ceil of a float product can land one above the true count
        top, second = _decimal(p.p_max), _decimal(p.p_second)
        delta, rate = _decimal(delta), (1 - top) / (top - second) ** 2
    return ceil(LINEAR_TERM * k + (SAMPLE_CONSTANT + PER_COPY_CONSTANT * k) / delta * rate)


def guaranteed_fidelity(p: Spectrum, n: int, k: int) -> Probability:
    """The nonasymptotic guarantee 1 − (2032 + 4k)/n · (1−p_d)/g² at a given n."""
    _check_n(n)
    _check_k(k)
    return p.one() - (SAMPLE_CONSTANT + PER_COPY_CONSTANT * k) * gap_rate(p) / n


def fine_grained_rate(p: Spectrum) -> Probability:
    """Σ_{i<d} p_i/(p_d − p_i)², reported alongside gap_rate."""
    p.require_gap()
    top = p.p_max
    return sum((pi / ((top - pi) * (top - pi)) for pi in p.p[:-1]))


def qubit_asymptotic_infidelity(p: Spectrum, n: int) -> Probability:
    """Leading-order qubit infidelity p_1 / ((p_2 − p_1)² · n)."""
    if p.d != 2:
        raise DomainError(f"The qubit reference rate needs d = 2, got d = {p.d}")
    _check_n(n)
    g = p.require_gap()
    return p.p[0] / (g * g) / n


def event_threshold(p: Spectrum, n: int) -> Probability:
    """½·g·n; the good event holds when λ₁ − λ₂ reaches it."""
    return p.require_gap() * n / 2


def meets_event_margin(p: Spectrum, n: int, k: int) -> bool:
    """½·g·n ≥ 2k, which makes λ₁ − λ₂ ≥ k on the good event."""
    return event_threshold(p, n) >= 2 * k


def overhang_mean_bound(p: Spectrum) -> Probability:
    """Σ_{i<d} p_i/(p_d − p_i) ≥ E[λ₁] − p_d·n = E[Σ b_i]."""
    p.require_gap()
    top = p.p_max
    return sum((pi / (top - pi) for pi in p.p[:-1]))


def first_row_bound(p: Spectrum, n: int) -> Probability:
    """E[λ₁] ≤ p_d·n + Σ_{i<d} p_i/(p_d − p_i)."""
    return p.p_max * n + overhang_mean_bound(p)


def second_row_bound(p: Spectrum, n: int) -> Probability:
    """E[(λ₂ − p_{d-1}·n)²] ≤ 84·p_{d-1}·n + 42·(1 − p_d)·n."""
    return SECOND_MOMENT_PEAK_CONSTANT * p.p_second * n + SECOND_MOMENT_MASS_CONSTANT * (p.one() - p.p_max) * n


def _capped(value: Probability, p: Spectrum) -> Probability:
    return min(p.one(), value)


def first_row_tail_bound(p: Spectrum, n: int) -> Probability:
    _check_n(n)
    return _capped(FIRST_ROW_TAIL_CONSTANT * gap_rate(p) / n, p)


def second_row_tail_bound(p: Spectrum, n: int) -> Probability:
    _check_n(n)
    return _capped(SECOND_ROW_TAIL_CONSTANT * gap_rate(p) / n, p)


def concentration_bound(p: Spectrum, n: int) -> Probability:
    """min(1, 2032/n · (1−p_d)/g²) bounding Pr[λ₁ − λ₂ < ½·g·n]."""
    _check_n(n)
    return _capped(CONCENTRATION_CONSTANT * gap_rate(p) / n, p)
