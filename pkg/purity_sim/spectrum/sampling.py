"""
spectrum/sampling.py — The depolarizing spectrum and i.i.d. word sampling.

Letters are drawn by inverting the cumulative distribution on uniform
doubles. One uniform is consumed per letter, so drawing a word in chunks
consumes the stream exactly like drawing it in one call.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from purity_sim.core.errors import DomainError
from purity_sim.spectrum.schemas import Spectrum
from purity_sim.tableaux.partition import Word


def depolarizing(d: int, eta: float | Fraction | int) -> Spectrum:
    """Spectrum of (1−η)|v_d⟩⟨v_d| + η·I/d; exact when η is a Fraction or int."""
    if d < 2:
        raise DomainError(f"Depolarizing noise needs d >= 2, got d={d}")
    if not 0 <= eta <= 1:
        raise DomainError(f"Noise rate η must lie in [0, 1], got {eta}")
    if isinstance(eta, float):
        low = eta / d
        return Spectrum.of([low] * (d - 1) + [1.0 - eta + low])
    eta = Fraction(eta)
    low = eta / d
    return Spectrum.of([low] * (d - 1) + [1 - eta + low])


def letter_cdf(p: Spectrum) -> np.ndarray:
    """Cumulative distribution of letters 1..d in float64."""
    cdf = np.cumsum(np.asarray(p.as_floats(), dtype=np.float64))
    cdf[-1] = 1.0
    return cdf


def sample_letters(cdf: np.ndarray, size: int, stream: np.random.Generator) -> np.ndarray:
    """`size` i.i.d. letters (1-based, int64) from the distribution with the given CDF."""
    u = stream.random(size)
    letters = np.searchsorted(cdf, u, side="right") + 1
    return np.minimum(letters, len(cdf))


def sample_word(p: Spectrum, n: int, stream: np.random.Generator) -> Word:
    if n < 0:
        raise DomainError(f"Word length must be nonnegative, got {n}")
    letters = sample_letters(letter_cdf(p), n, stream)
    return Word(tuple(int(x) for x in letters), p.d)
