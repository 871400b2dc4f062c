"""
oracle/exact.py — Exact expectations under the RSK distribution at small n.

Two independent enumerations are kept as mutual oracles:
  word sum : Σ_{w ∈ [d]^n} p^{h(w)} · F(RSK(w))
  pair sum : Σ_{λ ⊢ n} Σ_{T ∈ SSYT(λ, d)} dim(λ) · p^T · F(λ, T)
All arithmetic is over Fractions; no float enters this module.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import prod

from purity_sim.config import settings
from purity_sim.core.errors import DomainError, ResourceLimitError, VerificationError
from purity_sim.fidelity.formula import fidelity
from purity_sim.runners.factory import get_runner
from purity_sim.spectrum.bounds import event_threshold
from purity_sim.spectrum.schemas import Spectrum
from purity_sim.tableaux.oracles import enumerate_ssyt, num_syt
from purity_sim.tableaux.partition import Partition, Word, overhangs, partitions_of
from purity_sim.tableaux.rsk import rsk
from purity_sim.tableaux.tableau import SemistandardTableau
from purity_sim.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class RskDistribution:
    """Exact law of (λ, T) under RSK^n(p); λ is T's shape."""

    d: int
    n: int
    masses: dict[SemistandardTableau, Fraction]

    def items(self) -> Iterator[tuple[Partition, SemistandardTableau, Fraction]]:
        for tableau, mass in self.masses.items():
            yield tableau.shape, tableau, mass

    def total(self) -> Fraction:
        return sum(self.masses.values(), Fraction(0))

    def shape_marginal(self) -> dict[Partition, Fraction]:
        marginal: dict[Partition, Fraction] = {}
        for lam, _, mass in self.items():
            marginal[lam] = marginal.get(lam, Fraction(0)) + mass
        return marginal

    def expectation(self, fn: Callable[[Partition, SemistandardTableau], Fraction | int]) -> Fraction:
        return sum((mass * fn(lam, tableau) for lam, tableau, mass in self.items()), Fraction(0))

    def probability(self, event: Callable[[Partition], bool]) -> Fraction:
        return sum((mass for lam, mass in self.shape_marginal().items() if event(lam)), Fraction(0))


def _check_inputs(p: Spectrum, n: int, cap: int | None) -> None:
    if not p.exact:
        raise DomainError("The exact oracle needs a rational spectrum")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    n_limit = settings.enumeration_max_n if cap is None else cap
    if n > n_limit:
        raise ResourceLimitError(f"The exact oracle is capped at n={n_limit}, got n={n}")
    if p.d > settings.enumeration_max_d:
        raise ResourceLimitError(f"The exact oracle is capped at d={settings.enumeration_max_d}, got d={p.d}")


def exact_rsk_distribution(p: Spectrum, n: int, cap: int | None = None) -> RskDistribution:
    _check_inputs(p, n, cap)
    return _distribution(p, n)


@lru_cache(maxsize=64)
def _distribution(p: Spectrum, n: int) -> RskDistribution:
    masses: dict[SemistandardTableau, Fraction] = {}
    for lam in partitions_of(n, max_parts=p.d):
        dim = num_syt(lam)
        for tableau in enumerate_ssyt(lam, p.d, cap=n):
            masses[tableau] = dim * tableau.weight(p.p)
    logger.debug("oracle_enumeration", d=p.d, n=n, tableaux=len(masses))
    return RskDistribution(d=p.d, n=n, masses=masses)


def _word_sum_for_leading_letter(task: tuple[Spectrum, int, int, int]) -> Fraction:
    p, n, k, first = task
    total = Fraction(0)
    for rest in product(range(1, p.d + 1), repeat=n - 1):
        word = Word((first, *rest), p.d)
        weight = prod((p.p[x - 1] for x in word.letters), start=Fraction(1))
        if weight == 0:
            continue
        result = rsk(word)
        total += weight * fidelity(result.shape, result.insertion, k).value
    return total


def word_sum_expected_fidelity(
    p: Spectrum, n: int, k: int, cap: int | None = None, workers: int | None = 1
) -> Fraction:
    """E[F] by enumerating every word; partitioned across workers by leading letter."""
    _check_inputs(p, n, cap)
    if p.d**n > settings.word_sum_max_words:
        raise ResourceLimitError(f"Word-sum enumeration of {p.d}^{n} words exceeds the configured cap")
    if n == 0:
        return fidelity(Partition(()), SemistandardTableau.empty(p.d), k).value
    tasks = [(p, n, k, first) for first in range(1, p.d + 1)]
    with get_runner(workers) as runner:
        partials = runner.map(_word_sum_for_leading_letter, tasks)
    return sum(partials, Fraction(0))


def pair_sum_expected_fidelity(p: Spectrum, n: int, k: int, cap: int | None = None) -> Fraction:
    """E[F] by enumerating (λ, T) pairs weighted by dim(λ)·p^T."""
    dist = exact_rsk_distribution(p, n, cap)
    return dist.expectation(lambda lam, tableau: fidelity(lam, tableau, k).value)


def exact_expected_fidelity(
    p: Spectrum, n: int, k: int, cap: int | None = None, workers: int | None = 1
) -> Fraction:
    word_sum = word_sum_expected_fidelity(p, n, k, cap=cap, workers=workers)
    pair_sum = pair_sum_expected_fidelity(p, n, k, cap=cap)
    if word_sum != pair_sum:
        raise VerificationError(f"Word sum {word_sum} and pair sum {pair_sum} disagree for p={p}, n={n}, k={k}")
    logger.info("oracle_expected_fidelity", spectrum=str(p), n=n, k=k, value=str(word_sum))
    return word_sum


def exact_row_moments(p: Spectrum, n: int, cap: int | None = None) -> tuple[Fraction, Fraction]:
    """(E[λ₁], E[(λ₂ − p_{d−1}·n)²])."""
    marginal = exact_rsk_distribution(p, n, cap).shape_marginal()
    centre = p.p_second * n
    first = sum((mass * lam.row(1) for lam, mass in marginal.items()), Fraction(0))
    second = sum((mass * (lam.row(2) - centre) ** 2 for lam, mass in marginal.items()), Fraction(0))
    return first, second


def exact_overhang_mean(p: Spectrum, n: int, cap: int | None = None) -> Fraction:
    """E[Σ b_i], summed tableau by tableau from the overhangs themselves."""
    dist = exact_rsk_distribution(p, n, cap)
    return dist.expectation(
        lambda lam, tableau: overhangs(lam, tableau.restrict_below(p.d).shape, p.d).total
    )


def exact_event_probability(p: Spectrum, n: int, cap: int | None = None) -> Fraction:
    """Pr[λ₁ − λ₂ ≥ ½·g·n]."""
    threshold = event_threshold(p, n)
    dist = exact_rsk_distribution(p, n, cap)
    return dist.probability(lambda lam: lam.row(1) - lam.row(2) >= threshold)


@dataclass(frozen=True)
class EventBreakdown:
    """Exact probabilities of the bad event and the two row deviations covering it."""

    event_failure: Fraction
    first_row_low: Fraction
    second_row_high: Fraction


def exact_event_breakdown(p: Spectrum, n: int, cap: int | None = None) -> EventBreakdown:
    g = p.require_gap()
    quarter = g * n / 4
    dist = exact_rsk_distribution(p, n, cap)
    threshold = event_threshold(p, n)
    return EventBreakdown(
        event_failure=dist.probability(lambda lam: lam.row(1) - lam.row(2) < threshold),
        first_row_low=dist.probability(lambda lam: lam.row(1) <= p.p_max * n - quarter),
        second_row_high=dist.probability(lambda lam: lam.row(2) >= p.p_second * n + quarter),
    )
