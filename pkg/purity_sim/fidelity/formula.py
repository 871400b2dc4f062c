"""
fidelity/formula.py — Closed-form output fidelity of the purity amplification channel.

For λ with λ₁ − λ₂ ≥ k and overhangs b of T:

    F(λ, T) = ∏_{i=2}^{d} (Δ_i − b_{i−1})^{↓k} / Δ_i^{↓k},   Δ_i = λ₁ − λ_i + i − 2.

Otherwise the channel outputs the maximally mixed state on k qudits, whose
overlap with |v_d⟩^{⊗k} is d^{−k}.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from math import prod

from purity_sim.core.errors import DomainError, InconsistentInputError
from purity_sim.tableaux.partition import Overhangs, Partition, as_partition, overhangs
from purity_sim.tableaux.tableau import SemistandardTableau


def falling_factorial(n: int, k: int) -> int:
    """n^{↓k} = n(n−1)⋯(n−k+1); the empty product for k = 0."""
    if k < 0:
        raise DomainError(f"Falling factorial order must be nonnegative, got {k}")
    return prod(range(n, n - k, -1))


@dataclass(frozen=True, slots=True)
class DeltaVector:
    """Δ_i for i = 2..d, stored at index i − 2."""

    values: tuple[int, ...]

    @classmethod
    def of(cls, lam: Partition, d: int) -> DeltaVector:
        top = lam.row(1)
        return cls(tuple(top - lam.row(i) + i - 2 for i in range(2, d + 1)))

    def at(self, i: int) -> int:
        return self.values[i - 2]


@dataclass(frozen=True, slots=True)
class FidelityValue:
    value: Fraction | float
    fallback_used: bool

    def __post_init__(self) -> None:
        if not 0 <= self.value <= 1:
            raise AssertionError(f"Fidelity {self.value} escaped [0, 1]")


def _check_d_k(d: int, k: int) -> None:
    if d < 2:
        raise DomainError(f"Fidelity needs an alphabet of size d >= 2, got d={d}")
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def fidelity_from_shapes(
    lam: Partition | Iterable[int],
    mu: Partition | Iterable[int],
    k: int,
    d: int,
    exact: bool = True,
) -> FidelityValue:
    """F from λ = shape(T) and μ = shape(T^{<d}) alone."""
    lam, mu = as_partition(lam), as_partition(mu)
    _check_d_k(d, k)
    if lam.row(1) - lam.row(2) < k:
        return FidelityValue(Fraction(1, d**k) if exact else float(d) ** -k, fallback_used=True)

    b = overhangs(lam, mu, d).b
    delta = DeltaVector.of(lam, d).values
    if exact:
        value = prod(
            (Fraction(falling_factorial(D - bi, k), falling_factorial(D, k)) for D, bi in zip(delta, b)),
            start=Fraction(1),
        )
        return FidelityValue(value, fallback_used=False)

    value = 1.0
    for D, bi in zip(delta, b):
        if D - bi < k:
            return FidelityValue(0.0, fallback_used=False)
        for j in range(k):
            value *= (D - bi - j) / (D - j)
    return FidelityValue(value, fallback_used=False)


def fidelity(lam: Partition | Iterable[int], tableau: SemistandardTableau, k: int, exact: bool = True) -> FidelityValue:
    lam = as_partition(lam)
    if tableau.shape != lam:
        raise InconsistentInputError(f"Tableau shape {tableau.shape} does not match λ={lam}")
    mu = tableau.restrict_below(tableau.d).shape
    return fidelity_from_shapes(lam, mu, k, tableau.d, exact=exact)


def fidelity_lower_bound(lam: Partition | Iterable[int], b: Overhangs, k: int) -> Fraction:
    """1 − k/(λ₁ − λ₂ − k + 1) · Σ b_i; not clamped, may be negative."""
    lam = as_partition(lam)
    gap = lam.row(1) - lam.row(2)
    if k < 1 or gap < k:
        raise DomainError(f"The lower bound needs λ₁ − λ₂ ≥ k ≥ 1, got λ={lam}, k={k}")
    return 1 - Fraction(k, gap - k + 1) * b.total


def event_fidelity_lower_bound(b, k: int, g: Fraction | float, n: int):
    """
    1 − 4k/(g·n) · Σ b_i, valid whenever λ₁ − λ₂ ≥ ½·g·n ≥ 2k.

    `b` is an Overhangs or the overhang total itself; a numpy array of
    totals gives one bound per trial.
    """
    if g <= 0 or n < 1:
        raise DomainError(f"Need a positive gap and n >= 1, got g={g}, n={n}")
    total = b.total if isinstance(b, Overhangs) else b
    return 1 - 4 * k * total / (g * n)
