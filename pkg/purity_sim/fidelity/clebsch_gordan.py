"""
fidelity/clebsch_gordan.py — Independent re-derivation of the fidelity.

Removing the k letters d from the end of row 1 one box at a time, each step
contributes the squared dual Clebsch–Gordan coefficient

    ∏_{i=1}^{d−1} (λ₁ − μ_i + i − 1) / ∏_{i=2}^{d} (λ₁ − λ_i + i − 1),

and the Weyl dimension ratio dim Q_λ / dim Q_{λ−k·e₁} restores normalisation.
The telescoped product must equal fidelity() exactly.
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction
from itertools import combinations
from math import prod

from purity_sim.core.errors import DomainError, InconsistentInputError
from purity_sim.tableaux.partition import Partition, as_partition
from purity_sim.tableaux.tableau import SemistandardTableau


def weyl_dim(nu: Partition | Iterable[int], d: int) -> int:
    """dim Q^d_ν = ∏_{i<j} (ν_i − ν_j + j − i)/(j − i)."""
    if isinstance(nu, Partition):
        parts = nu.padded(d)
    else:
        parts = tuple(nu)
        if len(parts) != d:
            raise DomainError(f"Weyl dimension needs exactly d={d} parts, got {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError(f"Weyl dimension needs a weakly decreasing ν, got {parts}")
    num = prod(parts[i] - parts[j] + j - i for i, j in combinations(range(d), 2))
    den = prod(j - i for i, j in combinations(range(d), 2))
    value, remainder = divmod(num, den)
    if remainder:
        raise AssertionError(f"Weyl dimension of {parts} is not an integer")
    return value


def cg_coeff_sq(lam: Partition | Iterable[int], mu: Partition | Iterable[int], d: int) -> Fraction:
    """
    Squared coefficient for removing the final box of row 1 (letter d) from a tableau of shape λ.

    Only μ_1..μ_{d−1} enter the product, so rows of μ past d − 1 are ignored:
    for d = 2, λ=(3,1) with μ=(2,1) gives 1/3, the same as μ=(2,).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if d < 2:
        raise DomainError(f"Clebsch–Gordan coefficients need d >= 2, got d={d}")
    if lam.row(1) - lam.row(2) < 1:
        raise DomainError(f"Row 1 of λ={lam} must be strictly longer than row 2")
    if lam.length > d:
        raise InconsistentInputError(f"Shapes λ={lam}, μ={mu} do not fit alphabet size {d}")
    top = lam.row(1)
    if mu.row(1) >= top:
        return Fraction(0)
    if any(mu.row(i) > lam.row(i) for i in range(2, d)):
        raise InconsistentInputError(f"μ={mu} is not contained in λ={lam}")
    num = prod(top - mu.row(i) + i - 1 for i in range(1, d))
    den = prod(top - lam.row(i) + i - 1 for i in range(2, d + 1))
    return Fraction(num, den)


def fidelity_via_cg(lam: Partition | Iterable[int], tableau: SemistandardTableau, k: int) -> Fraction:
    lam = as_partition(lam)
    if tableau.shape != lam:
        raise InconsistentInputError(f"Tableau shape {tableau.shape} does not match λ={lam}")
    if k < 1 or lam.row(1) - lam.row(2) < k:
        raise DomainError(f"fidelity_via_cg needs λ₁ − λ₂ ≥ k ≥ 1, got λ={lam}, k={k}")
    d = tableau.d
    mu = tableau.restrict_below(d).shape
    value = Fraction(weyl_dim(lam, d), weyl_dim(lam.remove_from_first_row(k), d))
    for t in range(k):
        coeff = cg_coeff_sq(lam.remove_from_first_row(t), mu, d)
        if coeff == 0:
            return Fraction(0)
        value *= coeff
    return value
