"""
fidelity/ — The combinatorial fidelity formula, its lower bounds and the Clebsch–Gordan re-derivation.
"""
from purity_sim.fidelity.clebsch_gordan import cg_coeff_sq, fidelity_via_cg, weyl_dim
from purity_sim.fidelity.formula import (
    DeltaVector,
    FidelityValue,
    event_fidelity_lower_bound,
    falling_factorial,
    fidelity,
    fidelity_from_shapes,
    fidelity_lower_bound,
)

__all__ = [
    "DeltaVector",
    "FidelityValue",
    "cg_coeff_sq",
    "event_fidelity_lower_bound",
    "falling_factorial",
    "fidelity",
    "fidelity_from_shapes",
    "fidelity_lower_bound",
    "fidelity_via_cg",
    "weyl_dim",
]
