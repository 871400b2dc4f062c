"""
montecarlo/ — Large-n sampled verification via streaming RSK.
"""
from purity_sim.montecarlo.checks import (
    check_lemmas,
    event_bound_check,
    lemma_checks,
    reference_rate,
    scaling_study,
    verify_theorem,
)
from purity_sim.montecarlo.estimator import (
    TrialColumns,
    batch_chunk_length,
    estimate,
    run_trial,
    simulate_trials,
    summarise,
)
from purity_sim.montecarlo.schemas import EstimationResult, LemmaReport, ScalingRow, TheoremReport, TrialRecord
from purity_sim.montecarlo.streaming import BatchTableaux, StreamingTableau, batch_fidelity

__all__ = [
    "BatchTableaux",
    "EstimationResult",
    "LemmaReport",
    "ScalingRow",
    "StreamingTableau",
    "TheoremReport",
    "TrialColumns",
    "TrialRecord",
    "batch_chunk_length",
    "batch_fidelity",
    "check_lemmas",
    "estimate",
    "event_bound_check",
    "lemma_checks",
    "reference_rate",
    "run_trial",
    "scaling_study",
    "simulate_trials",
    "summarise",
    "verify_theorem",
]
