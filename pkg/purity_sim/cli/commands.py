"""
cli/commands.py — One function per subcommand.

Each command takes a validated RunConfig and returns the rows to emit plus
whether every check it ran passed. Errors propagate as PuritySimError
subclasses; main() turns them into exit codes.
"""
from __future__ import annotations

import sys
from typing import NamedTuple

from purity_sim.cli.config import RunConfig
from purity_sim.cli.output import Row
from purity_sim.core.errors import DomainError
from purity_sim.core.reports import VerificationReport
from purity_sim.fidelity.clebsch_gordan import fidelity_via_cg
from purity_sim.fidelity.formula import fidelity, fidelity_lower_bound
from purity_sim.montecarlo.checks import check_lemmas, reference_rate, verify_theorem
from purity_sim.montecarlo.estimator import estimate
from purity_sim.montecarlo.schemas import EstimationResult
from purity_sim.oracle.checks import run_oracle_checks
from purity_sim.spectrum.bounds import (
    event_threshold,
    fine_grained_rate,
    gap_rate,
    guaranteed_fidelity,
    meets_event_margin,
    qubit_asymptotic_infidelity,
    required_samples,
)
from purity_sim.spectrum.parsing import parse_spectrum
from purity_sim.spectrum.schemas import RunParameters, Spectrum
from purity_sim.tableaux.oracles import lis_weak
from purity_sim.tableaux.partition import Word, overhangs
from purity_sim.tableaux.rsk import rsk


class CommandOutcome(NamedTuple):
    rows: list[Row]
    passed: bool = True


def _read_word(config: RunConfig, min_d: int = 1) -> Word:
    text = config.word if config.word is not None else sys.stdin.read()
    if not text.strip():
        raise DomainError("No word given on the command line or standard input")
    word = Word.parse(text, config.d)
    if config.d is None and word.d < min_d:
        word = Word(word.letters, min_d)
    return word


def cmd_rsk(config: RunConfig) -> CommandOutcome:
    word = _read_word(config)
    result = rsk(word)
    lis = lis_weak(word)
    row = {
        "word": " ".join(str(x) for x in word),
        "d": word.d,
        "shape": result.shape.parts,
        "recording": str(result.recording),
        "insertion": str(result.insertion),
        "type": result.insertion.type,
        "lis": lis,
        "lis_matches": lis == result.shape.row(1),
    }
    return CommandOutcome([row], passed=bool(row["lis_matches"]))


def cmd_fidelity(config: RunConfig) -> CommandOutcome:
    word = _read_word(config, min_d=2)
    result = rsk(word)
    lam, tableau, k = result.shape, result.insertion, config.k
    mu = tableau.restrict_below(word.d).shape
    b = overhangs(lam, mu, word.d)
    value = fidelity(lam, tableau, k)

    via_cg = lower = None
    if not value.fallback_used:
        via_cg = fidelity_via_cg(lam, tableau, k)
        lower = fidelity_lower_bound(lam, b, k)
    row = {
        "word": " ".join(str(x) for x in word),
        "d": word.d,
        "k": k,
        "shape": lam.parts,
        "mu": mu.parts,
        "overhangs": b.b,
        "fidelity": value.value,
        "fidelity_float": float(value.value),
        "fallback_used": value.fallback_used,
        "fidelity_via_cg": via_cg,
        "lower_bound": lower,
    }
    passed = via_cg is None or (via_cg == value.value and lower <= value.value)
    return CommandOutcome([row], passed=passed)


def _target_columns(p: Spectrum, n: int, k: int, delta: float, result: EstimationResult) -> Row:
    """δ-target and event-margin diagnostics; the gap-dependent ones are None without a gap."""
    target = 1.0 - delta
    gapped = p.gap > 0
    return {
        "delta": delta,
        "target_fidelity": target,
        "meets_target": result.mean_fidelity + result.ci_halfwidth >= target,
        "guaranteed_fidelity": float(guaranteed_fidelity(p, n, k)) if gapped else None,
        "event_margin_met": meets_event_margin(p, n, k) if gapped else None,
    }


def cmd_simulate(config: RunConfig) -> CommandOutcome:
    p = parse_spectrum(config.spectrum)
    params = RunParameters(n=config.n, k=config.k, delta=config.delta)
    result = estimate(p, params, config.trials, config.seed, workers=config.workers)
    return CommandOutcome([result.model_dump() | _target_columns(p, config.n, config.k, config.delta, result)])


def _sweep_n(config: RunConfig) -> list[Row]:
    p = parse_spectrum(config.spectrum)
    rate, fine, reference = float(gap_rate(p)), float(fine_grained_rate(p)), reference_rate(p)
    rows: list[Row] = []
    previous = None
    for n in config.n_grid:
        result = estimate(p, RunParameters(n=n, k=config.k), config.trials, config.seed, workers=config.workers)
        scaled = n * (1.0 - result.mean_fidelity)
        rows.append(
            result.model_dump()
            | {
                "scaled_infidelity": scaled,
                "ratio_to_previous": scaled / previous if previous else None,
                "gap_rate": rate,
                "fine_grained_rate": fine,
                "reference_rate": reference,
            }
            | _target_columns(p, n, config.k, config.delta, result)
        )
        previous = scaled
    return rows


def _sweep_delta(config: RunConfig) -> tuple[list[Row], bool]:
    p = parse_spectrum(config.spectrum)
    rows: list[Row] = []
    passed = True
    for delta in config.delta_grid:
        report = verify_theorem(p, config.k, delta, config.trials, config.seed, workers=config.workers)
        passed &= report.passed
        rows.append(
            {"delta": delta, "target_fidelity": report.target_fidelity, "slack": report.slack, "passed": report.passed}
            | report.estimation.model_dump()
        )
    return rows, passed


def cmd_sweep(config: RunConfig) -> CommandOutcome:
    if config.n_grid:
        return CommandOutcome(_sweep_n(config))
    rows, passed = _sweep_delta(config)
    return CommandOutcome(rows, passed=passed)


def cmd_bounds(config: RunConfig) -> CommandOutcome:
    p = parse_spectrum(config.spectrum, exact=True)
    k = config.k
    n = required_samples(p, k, config.delta)
    row = {
        "spectrum": str(p),
        "k": k,
        "delta": config.delta,
        "required_samples": n,
        "gap": float(p.gap),
        "gap_rate": float(gap_rate(p)),
        "fine_grained_rate": float(fine_grained_rate(p)),
        "qubit_reference_rate": float(qubit_asymptotic_infidelity(p, 1)) if p.d == 2 else None,
        "guaranteed_fidelity": float(guaranteed_fidelity(p, n, k)),
        "event_threshold": float(event_threshold(p, n)),
    }
    return CommandOutcome([row])


def _report_rows(report: VerificationReport) -> list[Row]:
    return [check.model_dump() for check in report.checks]


def cmd_oracle(config: RunConfig) -> CommandOutcome:
    p = parse_spectrum(config.spectrum, exact=True)
    report = run_oracle_checks(p, config.n, config.k, cap=config.cap, workers=config.workers)
    return CommandOutcome(_report_rows(report), passed=report.passed)


def cmd_lemmas(config: RunConfig) -> CommandOutcome:
    p = parse_spectrum(config.spectrum)
    report = check_lemmas(p, config.n, config.trials, config.seed, workers=config.workers)
    return CommandOutcome(_report_rows(report), passed=report.passed)


COMMANDS = {
    "rsk": cmd_rsk,
    "fidelity": cmd_fidelity,
    "simulate": cmd_simulate,
    "sweep": cmd_sweep,
    "oracle": cmd_oracle,
    "bounds": cmd_bounds,
    "lemmas": cmd_lemmas,
}
