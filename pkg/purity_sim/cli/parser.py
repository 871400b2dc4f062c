"""
cli/parser.py — argparse front end and exit-code mapping.

Exit codes: 0 success, 2 usage or input domain, 3 invalid spectrum or zero
gap, 4 resource cap exceeded, 5 verification failed.
"""
from __future__ import annotations

import argparse
import sys

from pydantic import ValidationError

from purity_sim import __version__
from purity_sim.cli.commands import COMMANDS
from purity_sim.cli.config import RunConfig
from purity_sim.cli.output import emit
from purity_sim.core.errors import PuritySimError, VerificationError
from purity_sim.utils.logging import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2

CSV_COLUMNS = """\
columns:
  rsk       word, d, shape, recording, insertion, type, lis, lis_matches
  fidelity  word, d, k, shape, mu, overhangs, fidelity, fidelity_float,
            fallback_used, fidelity_via_cg, lower_bound
  simulate  spectrum, n, k, trials, seed, mean_fidelity, fidelity_std_error,
            ci_halfwidth, ci_defined, mean_lambda1, lambda1_std_error,
            second_row_moment, second_row_std_error, mean_overhang_sum,
            overhang_std_error, fallback_rate, event_failure_rate,
            event_failure_ci_low, event_failure_ci_high, first_row_low_rate,
            second_row_high_rate, event_bound_trials, event_bound_violations,
            delta, target_fidelity, meets_target, guaranteed_fidelity,
            event_margin_met
  sweep     --n-grid: simulate columns + scaled_infidelity, ratio_to_previous,
            gap_rate, fine_grained_rate, reference_rate
            --delta-grid: delta, target_fidelity, slack, passed + estimation columns
  bounds    spectrum, k, delta, required_samples, gap, gap_rate,
            fine_grained_rate, qubit_reference_rate, guaranteed_fidelity,
            event_threshold
  oracle    name, observed, relation, bound, allowance, passed
  lemmas    name, observed, relation, bound, allowance, passed
"""


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["csv", "json"], default="csv", help="Output format")
    parser.add_argument("--out", default=None, help="Write results here instead of stdout")
    parser.add_argument("--workers", type=int, default=None, help="Worker processes (0 = all cores)")
    parser.add_argument("--log-level", default=None, help="Override PURITY_LOG_LEVEL")


def _spectrum(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--spectrum",
        required=True,
        help='Comma-separated probabilities ("0.1,0.9", "1/10,9/10") or "depolarizing:d=3,eta=0.3"',
    )


def _sampling(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--trials", type=int, default=1000, help="Monte-Carlo trials")
    parser.add_argument("--seed", type=int, default=0, help="Root seed; trial i uses stream (seed, i)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="purity-sim",
        description="Simulate and verify k-copy purity amplification via the RSK correspondence.",
        epilog=CSV_COLUMNS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("rsk", "Run RSK on a word and cross-check λ₁ against the longest weakly increasing subsequence"),
        ("fidelity", "Exact output fidelity of RSK(word), re-derived via Clebsch–Gordan coefficients"),
    ):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("word", nargs="?", default=None, help='Letters, e.g. "2 1 2"; read from stdin if omitted')
        cmd.add_argument("--d", type=int, default=None, help="Alphabet size (default: largest letter)")
        if name == "fidelity":
            cmd.add_argument("--k", type=int, default=1, help="Output copies")
        _common(cmd)

    simulate = sub.add_parser("simulate", help="Estimate the expected fidelity by Monte Carlo")
    _spectrum(simulate)
    simulate.add_argument("--n", type=int, required=True, help="Input copies")
    simulate.add_argument("--k", type=int, default=1, help="Output copies")
    simulate.add_argument("--delta", type=float, default=0.1, help="Target infidelity reported against")
    _sampling(simulate)
    _common(simulate)

    sweep = sub.add_parser("sweep", help="Monte Carlo over a grid of n or δ")
    _spectrum(sweep)
    sweep.add_argument("--k", type=int, default=1, help="Output copies")
    grid = sweep.add_mutually_exclusive_group(required=True)
    grid.add_argument("--n-grid", default=None, help="Comma-separated n values, e.g. 250,500,1000")
    grid.add_argument("--delta-grid", default=None, help="Comma-separated δ values; n = required samples")
    sweep.add_argument("--delta", type=float, default=0.1, help="Target infidelity for --n-grid rows")
    _sampling(sweep)
    _common(sweep)

    bounds = sub.add_parser("bounds", help="Required samples and rate diagnostics")
    _spectrum(bounds)
    bounds.add_argument("--k", type=int, default=1, help="Output copies")
    bounds.add_argument("--delta", type=float, default=0.1, help="Target infidelity")
    _common(bounds)

    oracle = sub.add_parser("oracle", help="Exact enumeration checks at small n")
    _spectrum(oracle)
    oracle.add_argument("--n", type=int, required=True, help="Input copies")
    oracle.add_argument("--k", type=int, default=1, help="Output copies")
    oracle.add_argument("--cap", type=int, default=None, help="Largest n allowed for enumeration")
    _common(oracle)

    lemmas = sub.add_parser("lemmas", help="Sampled checks of the row lemmas and concentration bound")
    _spectrum(lemmas)
    lemmas.add_argument("--n", type=int, required=True, help="Input copies")
    _sampling(lemmas)
    _common(lemmas)

    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    fields = {key: value for key, value in vars(args).items() if value is not None and key != "log_level"}
    return RunConfig(**fields)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level)

    try:
        config = _config(args)
    except ValidationError as exc:
        print(f"purity-sim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        outcome = COMMANDS[config.command](config)
    except ValidationError as exc:
        print(f"purity-sim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PuritySimError as exc:
        logger.error("cli_command_failed", command=config.command, error=str(exc), exit_code=exc.exit_code)
        print(f"purity-sim: error: {exc}", file=sys.stderr)
        return exc.exit_code

    emit(outcome.rows, config.command, config.format, config.out)
    logger.info("cli_command_done", command=config.command, rows=len(outcome.rows), passed=outcome.passed)
    return EXIT_OK if outcome.passed else VerificationError.exit_code
