"""
cli/ — Command-line front end: rsk, fidelity, simulate, sweep, bounds, oracle, lemmas.
"""
from purity_sim.cli.config import RunConfig
from purity_sim.cli.parser import build_parser, main

__all__ = ["RunConfig", "build_parser", "main"]
