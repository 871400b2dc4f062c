"""
runners/inline.py — Runs every item in the calling process.
"""
from purity_sim.runners.base import BaseRunner


class InlineRunner(BaseRunner):
    workers = 1

    def map(self, fn, items):
        return [fn(item) for item in items]

    def close(self) -> None:
        pass
