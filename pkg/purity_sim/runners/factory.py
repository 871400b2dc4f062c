"""
runners/factory.py — Return the correct runner for a worker count.
"""
from purity_sim.config import settings
from purity_sim.runners.base import BaseRunner


def get_runner(workers: int | None = None) -> BaseRunner:
    count = settings.resolve_workers(workers)

    if count == 1:
        from purity_sim.runners.inline import InlineRunner
        return InlineRunner()

    from purity_sim.runners.process import ProcessRunner
    return ProcessRunner(workers=count)
