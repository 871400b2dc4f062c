"""
runners/process.py — Fans work items out to a process pool.

Executor.map preserves item order, so any reduction over the results is
independent of which worker finished first.
"""
from concurrent.futures import ProcessPoolExecutor

from purity_sim.runners.base import BaseRunner
from purity_sim.utils.logging import get_logger

logger = get_logger(__name__)


class ProcessRunner(BaseRunner):
    def __init__(self, workers: int):
        self.workers = workers
        self._pool: ProcessPoolExecutor | None = None

    def _get_pool(self) -> ProcessPoolExecutor:
        if self._pool is None:
            self._pool = ProcessPoolExecutor(max_workers=self.workers)
            logger.debug("process_pool_started", workers=self.workers)
        return self._pool

    def map(self, fn, items):
        if len(items) <= 1:
            return [fn(item) for item in items]
        return list(self._get_pool().map(fn, items))

    def close(self) -> None:
        if self._pool is not None:
            self._pool.shutdown()
            self._pool = None
