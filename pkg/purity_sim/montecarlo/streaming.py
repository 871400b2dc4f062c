"""
montecarlo/streaming.py — Count-matrix RSK engines that never store the word.

Both engines keep two count matrices per trial: T itself, and a second
tableau fed only the letters below d, whose shape is μ = shape(T^{<d}).
StreamingTableau runs one trial in pure Python; BatchTableaux advances a
whole batch of trials one letter at a time with numpy.
"""
from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from purity_sim.core.errors import DomainError
from purity_sim.tableaux.partition import Partition
from purity_sim.tableaux.rsk import bump
from purity_sim.tableaux.tableau import SemistandardTableau


class StreamingTableau:
    def __init__(self, d: int):
        if d < 2:
            raise DomainError(f"Streaming insertion needs d >= 2, got d={d}")
        self.d = d
        self.n = 0
        self._counts = [[0] * d for _ in range(d)]
        self._below = [[0] * d for _ in range(d)]

    def insert(self, x: int) -> None:
        if not 1 <= x <= self.d:
            raise DomainError(f"Letter {x} outside alphabet 1..{self.d}")
        bump(self._counts, x - 1)
        if x < self.d:
            bump(self._below, x - 1)
        self.n += 1

    def extend(self, letters: Iterable[int]) -> None:
        for x in letters:
            self.insert(int(x))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(sum(row) for row in self._counts))

    @property
    def mu(self) -> Partition:
        return Partition(tuple(sum(row) for row in self._below))

    def tableau(self) -> SemistandardTableau:
        return SemistandardTableau(self.d, tuple(tuple(row) for row in self._counts))


def _insert_rows(counts: np.ndarray, trials: np.ndarray, letters: np.ndarray) -> None:
    """Row-insert zero-based `letters[j]` into trial `trials[j]` of a (B, d, d) count array."""
    d = counts.shape[1]
    above = np.arange(d)
    for r in range(d):
        if trials.size == 0:
            return
        counts[trials, r, letters] += 1
        row = counts[trials, r, :]
        bumpable = (row > 0) & (above[None, :] > letters[:, None])
        bumped = bumpable.any(axis=1)
        successor = bumpable.argmax(axis=1)
        trials, letters = trials[bumped], successor[bumped]
        counts[trials, r, letters] -= 1
    if trials.size:
        raise AssertionError("insertion ran past the last row")


class BatchTableaux:
    """B independent count-matrix tableaux over alphabet 1..d, plus their T^{<d} companions."""

    def __init__(self, d: int, size: int):
        if d < 2:
            raise DomainError(f"Streaming insertion needs d >= 2, got d={d}")
        self.d = d
        self.size = size
        self.counts = np.zeros((size, d, d), dtype=np.int64)
        self.below = np.zeros((size, d, d), dtype=np.int64)
        self._all = np.arange(size)

    def insert(self, letters: np.ndarray) -> None:
        """Insert letters[j] (1-based) into trial j, for every trial at once."""
        zero_based = np.asarray(letters, dtype=np.int64) - 1
        _insert_rows(self.counts, self._all, zero_based)
        keep = zero_based < self.d - 1
        _insert_rows(self.below, self._all[keep], zero_based[keep])

    def shapes(self) -> tuple[np.ndarray, np.ndarray]:
        """(λ, μ) as (B, d) integer arrays of row lengths."""
        return self.counts.sum(axis=2), self.below.sum(axis=2)


def batch_fidelity(lam: np.ndarray, mu: np.ndarray, k: int) -> tuple[np.ndarray, np.ndarray]:
    """
    Float fidelity for every row of (λ, μ), evaluated in the same order as
    fidelity_from_shapes(exact=False) so both give identical doubles.
    Returns (values, fallback_used).
    """
    size, d = lam.shape
    fallback = lam[:, 0] - lam[:, 1] < k
    delta = lam[:, :1] - lam[:, 1:] + np.arange(d - 1)[None, :]
    b = mu[:, : d - 1] - lam[:, 1:]
    vanishes = (delta - b < k).any(axis=1)

    value = np.ones(size, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        for i in range(d - 1):
            for j in range(k):
                value *= (delta[:, i] - b[:, i] - j) / (delta[:, i] - j)
    value = np.where(vanishes, 0.0, value)
    value = np.where(fallback, float(d) ** -k, value)
    return value, fallback
