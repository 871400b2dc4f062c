"""
tableaux/rsk.py — Row insertion and the RSK correspondence on count matrices.

Bumping rule: the inserted letter x replaces the leftmost entry strictly
greater than x. In count form that is the smallest letter y > x present in
the row; x's count goes up, y's count goes down, and y moves to the next row.
"""
from __future__ import annotations

from typing import NamedTuple

from purity_sim.core.errors import DomainError
from purity_sim.tableaux.partition import Partition, Word
from purity_sim.tableaux.tableau import SemistandardTableau, StandardTableau


class RskResult(NamedTuple):
    shape: Partition
    recording: StandardTableau
    insertion: SemistandardTableau


def bump(counts: list[list[int]], letter: int) -> int:
    """
    Row-insert the zero-based `letter` into a mutable count matrix.
    Returns the zero-based row that gained a box.
    """
    for r, row in enumerate(counts):
        row[letter] += 1
        for y in range(letter + 1, len(row)):
            if row[y]:
                row[y] -= 1
                letter = y
                break
        else:
            return r
    raise AssertionError("insertion ran past the last row")  # letters ≥ row index forbid this


def rsk_insert(tableau: SemistandardTableau, x: int) -> SemistandardTableau:
    if not 1 <= x <= tableau.d:
        raise DomainError(f"Letter {x} outside alphabet 1..{tableau.d}")
    counts = [list(row) for row in tableau.counts]
    bump(counts, x - 1)
    return SemistandardTableau(tableau.d, tuple(tuple(row) for row in counts))


def rsk(word: Word) -> RskResult:
    """RSK(w) = (λ, S, T) with S the recording SYT and T the insertion SSYT."""
    d = word.d
    counts = [[0] * d for _ in range(d)]
    recording: list[list[int]] = [[] for _ in range(d)]
    for t, x in enumerate(word.letters, start=1):
        recording[bump(counts, x - 1)].append(t)
    insertion = SemistandardTableau(d, tuple(tuple(row) for row in counts))
    return RskResult(
        shape=insertion.shape,
        recording=StandardTableau(tuple(tuple(row) for row in recording)),
        insertion=insertion,
    )
