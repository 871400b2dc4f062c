"""
tableaux/tableau.py — Semistandard and standard Young tableaux.

A SemistandardTableau is stored as its letter-count matrix: counts[i][a] is
the number of cells in row i+1 holding letter a+1. Rows of an SSYT are weakly
increasing, so this matrix determines the tableau, and insertion costs O(d²)
independent of the number of boxes. `rows()` gives the cell-list view.
"""
from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from itertools import accumulate
from math import prod

from purity_sim.core.errors import DomainError
from purity_sim.tableaux.partition import Partition


@dataclass(frozen=True, slots=True)
class SemistandardTableau:
    d: int
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = self.d
        if d < 1:
            raise DomainError(f"Alphabet size must be positive, got d={d}")
        counts = tuple(tuple(int(x) for x in row) for row in self.counts)
        if len(counts) != d or any(len(row) != d for row in counts):
            raise DomainError(f"Count matrix must be {d}x{d}")
        for i, row in enumerate(counts):
            if any(x < 0 for x in row):
                raise DomainError(f"Negative count in row {i + 1}")
            if any(row[a] for a in range(i)):
                raise DomainError(f"Row {i + 1} holds a letter smaller than its index")
        lengths = [sum(row) for row in counts]
        if any(a < b for a, b in zip(lengths, lengths[1:])):
            raise DomainError(f"Row lengths {lengths} are not weakly decreasing")
        for upper, lower in zip(counts, counts[1:]):
            c_up = list(accumulate(upper))
            c_low = list(accumulate(lower))
            for a in range(d):
                if c_low[a] > (c_up[a - 1] if a else 0):
                    raise DomainError("Columns are not strictly increasing")
        object.__setattr__(self, "counts", counts)

    @classmethod
    def empty(cls, d: int) -> SemistandardTableau:
        return cls(d, tuple((0,) * d for _ in range(d)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], d: int) -> SemistandardTableau:
        """Build from a cell-list view, e.g. [[1, 1, 2], [2]]."""
        if len(rows) > d:
            raise DomainError(f"{len(rows)} rows cannot be filled from alphabet 1..{d}")
        counts = [[0] * d for _ in range(d)]
        for i, row in enumerate(rows):
            if any(a > b for a, b in zip(row, row[1:])):
                raise DomainError(f"Row {i + 1} is not weakly increasing: {list(row)}")
            for x in row:
                if not 1 <= x <= d:
                    raise DomainError(f"Letter {x} outside alphabet 1..{d}")
                counts[i][x - 1] += 1
        return cls(d, tuple(tuple(row) for row in counts))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(sum(row) for row in self.counts))

    @property
    def type(self) -> tuple[int, ...]:
        """The histogram of letters: column sums of the count matrix."""
        return tuple(sum(row[a] for row in self.counts) for a in range(self.d))

    def rows(self) -> tuple[tuple[int, ...], ...]:
        view = []
        for row in self.counts:
            cells = tuple(a + 1 for a, c in enumerate(row) for _ in range(c))
            if cells:
                view.append(cells)
        return tuple(view)

    def restrict_below(self, a: int) -> SemistandardTableau:
        """T^{<a}: drop every box whose letter is a or larger."""
        if not 1 <= a <= self.d + 1:
            raise DomainError(f"Restriction letter must lie in 1..{self.d + 1}, got {a}")
        counts = tuple(tuple(c if letter < a - 1 else 0 for letter, c in enumerate(row)) for row in self.counts)
        return SemistandardTableau(self.d, counts)

    def weight(self, p: Sequence):
        """p^T = ∏ p_a^{h_a}; exact when p holds Fractions."""
        return prod((pa ** h for pa, h in zip(p, self.type) if h), start=1)

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows()) + "]"


def restrict_below(tableau: SemistandardTableau, a: int) -> SemistandardTableau:
    return tableau.restrict_below(a)


@dataclass(frozen=True, slots=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows if len(row))
        Partition(tuple(len(row) for row in rows))  # shape must be a partition
        entries = sorted(x for row in rows for x in row)
        if entries != list(range(1, len(entries) + 1)):
            raise DomainError(f"Entries must be a permutation of 1..{len(entries)}")
        for row in rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise DomainError(f"Row {list(row)} is not strictly increasing")
        for upper, lower in zip(rows, rows[1:]):
            if any(lower[j] <= upper[j] for j in range(len(lower))):
                raise DomainError("Columns are not strictly increasing")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.rows))

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in self.rows) + "]"
