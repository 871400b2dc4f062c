"""
tableaux/partition.py — Partitions (Young diagrams), words and overhangs.

Rows are addressed 1-based through Partition.row(i), matching the usual
λ_1 ≥ λ_2 ≥ … notation; the stored `parts` tuple never keeps trailing zeros.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from purity_sim.core.errors import DomainError, InconsistentInputError


@dataclass(frozen=True, slots=True)
class Partition:
    """A weakly decreasing tuple of nonnegative integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(int(x) for x in self.parts)
        if any(x < 0 for x in parts):
            raise DomainError(f"Partition parts must be nonnegative, got {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise DomainError(f"Partition parts must be weakly decreasing, got {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """ℓ(λ), the number of strictly positive parts."""
        return len(self.parts)

    def row(self, i: int) -> int:
        """λ_i for 1-based i; zero past the last row."""
        if i < 1:
            raise DomainError(f"Row index is 1-based, got {i}")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, d: int) -> tuple[int, ...]:
        """The parts padded with zeros to exactly d entries."""
        if self.length > d:
            raise DomainError(f"Partition {self.parts} has more than {d} rows")
        return self.parts + (0,) * (d - self.length)

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def remove_from_first_row(self, t: int) -> Partition:
        """λ − t·e_1; must remain a partition."""
        if t < 0 or self.row(1) - t < self.row(2):
            raise DomainError(f"Cannot remove {t} boxes from the first row of {self.parts}")
        return Partition((self.row(1) - t,) + self.parts[1:])

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


def partitions_of(n: int, max_parts: int | None = None) -> Iterator[Partition]:
    """Every partition of n with at most max_parts rows, in reverse lexicographic order."""
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    limit = n if max_parts is None else max_parts

    def _build(remaining: int, largest: int, rows_left: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in _build(remaining - first, first, rows_left - 1):
                yield (first,) + rest

    for parts in _build(n, n, limit):
        yield Partition(parts)


@dataclass(frozen=True, slots=True)
class Word:
    """A word over the alphabet {1..d}."""

    letters: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        letters = tuple(int(x) for x in self.letters)
        if self.d < 1:
            raise DomainError(f"Alphabet size must be positive, got d={self.d}")
        bad = [x for x in letters if not 1 <= x <= self.d]
        if bad:
            raise DomainError(f"Letters {bad} lie outside the alphabet 1..{self.d}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, letters: Iterable[int], d: int | None = None) -> Word:
        letters = tuple(letters)
        return cls(letters, d if d is not None else max(letters, default=1))

    @classmethod
    def parse(cls, text: str, d: int | None = None) -> Word:
        """Parse whitespace- or comma-separated letters, e.g. "2 1 2"."""
        tokens = text.replace(",", " ").split()
        try:
            letters = tuple(int(tok) for tok in tokens)
        except ValueError as exc:
            raise DomainError(f"Malformed word {text!r}: {exc}") from exc
        return cls.of(letters, d)

    @property
    def histogram(self) -> tuple[int, ...]:
        """h_i = number of occurrences of letter i."""
        counts = [0] * self.d
        for x in self.letters:
            counts[x - 1] += 1
        return tuple(counts)

    def subword_below(self, a: int) -> Word:
        """The subsequence of letters strictly smaller than a (alphabet kept)."""
        return Word(tuple(x for x in self.letters if x < a), self.d)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)


@dataclass(frozen=True, slots=True)
class Overhangs:
    """b_i = μ_i − λ_{i+1} for i = 1..d−1."""

    b: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 0 for x in self.b):
            raise InconsistentInputError(f"Negative overhang in {self.b}: λ and μ are not from one SSYT")

    @property
    def total(self) -> int:
        return sum(self.b)


def overhangs(lam: Partition, mu: Partition, d: int | None = None) -> Overhangs:
    """Overhangs of a tableau of shape λ whose letters below d fill shape μ."""
    if d is None:
        d = max(lam.length, mu.length + 1, 2)
    if mu.length > d - 1 or lam.length > d:
        raise InconsistentInputError(f"Shapes λ={lam}, μ={mu} do not fit alphabet size {d}")
    return Overhangs(tuple(mu.row(i) - lam.row(i + 1) for i in range(1, d)))


def as_partition(value: Partition | Iterable[int]) -> Partition:
    return value if isinstance(value, Partition) else Partition(tuple(value))
