"""
tableaux/oracles.py — Combinatorial checks that never call the RSK insertion:
weak LIS by patience sorting, Greene unions by brute force, hook lengths,
and exhaustive SYT / SSYT enumeration.
"""
from __future__ import annotations

from bisect import bisect_right
from collections.abc import Iterable, Iterator
from itertools import combinations_with_replacement, product
from math import factorial, prod

from purity_sim.config import settings
from purity_sim.core.errors import DomainError, ResourceLimitError
from purity_sim.tableaux.partition import Partition, Word, as_partition
from purity_sim.tableaux.tableau import SemistandardTableau, StandardTableau


def _letters(word: Word | Iterable[int]) -> tuple[int, ...]:
    return word.letters if isinstance(word, Word) else tuple(word)


def lis_weak(word: Word | Iterable[int]) -> int:
    """Length of the longest weakly increasing subsequence (patience sorting)."""
    tails: list[int] = []
    for x in _letters(word):
        j = bisect_right(tails, x)
        if j == len(tails):
            tails.append(x)
        else:
            tails[j] = x
    return len(tails)


def _maximal_increasing_masks(letters: tuple[int, ...]) -> set[int]:
    """
    Bitmasks of the inclusion-maximal weakly increasing subsequences.

    With distinct values v_1 < … < v_m, each one is fixed by cut points
    c_1 ≤ … ≤ c_{m-1}: take v_s at every position in [c_{s-1}, c_s).
    """
    values = sorted(set(letters))
    n = len(letters)
    masks = set()
    for cuts in combinations_with_replacement(range(n + 1), len(values) - 1):
        bounds = (0, *cuts, n)
        mask = 0
        for s, v in enumerate(values):
            for t in range(bounds[s], bounds[s + 1]):
                if letters[t] == v:
                    mask |= 1 << t
        masks.add(mask)
    return masks


def greene_union(word: Word | Iterable[int], j: int, cap: int | None = None) -> int:
    """
    Maximum total size of a union of j weakly increasing subsequences.

    Exhaustive over j-tuples of maximal subsequences; overlapping unions are
    also disjoint unions, since subsets of weakly increasing subsequences stay
    weakly increasing.
    """
    letters = _letters(word)
    limit = settings.greene_max_length if cap is None else cap
    if len(letters) > limit:
        raise ResourceLimitError(f"greene_union is capped at length {limit}, got {len(letters)}")
    if j < 0:
        raise DomainError(f"j must be nonnegative, got {j}")
    if j == 0 or not letters:
        return 0
    if j >= len(letters) or j >= len(set(letters)):
        return len(letters)  # one subsequence per letter value covers everything
    masks = _maximal_increasing_masks(letters)
    return max((_union_size(combo) for combo in combinations_with_replacement(masks, j)), default=0)


def _union_size(masks: tuple[int, ...]) -> int:
    union = 0
    for m in masks:
        union |= m
    return union.bit_count()


def num_syt(shape: Partition | Iterable[int]) -> int:
    """Number of standard Young tableaux of the shape, by the hook-length formula."""
    lam = as_partition(shape)
    conj = lam.conjugate().parts
    hooks = prod(
        (lam.parts[i] - j) + (conj[j] - i) - 1
        for i in range(lam.length)
        for j in range(lam.parts[i])
    )
    return factorial(lam.n) // hooks


def _check_cap(n: int, cap: int | None) -> None:
    limit = settings.enumeration_max_n if cap is None else cap
    if n > limit:
        raise ResourceLimitError(f"Exhaustive enumeration is capped at n={limit}, got n={n}")


def enumerate_syt(shape: Partition | Iterable[int], cap: int | None = None) -> list[StandardTableau]:
    """Every SYT of the shape, built by placing n in each removable corner."""
    lam = as_partition(shape)
    _check_cap(lam.n, cap)

    def _fill(parts: tuple[int, ...]) -> Iterator[list[list[int]]]:
        n = sum(parts)
        if n == 0:
            yield [[] for _ in parts]
            return
        for r, length in enumerate(parts):
            below = parts[r + 1] if r + 1 < len(parts) else 0
            if length > below:
                smaller = parts[:r] + (length - 1,) + parts[r + 1:]
                for rows in _fill(smaller):
                    rows[r].append(n)
                    yield rows

    return [StandardTableau(tuple(tuple(row) for row in rows)) for rows in _fill(lam.parts)]


def enumerate_ssyt(
    shape: Partition | Iterable[int],
    d: int,
    cap: int | None = None,
    max_d: int | None = None,
) -> list[SemistandardTableau]:
    """
    Every SSYT of the shape over alphabet 1..d.

    Peels letters from d down to 1: the boxes holding letter a form a
    horizontal strip between shape(T^{≤a}) and shape(T^{≤a-1}).
    """
    lam = as_partition(shape)
    _check_cap(lam.n, cap)
    d_limit = settings.enumeration_max_d if max_d is None else max_d
    if d > d_limit:
        raise ResourceLimitError(f"Exhaustive enumeration is capped at d={d_limit}, got d={d}")
    if d < 1:
        raise DomainError(f"Alphabet size must be positive, got d={d}")
    if lam.length > d:
        return []

    def _strips(outer: tuple[int, ...], a: int) -> Iterator[list[list[int]]]:
        # outer = shape of T^{≤a}, padded to d; yields columns a-1..0 of the count matrix
        if a == 0:
            yield []
            return
        ranges = [range(outer[i + 1], outer[i] + 1) for i in range(a - 1)]
        for inner_head in product(*ranges):
            inner = tuple(inner_head) + (0,) * (d - a + 1)
            column = [outer[i] - inner[i] for i in range(d)]
            for rest in _strips(inner, a - 1):
                yield [column] + rest

    result = []
    for columns in _strips(lam.padded(d), d):
        # columns[0] is letter d, columns[-1] is letter 1
        counts = tuple(tuple(columns[d - 1 - a][i] for a in range(d)) for i in range(d))
        result.append(SemistandardTableau(d, counts))
    return result
