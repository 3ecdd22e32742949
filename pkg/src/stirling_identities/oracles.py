"""Definition-level enumeration oracles.

These are deliberately naive: each one walks every combinatorial object it
counts, so its correctness can be checked by reading it. The fast path lives
in :mod:`stirling_identities.exact_numbers`.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator

from .errors import ResourceLimitError

PARTITION_CAP = 12
CYCLE_CAP = 9
SUBSET_CAP = 20


def _check(n: int, k: int, cap: int, what: str) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"{what}: n and k must be nonnegative, got ({n}, {k})")
    if n > cap:
        raise ResourceLimitError(f"{what}: n={n} exceeds oracle cap {cap}")


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every restricted-growth string of length n.

    a[0] = 0 and a[i] <= 1 + max(a[:i]). Each string encodes one set partition
    of {0..n-1} (element i sits in block a[i]), so no partition repeats.
    n = 0 yields the empty string once.
    """
    if n == 0:
        yield ()
        return
    a = [0] * n
    # running maxima: m[i] = max(a[:i+1])
    m = [0] * n
    while True:
        yield tuple(a)
        # find rightmost position that can still be incremented
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


@lru_cache(maxsize=None)
def _partition_tally(n: int) -> dict[int, int]:
    tally = Counter()
    for rgs in restricted_growth_strings(n):
        tally[max(rgs) + 1 if rgs else 0] += 1
    return dict(tally)


def count_set_partitions(n: int, k: int) -> int:
    """Number of partitions of an n-set into exactly k nonempty blocks."""
    _check(n, k, PARTITION_CAP, "count_set_partitions")
    return _partition_tally(n).get(k, 0)


def cycle_count(perm: tuple[int, ...]) -> int:
    """Number of cycles of a permutation given in one-line notation (0-based)."""
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
    return cycles


@lru_cache(maxsize=None)
def _cycle_tally(n: int) -> dict[int, int]:
    return dict(Counter(cycle_count(p) for p in permutations(range(n))))


def count_permutations_by_cycles(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    _check(n, k, CYCLE_CAP, "count_permutations_by_cycles")
    return _cycle_tally(n).get(k, 0)


def count_subsets(n: int, k: int) -> int:
    """Number of k-element subsets of an n-set, by listing them."""
    _check(n, k, SUBSET_CAP, "count_subsets")
    return sum(1 for _ in combinations(range(n), k))
