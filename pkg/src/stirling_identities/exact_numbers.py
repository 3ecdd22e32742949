"""Exact binomial coefficients and Stirling numbers of both kinds.

Values come from dense lower-triangular tables built row by row with the
standard recurrences. Every entry is a Python ``int``, so nothing ever
overflows or rounds.

Boundary conventions: [0,0] = {0,0} = C(0,0) = 1, [n,0] = {n,0} = 0 for n > 0,
and every family is zero outside 0 <= k <= n.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .errors import ResourceLimitError

MAX_TABLE_ROWS = 1000


class TriangleFamily(str, Enum):
    BINOMIAL = "binomial"
    STIRLING_FIRST_UNSIGNED = "stirling_first_unsigned"
    STIRLING_SECOND = "stirling_second"


def _next_binomial(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    return (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)


def _next_second(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # {n,k} = k {n-1,k} + {n-1,k-1}
    return (0,) + tuple(k * prev[k] + prev[k - 1] for k in range(1, n)) + (1,)


def _next_first(prev: tuple[int, ...], n: int) -> tuple[int, ...]:
    # [n,k] = (n-1) [n-1,k] + [n-1,k-1]
    return (0,) + tuple((n - 1) * prev[k] + prev[k - 1] for k in range(1, n)) + (1,)


_NEXT_ROW: dict[TriangleFamily, Callable[[tuple[int, ...], int], tuple[int, ...]]] = {
    TriangleFamily.BINOMIAL: _next_binomial,
    TriangleFamily.STIRLING_FIRST_UNSIGNED: _next_first,
    TriangleFamily.STIRLING_SECOND: _next_second,
}


@dataclass(frozen=True)
class TriangleTable:
    """Immutable rows 0..n_max of one counting family."""

    family: TriangleFamily
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def entry(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        if n > self.n_max:
            raise IndexError(f"row {n} beyond table n_max={self.n_max}")
        return self.rows[n][k]

    __call__ = entry

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def with_entry(self, n: int, k: int, value: int) -> TriangleTable:
        """Copy of this table with a single entry replaced."""
        if not 0 <= k <= n <= self.n_max:
            raise IndexError(f"({n}, {k}) is outside the stored triangle")
        row = list(self.rows[n])
        row[k] = value
        rows = self.rows[:n] + (tuple(row),) + self.rows[n + 1 :]
        return TriangleTable(self.family, self.n_max, rows)


def _extend(family: TriangleFamily, rows: tuple[tuple[int, ...], ...], n_max: int):
    step = _NEXT_ROW[family]
    out = list(rows) or [(1,)]
    for n in range(len(out), n_max + 1):
        out.append(step(out[-1], n))
    return tuple(out[: n_max + 1])


def build_triangle(
    family: TriangleFamily | str, n_max: int, *, cap: int = MAX_TABLE_ROWS
) -> TriangleTable:
    """Build rows 0..n_max of ``family``.

    Raises ResourceLimitError when n_max exceeds ``cap``.
    """
    family = TriangleFamily(family)
    if n_max < 0:
        raise ValueError(f"n_max must be nonnegative, got {n_max}")
    if n_max > cap:
        raise ResourceLimitError(f"n_max={n_max} exceeds triangle cap {cap}")
    cached = _CACHE.get(family)
    if cached is not None and cached.n_max >= n_max:
        return TriangleTable(family, n_max, cached.rows[: n_max + 1])
    return TriangleTable(family, n_max, _extend(family, (), n_max))


# Shared tables backing the scalar functions. Tables are replaced, never
# mutated, so readers holding an old reference are unaffected.
_CACHE: dict[TriangleFamily, TriangleTable] = {}
_CACHE_LOCK = threading.Lock()


def cached_table(family: TriangleFamily, n: int) -> TriangleTable:
    """Shared table with at least n rows beyond row 0; grows geometrically."""
    table = _CACHE.get(family)
    if table is not None and table.n_max >= n:
        return table
    with _CACHE_LOCK:
        table = _CACHE.get(family)
        if table is not None and table.n_max >= n:
            return table
        old_rows = table.rows if table is not None else ()
        n_max = max(n, 2 * len(old_rows), 16)
        table = TriangleTable(family, n_max, _extend(family, old_rows, n_max))
        _CACHE[family] = table
        return table


def _scalar(family: TriangleFamily, n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if k < 0 or k > n:
        return 0
    return cached_table(family, n).rows[n][k]


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k < 0 or k > n."""
    return _scalar(TriangleFamily.BINOMIAL, n, k)


def stirling_second(n: int, k: int) -> int:
    """{n, k}: partitions of an n-set into k nonempty blocks."""
    return _scalar(TriangleFamily.STIRLING_SECOND, n, k)


def stirling_first_unsigned(n: int, k: int) -> int:
    """[n, k]: permutations of n elements with exactly k cycles."""
    return _scalar(TriangleFamily.STIRLING_FIRST_UNSIGNED, n, k)


def stirling_first_signed(n: int, k: int) -> int:
    """s(n, k) = (-1)^(n-k) [n, k]."""
    value = stirling_first_unsigned(n, k)
    return -value if (n - k) % 2 else value


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return math.factorial(n)


def bell_number(n: int) -> int:
    """n-th Bell number via the Bell triangle.

    Kept independent of the second-kind table so that row sums of that table
    can be checked against it.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]
