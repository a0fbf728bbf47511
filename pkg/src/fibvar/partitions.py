"""Counting partitions into distinct Fibonacci values over contiguous ranges.

R(n) is the number of ways to write n as a sum of strictly increasing
Fibonacci values (OEIS A000119), with R(0) = 1 for the empty sum and
R(n) = 0 for n < 0.  Tables are built by the standard distinct-parts
subset-count DP and stored as int64 arrays, which is exact throughout the
supported budget: R(n) <= sqrt(n+1), so counts stay far below 2**63 for
any table of at most 10**8 entries.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import BudgetError
from .fibonacci import distinct_fib_upto, fib

DEFAULT_MEMORY_BUDGET = 10**8  # table entries


@dataclass(frozen=True)
class CountTable:
    """R(n) for 0 <= n <= h_max."""

    h_max: int
    r: np.ndarray

    def count(self, n: int) -> int:
        """R(n); 0 for negative n.  n must not exceed h_max."""
        if n < 0:
            return 0
        if n > self.h_max:
            raise ValueError(f"n={n} beyond table range {self.h_max}")
        return int(self.r[n])


def r_table(h_max: int, budget: int = DEFAULT_MEMORY_BUDGET) -> CountTable:
    """Tabulate R(0..h_max) by iterating each distinct Fibonacci value once.

    The vectorized update r[v:] += r[:-v] reads pre-update values (numpy
    copies overlapping operands), which is exactly the downward-sweep
    distinct-parts update.
    """
    if h_max < 0:
        raise ValueError(f"h_max must be >= 0, got {h_max}")
    if h_max + 1 > budget:
        raise BudgetError(
            f"table of {h_max + 1} entries exceeds the budget of {budget}"
        )
    r = np.zeros(h_max + 1, dtype=np.int64)
    r[0] = 1
    for v in distinct_fib_upto(h_max):
        r[v:] += r[:-v]
    return CountTable(h_max=h_max, r=r)


def r(n: int, budget: int = DEFAULT_MEMORY_BUDGET) -> int:
    """R(n) for a single argument; negative n gives 0."""
    if n < 0:
        return 0
    return r_table(n, budget=budget).count(n)


class CarlitzRow(NamedTuple):
    m: int
    r_fib: int
    expected: int
    ok: bool


def check_carlitz(m_max: int, budget: int = DEFAULT_MEMORY_BUDGET) -> list[CarlitzRow]:
    """Check Carlitz's identity R(F_m) = floor(m/2) for 2 <= m <= m_max."""
    if m_max < 2:
        raise ValueError(f"m_max must be >= 2, got {m_max}")
    table = r_table(fib(m_max), budget=budget)
    rows = []
    for m in range(2, m_max + 1):
        got = table.count(fib(m))
        want = m // 2
        rows.append(CarlitzRow(m, got, want, got == want))
    return rows


class SqrtBoundResult(NamedTuple):
    passed: bool
    equality_positions: list[int]


def check_sqrt_bound(
    h_max: int, budget: int = DEFAULT_MEMORY_BUDGET
) -> SqrtBoundResult:
    """Check R(n) <= sqrt(n+1) on [0, h_max] and locate the equality cases.

    Passes iff the bound holds everywhere and equality happens exactly at
    n = F_m**2 - 1 for Fibonacci numbers F_m, m >= 2.
    """
    table = r_table(h_max, budget=budget)
    n_plus_1 = np.arange(1, h_max + 2, dtype=np.int64)
    squares = table.r * table.r
    bound_ok = bool(np.all(squares <= n_plus_1))
    equality = np.flatnonzero(squares == n_plus_1)
    expected = sorted({f * f - 1 for f in distinct_fib_upto(h_max + 1) if f * f - 1 <= h_max})
    positions = [int(n) for n in equality]
    return SqrtBoundResult(bound_ok and positions == expected, positions)
