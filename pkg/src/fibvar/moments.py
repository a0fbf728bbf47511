"""First and second moments of the partition counts, and the five-term recurrence.

A(H) = sum_{n<=H} R(n) and V(H) = sum_{n<=H} R(n)^2 are kept as prefix-sum
arrays over a CountTable.  Along Fibonacci checkpoints the second moment
satisfies, for m >= 7,

    V(F_m) = 2 V(F_{m-1}) + 3 V(F_{m-2}) - 4 V(F_{m-3}) - 2 V(F_{m-4})
             + 2 V(F_{m-5}) + 1 - 2*floor(m/2),

which verify_lemma checks as an identity between two independently computed
sides.  w_closed_form evaluates the auxiliary count

    w_m = V(F_{m-3}) - R(F_{m-3}) - R(F_{m-5}) - V(F_{m-5}),

whose brute-force counterpart lives in fibvar.casework.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .fibonacci import fib
from .partitions import DEFAULT_MEMORY_BUDGET, CountTable, r_table


@dataclass(frozen=True)
class MomentTable:
    """Prefix sums a[n] = A(n), v[n] = V(n) for 0 <= n <= h_max."""

    h_max: int
    a: np.ndarray
    v: np.ndarray

    def a_at(self, n: int) -> int:
        if not 0 <= n <= self.h_max:
            raise ValueError(f"n={n} outside table range [0, {self.h_max}]")
        return int(self.a[n])

    def v_at(self, n: int) -> int:
        if not 0 <= n <= self.h_max:
            raise ValueError(f"n={n} outside table range [0, {self.h_max}]")
        return int(self.v[n])


def moments_from_counts(counts: CountTable) -> MomentTable:
    """One streaming pass over an existing count table."""
    a = np.cumsum(counts.r, dtype=np.int64)
    v = np.cumsum(counts.r * counts.r, dtype=np.int64)
    return MomentTable(h_max=counts.h_max, a=a, v=v)


def moment_table(h_max: int, budget: int = DEFAULT_MEMORY_BUDGET) -> MomentTable:
    """Build A and V over [0, h_max]."""
    return moments_from_counts(r_table(h_max, budget=budget))


def v_at_fib(m: int, moments: MomentTable | None = None) -> int:
    """V(F_m) for m >= 2."""
    if m < 2:
        raise ValueError(f"V(F_m) needs m >= 2, got {m}")
    h = fib(m)
    if moments is None:
        moments = moment_table(h)
    return moments.v_at(h)


@dataclass(frozen=True)
class FibMomentSeries:
    """V(F_m) for 2 <= m <= m_max; values[m] is V(F_m) (entries 0, 1 unused)."""

    m_max: int
    values: tuple[int, ...]

    def v(self, m: int) -> int:
        if not 2 <= m <= self.m_max:
            raise ValueError(f"m={m} outside series range [2, {self.m_max}]")
        return self.values[m]


def fib_moment_series(
    m_max: int, moments: MomentTable | None = None, budget: int = DEFAULT_MEMORY_BUDGET
) -> FibMomentSeries:
    """Extract V at every Fibonacci checkpoint up to F_m_max from one table."""
    if m_max < 2:
        raise ValueError(f"m_max must be >= 2, got {m_max}")
    if moments is None:
        moments = moment_table(fib(m_max), budget=budget)
    values = [0, 0] + [moments.v_at(fib(m)) for m in range(2, m_max + 1)]
    return FibMomentSeries(m_max=m_max, values=tuple(values))


class LemmaRow(NamedTuple):
    m: int
    lhs: int
    rhs: int
    equal: bool


def verify_lemma(
    m_lo: int, m_hi: int, budget: int = DEFAULT_MEMORY_BUDGET
) -> list[LemmaRow]:
    """Compare V(F_m) from the tables against the five-term recurrence.

    The left side is the DP value; the right side is assembled from the five
    preceding checkpoint values plus the forcing term 1 - 2*floor(m/2).  The
    recurrence only holds from m = 7, so smaller m_lo is a domain error.
    """
    if m_lo < 7:
        raise ValueError(f"the recurrence needs m >= 7, got m_lo={m_lo}")
    if m_hi < m_lo:
        raise ValueError(f"empty range [{m_lo}, {m_hi}]")
    series = fib_moment_series(m_hi, budget=budget)
    rows = []
    for m in range(m_lo, m_hi + 1):
        lhs = series.v(m)
        rhs = (
            2 * series.v(m - 1)
            + 3 * series.v(m - 2)
            - 4 * series.v(m - 3)
            - 2 * series.v(m - 4)
            + 2 * series.v(m - 5)
            + 1
            - 2 * (m // 2)
        )
        rows.append(LemmaRow(m, lhs, rhs, lhs == rhs))
    return rows


def w_closed_form(
    m: int,
    counts: CountTable | None = None,
    moments: MomentTable | None = None,
) -> int:
    """w_m = V(F_{m-3}) - R(F_{m-3}) - R(F_{m-5}) - V(F_{m-5}), for m >= 7.

    Any supplied tables must cover F_{m-3}.
    """
    if m < 7:
        raise ValueError(f"w_m needs m >= 7, got {m}")
    h = fib(m - 3)
    if counts is None:
        counts = r_table(h)
    if moments is None:
        moments = moments_from_counts(counts)
    value = (
        moments.v_at(fib(m - 3))
        - counts.count(fib(m - 3))
        - counts.count(fib(m - 5))
        - moments.v_at(fib(m - 5))
    )
    assert value >= 0
    return value
