"""Fibonacci indexing, distinct-value enumeration, and Zeckendorf decomposition.

Everything here works with the convention F_1 = F_2 = 1, so the distinct
Fibonacci *values* are {1, 2, 3, 5, 8, ...} with 1 appearing once.  All
arithmetic is on Python ints, so indices and values may grow without bound.
"""

from dataclasses import dataclass


def fib(m: int) -> int:
    """Return F_m with F_1 = F_2 = 1.  Raises ValueError for m < 1."""
    if m < 1:
        raise ValueError(f"Fibonacci index must be >= 1, got {m}")
    a, b = 1, 1
    for _ in range(m - 1):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class FibTable:
    """Fibonacci numbers up to a fixed index, plus the deduplicated values.

    values_by_index[m] == F_m for 1 <= m <= m_max (entry 0 holds F_0 = 0 so
    indexing is direct).  distinct_values lists {F_m : m >= 2} up to F_m_max,
    strictly increasing, with the value 1 exactly once.
    """

    m_max: int
    values_by_index: tuple[int, ...]
    distinct_values: tuple[int, ...]

    def value(self, m: int) -> int:
        if not 1 <= m <= self.m_max:
            raise ValueError(f"index {m} outside table range [1, {self.m_max}]")
        return self.values_by_index[m]


def fib_table(m_max: int) -> FibTable:
    """Build a FibTable covering indices 1..m_max."""
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    values = [0, 1]
    while len(values) <= m_max:
        values.append(values[-1] + values[-2])
    return FibTable(
        m_max=m_max,
        values_by_index=tuple(values),
        distinct_values=tuple(values[2 : m_max + 1]),
    )


def distinct_fib_upto(h: int) -> list[int]:
    """All distinct Fibonacci values <= h, increasing; 1 listed once."""
    if h < 1:
        return []
    values = [1, 2]
    while values[-1] + values[-2] <= h:
        values.append(values[-1] + values[-2])
    return [v for v in values if v <= h]


@dataclass(frozen=True)
class ZeckendorfRepr:
    """The unique sum of non-consecutive Fibonacci numbers for a positive integer.

    indices is strictly decreasing, every entry >= 2, and no two entries are
    consecutive integers.
    """

    indices: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(fib(i) for i in self.indices)


def zeckendorf(n: int) -> ZeckendorfRepr:
    """Greedy Zeckendorf decomposition of n >= 1."""
    if n < 1:
        raise ValueError(f"Zeckendorf representation needs n >= 1, got {n}")
    # table of F_2..F_k covering n
    values = [1, 2]
    while values[-1] + values[-2] <= n:
        values.append(values[-1] + values[-2])
    indices = []
    rest = n
    for pos in range(len(values) - 1, -1, -1):
        if values[pos] <= rest:
            rest -= values[pos]
            indices.append(pos + 2)  # values[0] == F_2
    assert rest == 0
    return ZeckendorfRepr(indices=tuple(indices))
