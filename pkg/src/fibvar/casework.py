"""Brute-force verification of the window system behind the five-term recurrence.

V(F_m) - V(F_{m-1}) counts ordered pairs of subsets of distinct Fibonacci
values with equal sums in the window (F_{m-1}, F_m].  For m >= 7 every such
pair falls into exactly one of five cases according to the two largest parts
(max of the x side, max of the y side):

    1. both F_m                          -> exactly 1 solution
    2. both F_{m-1}                      -> V(F_{m-2}) - 1
    3. both F_{m-2}                      -> V(F_{m-1}) - 4V(F_{m-3}) + 2V(F_{m-5})
                                            - 2R(F_{m-1}) + 2R(F_{m-3})
                                            + 2R(F_{m-5}) + 1
    4. {F_m, F_{m-1}} split across sides -> 2 R(F_{m-2})
    5. {F_{m-1}, F_{m-2}} split          -> 2 (w_{m+1} - R(F_{m-3}))

Everything here is exhaustive enumeration over subsets, deliberately
independent of the DP tables, so the case formulas (and the closed form of
the auxiliary count w_m) are checked against raw counting.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple

from .errors import BudgetError
from .fibonacci import distinct_fib_upto, fib
from .moments import moment_table, w_closed_form
from .partitions import r_table

DEFAULT_ENUM_BUDGET = 20  # largest Fibonacci index whose subset space we enumerate


@dataclass(frozen=True)
class SubsetPair:
    """An ordered pair of strictly increasing tuples of distinct Fibonacci values."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]

    @property
    def is_solution(self) -> bool:
        return sum(self.xs) == sum(self.ys)


def _check_budget(m: int, budget: int) -> None:
    if m > budget:
        raise BudgetError(
            f"enumeration at m={m} exceeds the budget cap {budget} "
            f"({2 ** (budget - 1)} subsets)"
        )


def _window_buckets(m: int) -> dict[int, Counter]:
    """For each sum in (F_{m-1}, F_m], how many subsets attain it per max part.

    Iterates the distinct values in increasing order; when v is appended to
    any subset of the smaller values it becomes the max, so the running list
    of subset sums doubles once per value.
    """
    lo, hi = fib(m - 1), fib(m)
    buckets: dict[int, Counter] = defaultdict(Counter)
    sums = [0]
    for v in distinct_fib_upto(hi):
        for s in sums:
            t = s + v
            if lo < t <= hi:
                buckets[t][v] += 1
        sums += [s + v for s in sums]
    return buckets


def count_window(m: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Number of equal-sum ordered subset pairs with common sum in (F_{m-1}, F_m]."""
    if m < 4:
        raise ValueError(f"window enumeration needs m >= 4, got {m}")
    _check_budget(m, budget)
    buckets = _window_buckets(m)
    return sum(sum(c.values()) ** 2 for c in buckets.values())


def window_solutions(
    m: int, budget: int = DEFAULT_ENUM_BUDGET
) -> Iterator[SubsetPair]:
    """Materialize every solution pair in the window; meant for small m."""
    if m < 4:
        raise ValueError(f"window enumeration needs m >= 4, got {m}")
    _check_budget(m, budget)
    lo, hi = fib(m - 1), fib(m)
    by_sum: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    subsets: list[tuple[int, ...]] = [()]
    for v in distinct_fib_upto(hi):
        extended = [s + (v,) for s in subsets]
        for s in extended:
            t = sum(s)
            if lo < t <= hi:
                by_sum[t].append(s)
        subsets += extended
    for group in by_sum.values():
        for xs, ys in product(group, group):
            yield SubsetPair(xs=xs, ys=ys)


def w_bruteforce(m: int, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Exhaustive count of the auxiliary system behind case 5 / case 3.

    Counts pairs with the x side topped by F_{m-2}, the y side topped by
    F_{m-3}, equal totals in (F_{m-3}, F_{m-1}]: remaining x parts range over
    distinct values < F_{m-2} and remaining y parts over values < F_{m-3}.
    """
    if m < 7:
        raise ValueError(f"auxiliary count needs m >= 7, got {m}")
    _check_budget(m, budget)
    x_top, y_top = fib(m - 2), fib(m - 3)
    lo, hi = fib(m - 3), fib(m - 1)
    x_sums = Counter(_subset_sums(distinct_fib_upto(x_top - 1)))
    y_sums = Counter(_subset_sums(distinct_fib_upto(y_top - 1)))
    total = 0
    for sx, cx in x_sums.items():
        t = sx + x_top
        if lo < t <= hi:
            total += cx * y_sums.get(t - y_top, 0)
    return total


def _subset_sums(values: list[int]) -> list[int]:
    sums = [0]
    for v in values:
        sums += [s + v for s in sums]
    return sums


@dataclass(frozen=True)
class CaseBreakdown:
    m: int
    total: int
    case1: int
    case2: int
    case3: int
    case4: int
    case5: int
    w_bruteforce: int

    @property
    def case_sum(self) -> int:
        return self.case1 + self.case2 + self.case3 + self.case4 + self.case5


def case_breakdown(m: int, budget: int = DEFAULT_ENUM_BUDGET) -> CaseBreakdown:
    """Partition every enumerated window solution by its two largest parts.

    Raises if any solution falls outside the five cases; for m >= 7 the
    maxima can only be F_m, F_{m-1} or F_{m-2}, and the mixed pair
    {F_m, F_{m-2}} cannot have equal sums.
    """
    if m < 7:
        raise ValueError(f"the five-way case split needs m >= 7, got {m}")
    _check_budget(m, budget)
    f_m, f_m1, f_m2 = fib(m), fib(m - 1), fib(m - 2)
    tallies = Counter()
    total = 0
    for counts_by_max in _window_buckets(m).values():
        for (mx, cx), (my, cy) in product(counts_by_max.items(), repeat=2):
            pairs = cx * cy
            total += pairs
            if mx == my == f_m:
                tallies[1] += pairs
            elif mx == my == f_m1:
                tallies[2] += pairs
            elif mx == my == f_m2:
                tallies[3] += pairs
            elif {mx, my} == {f_m, f_m1}:
                tallies[4] += pairs
            elif {mx, my} == {f_m1, f_m2}:
                tallies[5] += pairs
            else:
                raise RuntimeError(
                    f"solution with maxima ({mx}, {my}) outside the five cases at m={m}"
                )
    return CaseBreakdown(
        m=m,
        total=total,
        case1=tallies[1],
        case2=tallies[2],
        case3=tallies[3],
        case4=tallies[4],
        case5=tallies[5],
        w_bruteforce=w_bruteforce(m, budget=budget),
    )


class CaseCheck(NamedTuple):
    name: str
    actual: int
    expected: int
    ok: bool


@dataclass(frozen=True)
class CaseReport:
    m: int
    checks: tuple[CaseCheck, ...]
    passed: bool


def verify_cases(m: int, budget: int = DEFAULT_ENUM_BUDGET) -> CaseReport:
    """Check each brute-forced case count against its closed-form expression.

    Also checks that the cases sum to the window total, that the total equals
    V(F_m) - V(F_{m-1}), and that the brute-forced w_m matches its closed
    form.  Case 5 references w_{m+1}, so m+1 must stay within budget.
    """
    if m < 7:
        raise ValueError(f"case verification needs m >= 7, got {m}")
    _check_budget(m + 1, budget)
    bd = case_breakdown(m, budget=budget)

    counts = r_table(fib(m))
    moments = moment_table(fib(m))
    r_of = lambda k: counts.count(fib(k))
    v_of = lambda k: moments.v_at(fib(k))

    case3_expected = (
        v_of(m - 1)
        - 4 * v_of(m - 3)
        + 2 * v_of(m - 5)
        - 2 * r_of(m - 1)
        + 2 * r_of(m - 3)
        + 2 * r_of(m - 5)
        + 1
    )
    w_m = w_closed_form(m, counts=counts, moments=moments)
    w_next = w_closed_form(m + 1, counts=counts, moments=moments)
    checks = [
        CaseCheck("case1", bd.case1, 1, bd.case1 == 1),
        CaseCheck("case2", bd.case2, v_of(m - 2) - 1, bd.case2 == v_of(m - 2) - 1),
        CaseCheck("case3", bd.case3, case3_expected, bd.case3 == case3_expected),
        CaseCheck("case4", bd.case4, 2 * r_of(m - 2), bd.case4 == 2 * r_of(m - 2)),
        CaseCheck(
            "case5",
            bd.case5,
            2 * (w_next - r_of(m - 3)),
            bd.case5 == 2 * (w_next - r_of(m - 3)),
        ),
        CaseCheck("case_sum", bd.case_sum, bd.total, bd.case_sum == bd.total),
        CaseCheck(
            "window_total",
            bd.total,
            v_of(m) - v_of(m - 1),
            bd.total == v_of(m) - v_of(m - 1),
        ),
        CaseCheck("w", bd.w_bruteforce, w_m, bd.w_bruteforce == w_m),
    ]
    return CaseReport(m=m, checks=tuple(checks), passed=all(c.ok for c in checks))
