"""Fibonacci partition counts, their second moment, and exact variance asymptotics."""

from .analysis import AsymptoticConstants, FigureRow, exponent_report, figure_rows, write_figure_csv
from .casework import (
    CaseBreakdown,
    CaseReport,
    SubsetPair,
    case_breakdown,
    count_window,
    verify_cases,
    w_bruteforce,
    window_solutions,
)
from .closed_form import (
    ClosedFormSolution,
    RecurrenceSpec,
    VARIANCE_RECURRENCE,
    asymptotic_constant,
    build_trace_system,
    closed_form_v,
    embed_coefficients,
    particular_part,
    solve_closed_form,
)
from .errors import BudgetError
from .exact import (
    CubicElement,
    IsolatedRoot,
    Rational,
    SingularMatrixError,
    cubic_inv,
    cubic_mul,
    isolate_real_roots,
    power_trace,
    solve_linear_system,
)
from .fibonacci import FibTable, ZeckendorfRepr, distinct_fib_upto, fib, fib_table, zeckendorf
from .moments import (
    FibMomentSeries,
    MomentTable,
    fib_moment_series,
    moment_table,
    moments_from_counts,
    v_at_fib,
    verify_lemma,
    w_closed_form,
)
from .partitions import CountTable, check_carlitz, check_sqrt_bound, r, r_table

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstants",
    "BudgetError",
    "CaseBreakdown",
    "CaseReport",
    "ClosedFormSolution",
    "CountTable",
    "CubicElement",
    "FibMomentSeries",
    "FibTable",
    "FigureRow",
    "IsolatedRoot",
    "MomentTable",
    "Rational",
    "RecurrenceSpec",
    "SingularMatrixError",
    "SubsetPair",
    "VARIANCE_RECURRENCE",
    "ZeckendorfRepr",
    "asymptotic_constant",
    "build_trace_system",
    "case_breakdown",
    "check_carlitz",
    "check_sqrt_bound",
    "closed_form_v",
    "count_window",
    "cubic_inv",
    "cubic_mul",
    "distinct_fib_upto",
    "embed_coefficients",
    "exponent_report",
    "fib",
    "fib_moment_series",
    "fib_table",
    "figure_rows",
    "isolate_real_roots",
    "moment_table",
    "moments_from_counts",
    "particular_part",
    "power_trace",
    "r",
    "r_table",
    "solve_closed_form",
    "solve_linear_system",
    "v_at_fib",
    "verify_cases",
    "verify_lemma",
    "w_bruteforce",
    "w_closed_form",
    "window_solutions",
    "write_figure_csv",
    "zeckendorf",
]
