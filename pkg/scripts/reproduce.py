#!/usr/bin/env python3
"""Run every verification end to end and regenerate the figure data.

Writes figure_6765.csv and figure_75025.csv (the two normalized-variance
plots) into --outdir and prints a summary of all checks.  Exits nonzero if
anything fails.
"""

import argparse
import sys
import time
from decimal import Decimal, localcontext
from pathlib import Path

from fibvar.analysis import exponent_report, write_figure_csv
from fibvar.casework import verify_cases
from fibvar.closed_form import (
    asymptotic_constant,
    closed_form_v,
    embed_coefficients,
    solve_closed_form,
)
from fibvar.fibonacci import fib
from fibvar.moments import fib_moment_series, moment_table, verify_lemma
from fibvar.partitions import check_carlitz, check_sqrt_bound


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--outdir", type=Path, default=Path("figures"))
    parser.add_argument("--lemma-max", type=int, default=28)
    parser.add_argument("--cases-max", type=int, default=16)
    args = parser.parse_args()

    failures = 0
    start = time.perf_counter()

    def check(label, ok):
        nonlocal failures
        print(f"  [{'ok' if ok else 'FAIL'}] {label}")
        failures += not ok

    print("initial data")
    series = fib_moment_series(6)
    check("V(F_2..F_6) = (2, 3, 7, 12, 26)", series.values[2:] == (2, 3, 7, 12, 26))

    print(f"five-term recurrence, m in [7, {args.lemma_max}]")
    rows = verify_lemma(7, args.lemma_max)
    check(f"{len(rows)} checkpoints", all(r.equal for r in rows))

    print(f"case decomposition, m in [7, {args.cases_max}]")
    reports = [verify_cases(m) for m in range(7, args.cases_max + 1)]
    check(f"{len(reports)} breakdowns", all(r.passed for r in reports))

    print("pointwise identities")
    check("Carlitz to m = 28", all(r.ok for r in check_carlitz(28)))
    check("sqrt bound to 1e6", check_sqrt_bound(10**6).passed)

    print("exact closed form")
    sol = solve_closed_form()
    g0, g1, g2 = sol.c_field.coords()
    print(f"  c(theta) = {g0} + {g1}*theta + {g2}*theta^2, c3 = {sol.c3}, c4 = {sol.c4}")
    c1, c2, c3, c4, c5 = embed_coefficients(sol, digits=15)
    print(f"  (c1, c2, c3, c4, c5) ~ ({c1}, {c2}, {c3}, {c4}, {c5})")
    dp = fib_moment_series(28)
    check(
        "matches the tables for m in [2, 28]",
        all(closed_form_v(m, sol) == dp.v(m) for m in range(2, 29)),
    )

    print("asymptotics")
    v30 = moment_table(fib(30)).v_at(fib(30))
    with localcontext() as ctx:
        ctx.prec = 40
        ratio = Decimal(v30) / (asymptotic_constant(sol, digits=40) * sol.lambda1.value**30)
    print(f"  V(F_30) / (c1 * lambda1^30) = {+ratio}")
    check("ratio within 1e-6 of 1", abs(ratio - 1) < Decimal("1e-6"))
    constants = exponent_report(30)
    print(f"  lambda = {constants.lam}")
    print(f"  exponent_cs = {constants.exponent_cs}")
    print(f"  exponent_main = {constants.exponent_main}")
    check("exponent_cs < exponent_main", constants.exponent_cs < constants.exponent_main)

    print("figure data")
    args.outdir.mkdir(parents=True, exist_ok=True)
    for h_max in (6765, 75025):
        path = args.outdir / f"figure_{h_max}.csv"
        with open(path, "w", newline="\n") as handle:
            write_figure_csv(h_max, handle)
        print(f"  wrote {path}")

    elapsed = time.perf_counter() - start
    print(f"done in {elapsed:.1f}s, {failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
