"""Command-line surface: tables, verifications, the exact solve, and figure data.

Exit codes: 0 success / all checks pass, 1 usage error, 2 a verification
failed, 3 a memory or enumeration budget was exceeded.
"""

import argparse
import sys

from . import analysis, casework, closed_form, moments, partitions
from .errors import BudgetError
from .fibonacci import fib, zeckendorf

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 by default, which collides with the
    # verification-failure code; route usage problems through EXIT_USAGE.
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="fibvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, help_text):
        return sub.add_parser(name, help=help_text)

    p = add("r", "print R(n), the number of partitions of n into distinct Fibonacci values")
    p.add_argument("--n", type=int, required=True)

    p = add("zeckendorf", "print the Zeckendorf decomposition of n")
    p.add_argument("--n", type=int, required=True)

    p = add("table", "CSV of n,R(n) for 0 <= n <= h-max")
    p.add_argument("--h-max", type=int, required=True)

    p = add("moments", "CSV of n,R(n),A(n),V(n) for 0 <= n <= h-max")
    p.add_argument("--h-max", type=int, required=True)

    p = add("verify-lemma", "check the five-term recurrence for V(F_m) on a range of m")
    p.add_argument("--from", dest="m_lo", type=int, default=7)
    p.add_argument("--to", dest="m_hi", type=int, required=True)

    p = add("verify-cases", "brute-force the five-way case decomposition on a range of m")
    p.add_argument("--from", dest="m_lo", type=int, default=7)
    p.add_argument("--to", dest="m_hi", type=int, required=True)

    p = add("verify-w", "compare the brute-forced auxiliary count w_m with its closed form")
    p.add_argument("--from", dest="m_lo", type=int, default=7)
    p.add_argument("--to", dest="m_hi", type=int, required=True)

    p = add("solve", "solve the recurrence exactly and print the coefficients")
    p.add_argument("--precision", type=int, default=30)

    p = add("closed-form", "evaluate the exact closed form of V(F_m)")
    p.add_argument("--m", type=int, required=True)

    p = add("exponents", "print phi, lambda, and the variance growth exponents")
    p.add_argument("--precision", type=int, default=30)

    p = add("figure", "CSV of H,V,norm_cs,norm_main for 1 <= H <= h-max")
    p.add_argument("--h-max", type=int, required=True)

    p = add("check-carlitz", "check R(F_m) = floor(m/2) for 2 <= m <= to")
    p.add_argument("--to", dest="m_max", type=int, required=True)

    p = add("check-sqrt-bound", "check R(n) <= sqrt(n+1) and its equality set up to h-max")
    p.add_argument("--h-max", type=int, required=True)

    return parser


def _cmd_r(args) -> int:
    print(partitions.r(args.n))
    return EXIT_OK


def _cmd_zeckendorf(args) -> int:
    if args.n < 1:
        raise _UsageError(f"--n must be >= 1, got {args.n}")
    repr_ = zeckendorf(args.n)
    terms = " + ".join(f"F_{i}" for i in repr_.indices)
    values = " + ".join(str(fib(i)) for i in repr_.indices)
    print(f"{args.n} = {terms} = {values}")
    return EXIT_OK


def _cmd_table(args) -> int:
    table = partitions.r_table(args.h_max)
    print("n,R")
    for n in range(args.h_max + 1):
        print(f"{n},{table.count(n)}")
    return EXIT_OK


def _cmd_moments(args) -> int:
    counts = partitions.r_table(args.h_max)
    mom = moments.moments_from_counts(counts)
    print("n,R,A,V")
    for n in range(args.h_max + 1):
        print(f"{n},{counts.count(n)},{mom.a_at(n)},{mom.v_at(n)}")
    return EXIT_OK


def _cmd_verify_lemma(args) -> int:
    rows = moments.verify_lemma(args.m_lo, args.m_hi)
    for row in rows:
        print(f"m={row.m} lhs={row.lhs} rhs={row.rhs} {'PASS' if row.equal else 'FAIL'}")
    ok = all(row.equal for row in rows)
    print(f"verify-lemma: {'PASS' if ok else 'FAIL'} ({sum(r.equal for r in rows)}/{len(rows)})")
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_verify_cases(args) -> int:
    if args.m_lo < 7:
        raise _UsageError(f"--from must be >= 7, got {args.m_lo}")
    all_ok = True
    for m in range(args.m_lo, args.m_hi + 1):
        report = casework.verify_cases(m)
        detail = " ".join(f"{c.name}={c.actual}/{c.expected}" for c in report.checks)
        print(f"m={m} {detail} {'PASS' if report.passed else 'FAIL'}")
        all_ok &= report.passed
    print(f"verify-cases: {'PASS' if all_ok else 'FAIL'}")
    return EXIT_OK if all_ok else EXIT_VERIFY


def _cmd_verify_w(args) -> int:
    if args.m_lo < 7:
        raise _UsageError(f"--from must be >= 7, got {args.m_lo}")
    all_ok = True
    for m in range(args.m_lo, args.m_hi + 1):
        brute = casework.w_bruteforce(m)
        closed = moments.w_closed_form(m)
        ok = brute == closed
        all_ok &= ok
        print(f"m={m} brute={brute} closed={closed} {'PASS' if ok else 'FAIL'}")
    print(f"verify-w: {'PASS' if all_ok else 'FAIL'}")
    return EXIT_OK if all_ok else EXIT_VERIFY


def _cmd_solve(args) -> int:
    sol = closed_form.solve_closed_form(precision_digits=args.precision)
    g0, g1, g2 = sol.c_field.coords()
    for name, value in (("g0", g0), ("g1", g1), ("g2", g2), ("c3", sol.c3), ("c4", sol.c4)):
        print(f"{name} = {value}")
    c1, c2, c3, c4, c5 = closed_form.embed_coefficients(sol, digits=args.precision)
    for name, value in (("c1", c1), ("c2", c2), ("c3", c3), ("c4", c4), ("c5", c5)):
        print(f"{name} ~ {value}")
    print(f"lambda1 = {sol.lambda1.value}")
    print(f"lambda2 = {sol.lambda2.value}")
    print(f"lambda5 = {sol.lambda5.value}")
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    if args.m < 2:
        raise _UsageError(f"--m must be >= 2, got {args.m}")
    sol = closed_form.solve_closed_form()
    value = closed_form.closed_form_v(args.m, sol)
    if value.denominator != 1:
        print(f"V(F_{args.m}) = {value}  (non-integer!)")
        return EXIT_VERIFY
    print(f"V(F_{args.m}) = {value}")
    return EXIT_OK


def _cmd_exponents(args) -> int:
    constants = analysis.exponent_report(precision=args.precision)
    print(f"phi = {constants.phi}")
    print(f"lambda = {constants.lam}")
    print(f"exponent_cs = {constants.exponent_cs}")
    print(f"exponent_main = {constants.exponent_main}")
    return EXIT_OK


def _cmd_figure(args) -> int:
    analysis.write_figure_csv(args.h_max, sys.stdout)
    return EXIT_OK


def _cmd_check_carlitz(args) -> int:
    if args.m_max < 2:
        raise _UsageError(f"--to must be >= 2, got {args.m_max}")
    rows = partitions.check_carlitz(args.m_max)
    for row in rows:
        print(
            f"m={row.m} R(F_m)={row.r_fib} floor(m/2)={row.expected} "
            f"{'PASS' if row.ok else 'FAIL'}"
        )
    ok = all(row.ok for row in rows)
    print(f"check-carlitz: {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_VERIFY


def _cmd_check_sqrt_bound(args) -> int:
    passed, positions = partitions.check_sqrt_bound(args.h_max)
    print("equality at:", " ".join(str(n) for n in positions))
    print(f"check-sqrt-bound: {'PASS' if passed else 'FAIL'}")
    return EXIT_OK if passed else EXIT_VERIFY


_HANDLERS = {
    "r": _cmd_r,
    "zeckendorf": _cmd_zeckendorf,
    "table": _cmd_table,
    "moments": _cmd_moments,
    "verify-lemma": _cmd_verify_lemma,
    "verify-cases": _cmd_verify_cases,
    "verify-w": _cmd_verify_w,
    "solve": _cmd_solve,
    "closed-form": _cmd_closed_form,
    "exponents": _cmd_exponents,
    "figure": _cmd_figure,
    "check-carlitz": _cmd_check_carlitz,
    "check-sqrt-bound": _cmd_check_sqrt_bound,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fibvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"fibvar: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"fibvar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
