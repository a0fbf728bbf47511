"""Exact solution of the inhomogeneous five-term recurrence for V(F_m).

The homogeneous part has characteristic polynomial

    x^5 - 2x^4 - 3x^3 + 4x^2 + 2x - 2 = (x - 1)(x + 1)(x^3 - 2x^2 - 2x + 2),

so the general solution mixes powers of lambda_3 = 1, lambda_4 = -1 and the
three real roots lambda_1 > lambda_5 > lambda_2 of the cubic.  A particular
solution of the forced recurrence is m^2/4 - m*eps_m/2 with eps_m = m mod 2.

Because the three irrational roots are conjugate, the matching coefficients
c_1, c_2, c_5 are the embeddings of a single element c(theta) of Q(theta),
and the sum over them of c_i * lambda_i^m is the trace Tr(c(theta) theta^m)
= g0*p_m + g1*p_{m+1} + g2*p_{m+2}, a rational linear functional of the
coordinates of c(theta).  Matching the initial data (V(F_2)..V(F_6)) =
(2, 3, 7, 12, 26) therefore reduces to one 5x5 rational solve in the
unknowns (g0, g1, g2, c3, c4): row m reads

    g0*p_m + g1*p_{m+1} + g2*p_{m+2} + c3 + (-1)^m c4
        = V(F_m) - (m^2/4 - m*eps_m/2),      m = 2..6,

with right-hand side (1, 9/4, 3, 33/4, 17).
"""

from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .exact import (
    CUBIC_MIN_POLY,
    CubicElement,
    IsolatedRoot,
    isolate_real_roots,
    poly_mul,
    power_trace,
    solve_linear_system,
)

# x^5 - 2x^4 - 3x^3 + 4x^2 + 2x - 2, ascending degree
CHAR_POLY: tuple[int, ...] = (-2, 2, 4, -3, -2, 1)

INITIAL_DATA: tuple[int, ...] = (2, 3, 7, 12, 26)  # V(F_2)..V(F_6)


def characteristic_polynomial() -> list[int]:
    """Expand (x - 1)(x + 1)(x^3 - 2x^2 - 2x + 2); equals CHAR_POLY."""
    return poly_mul(poly_mul((-1, 1), (1, 1)), CUBIC_MIN_POLY)


@dataclass(frozen=True)
class RecurrenceSpec:
    """The five-term recurrence with its forcing, initial data, and char poly."""

    lag_coeffs: tuple[int, ...] = (2, 3, -4, -2, 2)
    initial: tuple[int, ...] = INITIAL_DATA  # values at m = 2..6
    char_poly: tuple[int, ...] = CHAR_POLY

    def forcing(self, m: int) -> int:
        return 1 - 2 * (m // 2)

    def step(self, history, m: int):
        """history[-1] is the value at m-1, back to history[-5] at m-5."""
        homog = sum(c * history[-lag] for lag, c in enumerate(self.lag_coeffs, start=1))
        return homog + self.forcing(m)


VARIANCE_RECURRENCE = RecurrenceSpec()


def particular_part(m: int) -> Fraction:
    """m^2/4 - m*eps_m/2, the parity-split quadratic particular solution."""
    if m < 2:
        raise ValueError(f"particular solution defined for m >= 2, got {m}")
    eps = m % 2
    return Fraction(m * m, 4) - Fraction(m * eps, 2)


def build_trace_system() -> tuple[list[list[Fraction]], list[Fraction]]:
    """The 5x5 rational system in (g0, g1, g2, c3, c4); rows are m = 2..6."""
    matrix = []
    rhs = []
    for m in range(2, 7):
        matrix.append(
            [
                power_trace(m),
                power_trace(m + 1),
                power_trace(m + 2),
                Fraction(1),
                Fraction((-1) ** m),
            ]
        )
        rhs.append(Fraction(INITIAL_DATA[m - 2]) - particular_part(m))
    return matrix, rhs


@dataclass(frozen=True)
class ClosedFormSolution:
    """Exact coefficients plus certified numeric roots of the cubic factor.

    roots is sorted by decreasing value: (lambda_1, lambda_5, lambda_2)
    numerically about (2.4812, 0.6889, -1.1701).
    """

    c_field: CubicElement
    c3: Fraction
    c4: Fraction
    roots: tuple[IsolatedRoot, IsolatedRoot, IsolatedRoot] = field(repr=False)

    @property
    def lambda1(self) -> IsolatedRoot:
        return self.roots[0]

    @property
    def lambda5(self) -> IsolatedRoot:
        return self.roots[1]

    @property
    def lambda2(self) -> IsolatedRoot:
        return self.roots[2]


def solve_closed_form(precision_digits: int = 30) -> ClosedFormSolution:
    """Solve the trace system exactly and isolate the cubic's roots."""
    matrix, rhs = build_trace_system()
    g0, g1, g2, c3, c4 = solve_linear_system(matrix, rhs)
    roots = isolate_real_roots(CUBIC_MIN_POLY, Fraction(1, 10**precision_digits))
    return ClosedFormSolution(
        c_field=CubicElement(g0, g1, g2),
        c3=c3,
        c4=c4,
        roots=(roots[0], roots[1], roots[2]),
    )


def closed_form_v(m: int, sol: ClosedFormSolution) -> Fraction:
    """Exact V(F_m) from the closed form; always a nonnegative integer.

    Evaluates g0*p_m + g1*p_{m+1} + g2*p_{m+2} + c3 + (-1)^m c4 plus the
    particular part, entirely over the rationals.
    """
    if m < 2:
        raise ValueError(f"closed form defined for m >= 2, got {m}")
    g0, g1, g2 = sol.c_field.coords()
    trace_part = g0 * power_trace(m) + g1 * power_trace(m + 1) + g2 * power_trace(m + 2)
    return trace_part + sol.c3 + (-1) ** m * sol.c4 + particular_part(m)


def embed_coefficients(
    sol: ClosedFormSolution, digits: int = 30
) -> tuple[Decimal, Decimal, Decimal, Decimal, Decimal]:
    """Decimal values of (c_1, c_2, c_3, c_4, c_5), c_i attached to lambda_i."""
    with localcontext() as ctx:
        ctx.prec = digits
        c1 = +sol.c_field.embed(sol.lambda1.value)
        c2 = +sol.c_field.embed(sol.lambda2.value)
        c5 = +sol.c_field.embed(sol.lambda5.value)
        c3 = +(Decimal(sol.c3.numerator) / Decimal(sol.c3.denominator))
        c4 = +(Decimal(sol.c4.numerator) / Decimal(sol.c4.denominator))
    return c1, c2, c3, c4, c5


def asymptotic_constant(sol: ClosedFormSolution, digits: int = 30) -> Decimal:
    """The dominant coefficient c_1: V(F_m) / lambda_1^m tends to it."""
    with localcontext() as ctx:
        ctx.prec = digits
        return +sol.c_field.embed(sol.lambda1.value)
