from decimal import Decimal
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from fibvar.exact import (
    CUBIC_MIN_POLY,
    CubicElement,
    SingularMatrixError,
    cubic_inv,
    cubic_mul,
    isolate_real_roots,
    poly_eval,
    power_trace,
    solve_linear_system,
)

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=12)
elements = st.builds(CubicElement, rationals, rationals, rationals)

_X = sp.symbols("x")
_MINPOLY = sp.Poly(_X**3 - 2 * _X**2 - 2 * _X + 2, _X, domain="QQ")


def to_sympy_poly(e: CubicElement) -> sp.Poly:
    return sp.Poly(
        sp.Rational(e.g0.numerator, e.g0.denominator)
        + sp.Rational(e.g1.numerator, e.g1.denominator) * _X
        + sp.Rational(e.g2.numerator, e.g2.denominator) * _X**2,
        _X,
        domain="QQ",
    )


def test_defining_relation():
    theta = CubicElement.theta()
    theta2 = CubicElement.of(0, 0, 1)
    assert cubic_mul(theta, theta2) == CubicElement.of(-2, 2, 2)


def test_one_is_identity():
    b = CubicElement.of(Fraction(3, 7), -2, Fraction(1, 5))
    assert cubic_mul(CubicElement.one(), b) == b


def test_theta2_squared():
    theta2 = CubicElement.of(0, 0, 1)
    assert cubic_mul(theta2, theta2) == CubicElement.of(-4, 2, 6)


@settings(max_examples=60)
@given(elements, elements)
def test_multiplication_matches_polynomial_reduction(a, b):
    product = cubic_mul(a, b)
    expected = (to_sympy_poly(a) * to_sympy_poly(b)).rem(_MINPOLY)
    assert to_sympy_poly(product) == expected


@settings(max_examples=40)
@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert cubic_mul(a, b) == cubic_mul(b, a)
    assert cubic_mul(cubic_mul(a, b), c) == cubic_mul(a, cubic_mul(b, c))
    assert cubic_mul(a, b + c) == cubic_mul(a, b) + cubic_mul(a, c)


def test_theta_inverse_closed_form():
    # theta * (theta^2 - 2 theta - 2) = -2, so 1/theta = -(theta^2 - 2 theta - 2)/2
    inv = cubic_inv(CubicElement.theta())
    assert inv == CubicElement.of(1, 1, Fraction(-1, 2))


@settings(max_examples=60)
@given(elements)
def test_inverse_roundtrip(a):
    if a.is_zero():
        with pytest.raises(ValueError):
            cubic_inv(a)
    else:
        assert cubic_mul(a, cubic_inv(a)) == CubicElement.one()


def test_power_trace_seeds_and_recurrence():
    assert [power_trace(k) for k in range(6)] == [3, 2, 8, 14, 40, 92]
    for k in range(3, 30):
        assert power_trace(k) == 2 * power_trace(k - 1) + 2 * power_trace(k - 2) - 2 * power_trace(k - 3)
    with pytest.raises(ValueError):
        power_trace(-1)


def test_power_trace_matches_numeric_roots():
    roots = isolate_real_roots(CUBIC_MIN_POLY, Fraction(1, 10**40))
    for k in range(41):
        numeric = sum(r.value**k for r in roots)
        assert abs(numeric - Decimal(int(power_trace(k)))) < Decimal("1e-20") * max(
            Decimal(1), abs(numeric)
        )


def test_solve_identity_system():
    eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    b = [Fraction(5), Fraction(-1, 3), Fraction(7, 2)]
    assert solve_linear_system(eye, b) == b


def test_solve_two_by_two():
    solution = solve_linear_system([[1, 1], [1, -1]], [1, 0])
    assert solution == [Fraction(1, 2), Fraction(1, 2)]


def test_solve_requires_pivoting():
    solution = solve_linear_system([[0, 1], [1, 0]], [3, 4])
    assert solution == [Fraction(4), Fraction(3)]


def test_singular_matrix_detected():
    with pytest.raises(SingularMatrixError):
        solve_linear_system([[1, 1], [2, 2]], [1, 2])


def test_solver_rejects_malformed_input():
    with pytest.raises(ValueError):
        solve_linear_system([[1, 2, 3], [4, 5, 6]], [1, 2])


@settings(max_examples=50)
@given(
    st.lists(
        st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=3, max_size=3),
        min_size=3,
        max_size=3,
    ),
    st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=7), min_size=3, max_size=3),
)
def test_solver_reproduces_rhs_exactly(matrix, rhs):
    try:
        solution = solve_linear_system(matrix, rhs)
    except SingularMatrixError:
        det = sp.Matrix(3, 3, [sp.Rational(f.numerator, f.denominator) for row in matrix for f in row]).det()
        assert det == 0
        return
    for row, b in zip(matrix, rhs):
        assert sum(c * x for c, x in zip(row, solution)) == b


def test_isolate_roots_of_the_cubic():
    roots = isolate_real_roots(CUBIC_MIN_POLY, Fraction(1, 10**30))
    assert len(roots) == 3
    # descending order, matching ~2.4812 > ~0.6889 > ~-1.1701
    values = [r.value for r in roots]
    assert values == sorted(values, reverse=True)
    assert abs(values[0] - Decimal("2.481194304092015622633537241217")) < Decimal("1e-29")
    assert abs(values[1] - Decimal("0.688892182534018100069718523209")) < Decimal("1e-29")
    assert abs(values[2] - Decimal("-1.170086486626033722703255764425")) < Decimal("1e-29")
    coeffs = [Fraction(c) for c in CUBIC_MIN_POLY]
    for root in roots:
        assert root.high - root.low <= root.precision
        assert poly_eval(coeffs, root.low) * poly_eval(coeffs, root.high) < 0
        # Cauchy bound for the monic cubic: all roots in [-3, 3]
        assert Fraction(-3) <= root.low < root.high <= Fraction(3)
    # brackets pairwise disjoint
    assert roots[2].high < roots[1].low and roots[1].high < roots[0].low


def test_isolate_roots_with_exact_rational_roots():
    # x^3 - x = x(x-1)(x+1): grid points land on the roots and must be dodged
    roots = isolate_real_roots((0, -1, 0, 1), Fraction(1, 10**20))
    got = [r.value for r in roots]
    for value, want in zip(got, (1, 0, -1)):
        assert abs(value - want) < Decimal("1e-19")


def test_isolate_roots_rejects_non_separable_cubics():
    with pytest.raises(ValueError):
        isolate_real_roots((-1, 3, -3, 1))  # (x-1)^3
    with pytest.raises(ValueError):
        isolate_real_roots((0, 1, 0, 1))  # x^3 + x, one real root


def test_isolate_roots_honors_precision():
    root = isolate_real_roots(CUBIC_MIN_POLY, Fraction(1, 10**50))[0]
    assert root.high - root.low <= Fraction(1, 10**50)


def test_rational_type_is_reduced():
    assert Fraction(2, 4) == Fraction(1, 2)
    assert Fraction(3, -6).denominator == 2
