import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from edcert import FormalPoly

PHI5 = FormalPoly.from_coeffs([1, 1, 1, 1, 1])


def poly(*coeffs, n=None):
    return FormalPoly.from_coeffs(coeffs, formal_degree=n)


def test_construction_and_formal_degree():
    A = poly(9, 0, -14, 0, 1)
    assert A.formal_degree == 4 and A.actual_degree == 4
    B = poly(1, 2, n=5)
    assert B.formal_degree == 5 and B.actual_degree == 1
    assert FormalPoly.zero(3).formal_degree == 3
    assert FormalPoly.zero(3).actual_degree == -1
    with pytest.raises(ValueError):
        FormalPoly.from_coeffs([1, 2, 3], formal_degree=1)
    with pytest.raises(ValueError):
        FormalPoly(())


def test_add():
    assert poly(1, 0, 1) + poly(0, 0, -1) == poly(1, 0, 0)
    A = poly(3, 1, 4)
    assert A + FormalPoly.zero(2) == A
    assert poly(2, 1) + poly(4, 1) == poly(6, 2)
    # formal degree of a sum is the max of the operands'
    assert (poly(1, n=4) + poly(1)).formal_degree == 4


def test_mul():
    assert poly(2, 1) * poly(4, 1) == poly(8, 6, 1)  # (x+2)(x+4), by hand
    A = poly(5, 0, 3)
    assert A * poly(1) == A
    assert (A * FormalPoly.zero(2)) == FormalPoly.zero(4)
    # formal degrees add even when the product is zero
    assert (FormalPoly.zero(2) * FormalPoly.zero(3)).formal_degree == 5


def test_eval():
    assert poly(8, 4, 1).eval(0) == 8
    assert PHI5.eval(1) == 5
    # independent power-sum computation: sum_{i<5} (-1/4)^i == 205/256
    t = Fraction(-1, 4)
    expected = sum(t**i for i in range(5))
    assert expected == Fraction(205, 256)
    assert PHI5.eval(t) == expected
    assert PHI5(t) == expected


def test_derivative():
    assert poly(8, 4, 1).derivative() == poly(4, 2)
    assert poly(7).derivative() == FormalPoly.zero(0)
    assert poly(9, 0, -14, 0, 1).derivative() == poly(0, -28, 0, 4)
    assert poly(1, 1).derivative().formal_degree == 0


def test_taylor_shift():
    assert poly(0, 0, 1).taylor_shift(1) == poly(1, 2, 1)
    assert poly(8, 4, 1).taylor_shift(-2) == poly(4, 0, 1)
    shifted = PHI5.taylor_shift(Fraction(-1, 4))
    assert shifted.constant == Fraction(205, 256)
    assert shifted.leading == 1
    assert shifted.formal_degree == 4


def test_taylor_shift_matches_binomial_expansion():
    # oracle: expand sum a_k (x+t)^k by repeated multiplication
    rng = random.Random(7)
    x_plus_t = lambda t: poly(t, 1)
    for _ in range(25):
        n = rng.randint(0, 6)
        A = FormalPoly.from_coeffs([rng.randint(-9, 9) for _ in range(n + 1)])
        t = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
        expected = FormalPoly.zero(n)
        power = poly(1, n=0)
        for k in range(n + 1):
            expected = expected + power.scale_all(A.coeffs[k]) if A.coeffs[k] else expected
            power = power * x_plus_t(t)
        expected = FormalPoly.from_coeffs(expected.coeffs[: n + 1], formal_degree=n)
        assert A.taylor_shift(t) == expected


def test_reverse():
    assert poly(-2, 0, 1, 1).reverse() == poly(1, 1, 0, -2)
    assert poly(8, 4, 1).reverse() == poly(1, 4, 8)
    A = poly(3, 0, 0, n=4)
    assert A.reverse().reverse() == A
    assert A.reverse().formal_degree == 4


def test_scalings():
    assert poly(1, 0, 1).scale_arg(2) == poly(1, 0, 4)
    assert poly(1, 0, 1).scale_all(3) == poly(3, 0, 3)
    A = poly(2, -1, 5)
    assert A.scale_arg(1) == A
    with pytest.raises(ValueError):
        A.scale_arg(0)
    with pytest.raises(ValueError):
        A.scale_all(Fraction(0))


small_coeffs = st.lists(
    st.fractions(min_value=-20, max_value=20, max_denominator=8), min_size=1, max_size=7
)
small_rationals = st.fractions(min_value=-10, max_value=10, max_denominator=6)


@settings(max_examples=60)
@given(small_coeffs, small_rationals, small_rationals)
def test_shift_additivity(coeffs, s, t):
    A = FormalPoly.from_coeffs(coeffs)
    assert A.taylor_shift(s).taylor_shift(t) == A.taylor_shift(s + t)


@settings(max_examples=60)
@given(small_coeffs, small_rationals, small_rationals)
def test_shift_agrees_with_evaluation(coeffs, t, x):
    A = FormalPoly.from_coeffs(coeffs)
    assert A.taylor_shift(t).eval(x) == A.eval(x + t)


@settings(max_examples=60)
@given(small_coeffs, small_coeffs)
def test_product_rule(ca, cb):
    A, B = FormalPoly.from_coeffs(ca), FormalPoly.from_coeffs(cb)
    lhs = (A * B).derivative()
    rhs = A.derivative() * B + A * B.derivative()
    # around constants the formal degrees differ by one; pad before comparing
    m = max(lhs.formal_degree, rhs.formal_degree)
    assert FormalPoly.from_coeffs(lhs.coeffs, formal_degree=m) == FormalPoly.from_coeffs(
        rhs.coeffs, formal_degree=m
    )
