from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import taylor
from qident.series import (
    FLOAT,
    TruncatedSeries,
    binomial_series,
    exp_series,
    series_coeff,
    series_compose,
    series_equal_to_order,
    series_mul,
    series_reciprocal,
)

T = sympy.Symbol("t")


def S(*coeffs, order=None):
    coeffs = [Fraction(c) for c in coeffs]
    if order is not None:
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
    return TruncatedSeries(coeffs)


def geometric(order, ratio=1):
    return TruncatedSeries([Fraction(ratio) ** k for k in range(order + 1)])


def test_mul_examples():
    assert series_mul(S(1, 1, order=4), S(1, -1, order=4)) == S(1, 0, -1, order=4)
    assert series_mul(geometric(4), S(1, -1, order=4)) == S(1, order=4)
    assert series_mul(S(1, 2, order=2), S(3, 1, order=2)) == S(3, 7, 2)


def test_mul_truncates_to_min_order():
    assert (S(1, 1, order=6) * S(1, 1, order=2)).order == 2


def test_reciprocal_examples():
    assert series_reciprocal(S(1, -1, order=5)) == geometric(5)
    assert series_reciprocal(S(2)) == S(Fraction(1, 2))
    assert series_reciprocal(S(1, -2, order=3)) == S(1, 2, 4, 8)


def test_reciprocal_zero_constant():
    with pytest.raises(ZeroDivisionError):
        series_reciprocal(S(0, 1, order=3))


def test_compose_examples():
    inner = S(0, 1, order=3).div_linear(1)          # t/(1-t)
    assert series_compose(geometric(3), inner) == S(1, 1, 2, 4)
    square = TruncatedSeries.polynomial_of([0, 0, 1], 2)
    assert series_compose(square, S(1, 1, order=2)) == S(1, 2, 1)
    f = S(3, -1, 4, 7)
    assert series_compose(f, S(0, 1, order=3)) == f


def test_compose_rejects_constant_inner_for_series_outer():
    with pytest.raises(ValueError):
        series_compose(geometric(3), S(1, 1, order=3))


def test_coeff_examples():
    assert series_coeff(geometric(7), 7) == 1
    assert series_coeff(S(1, -1), 1) == -1
    assert series_coeff(S(1, 1, order=3) ** 3, 2) == 3
    with pytest.raises(IndexError):
        series_coeff(S(1, -1), 2)


def test_equal_to_order_examples():
    f = S(1, 1, order=2)
    assert series_equal_to_order(f, f, 2) == (True, None)
    assert series_equal_to_order(S(1, 1, order=2), S(1, 1, 1), 1) == (True, None)
    ok, mismatch = series_equal_to_order(S(1, 1), S(1, 2), 1)
    assert not ok
    assert tuple(mismatch) == (1, 1, 2)
    with pytest.raises(ValueError):
        series_equal_to_order(S(1, 1), S(1, 1), 2)


def test_structured_products_match_general_ones():
    f = S(1, 2, -3, 5, order=8)
    assert f.mul_linear(Fraction(3, 4)) == f * S(1, Fraction(-3, 4), order=8)
    assert f.div_linear(Fraction(3, 4)) == f / S(1, Fraction(-3, 4), order=8)
    assert f.shift(2) == f * S(0, 0, 1, order=8)


def test_exp_and_binomial_series_against_taylor():
    assert list(exp_series(Fraction(2, 3), 8).coeffs) == taylor(sympy.exp(sympy.Rational(2, 3) * T), T, 8)
    expected = taylor((1 - sympy.Rational(1, 2) * T) ** sympy.Rational(-3, 2), T, 8)
    assert list(binomial_series(Fraction(3, 2), Fraction(1, 2), 8).coeffs) == expected


def test_kinds_do_not_mix():
    exact = S(1, 1)
    floating = TruncatedSeries([mpmath.mpf(1), mpmath.mpf(1)], kind=FLOAT)
    with pytest.raises(TypeError):
        exact + floating


series_st = st.lists(st.fractions(max_denominator=50, min_value=-20, max_value=20),
                     min_size=7, max_size=7).map(TruncatedSeries)


@settings(max_examples=60)
@given(series_st, series_st, series_st)
def test_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60)
@given(series_st)
def test_reciprocal_contract(f):
    if f[0] != 0:
        assert f * series_reciprocal(f) == TruncatedSeries.one(f.order)


@settings(max_examples=30)
@given(series_st, series_st, series_st)
def test_compose_associative(f, g, h):
    g, h = g.shift(1), h.shift(1)
    assert series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h))
