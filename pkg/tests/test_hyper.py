from fractions import Fraction

import pytest
import sympy

from oracles import linear_product, pfq_sum, phi_sum, poly_inv, qpoch, sym, taylor
from qident.hyper import (
    LinearT,
    NonTerminatingError,
    Pair,
    VanishingDenominatorError,
    Zero,
    f_eval_scalar,
    f_series,
    hyp,
    phi,
    phi_eval_scalar,
    phi_series,
    phi_series_direct,
    termination_index,
)
from qident.properties import run_property
from qident.qcore import QBase, qpoch_inf_reciprocal_series, qpoch_inf_series
from qident.series import TruncatedSeries

BASE = QBase(Fraction(2, 3))
Q = BASE.q


def test_pair_counts_twice_in_compensation():
    spec = phi([-Q, BASE.p, -BASE.p, Zero()], [Q, Pair(Q), Pair(BASE.p)], LinearT(1), BASE)
    assert (spec.r, spec.s, spec.compensation) == (4, 5, 2)


def test_pairs_rejected_classically():
    with pytest.raises(ValueError):
        hyp([Pair(1)], [], 1)


def test_numerator_one_terminates_immediately():
    spec = phi([1, Fraction(3, 7)], [Fraction(1, 5)], Fraction(9, 2), BASE)
    assert termination_index(spec) == 0
    assert phi_eval_scalar(spec) == 1


def test_batemanz_one_example():
    z = Fraction(-5, 3)
    value = phi_eval_scalar(phi([1 / Q, Q * Q], [Q, Q], Q * z, BASE))
    assert value == 1 + (1 + Q) * z / (1 - Q)


def test_negative_compensation_example():
    z, Z = Fraction(7, 2), Fraction(1, 9)
    value = phi_eval_scalar(phi([1 / Q, Z], [], Q / z, BASE))
    assert value == 1 + (1 - Z) / z


@pytest.mark.parametrize("n", [0, 1, 3, 6])
def test_scalar_sums_match_definition(n):
    z = Fraction(-4, 7)
    num, den, x = [Q ** -n, Q ** (n + 1), z], [Q, Fraction(1, 3)], Q ** n
    assert phi_eval_scalar(phi(num, den, x, BASE)) == phi_sum(num, den, x, Q, n + 1)
    num, den, x = [Q ** -n, z], [], Q ** n / Fraction(5)
    assert phi_eval_scalar(phi(num, den, x, BASE)) == phi_sum(num, den, x, Q, n + 1)


def test_non_terminating_and_vanishing_denominator():
    with pytest.raises(NonTerminatingError):
        phi_eval_scalar(phi([Fraction(1, 3)], [], Fraction(1, 2), BASE))
    with pytest.raises(VanishingDenominatorError):
        phi_eval_scalar(phi([Q ** -3], [Q ** -1], 1, BASE))


def test_linear_zero_argument_gives_constant():
    spec = phi([Fraction(1, 3), Fraction(2)], [Fraction(5, 7)], LinearT(0), BASE)
    assert phi_series(spec, 6) == TruncatedSeries.one(6)


def test_q_binomial_theorem_example():
    a = Fraction(-3, 5)
    lhs = phi_series(phi([a], [], LinearT(1), BASE), 12)
    assert lhs == qpoch_inf_series(a, BASE, 12) * qpoch_inf_reciprocal_series(1, BASE, 12)


def test_bateman_generating_function_first_coefficient():
    a = Fraction(3, 11)
    p = BASE.p
    body = phi_series(phi([-Q, p, -p, a, Zero()], [Q, Pair(p), Pair(Q)], LinearT(1), BASE), 4)
    assert body.div_linear(1)[1] == 1 - (1 + Q) * (1 - a) / (1 - Q)


def test_series_with_half_powers_against_definition():
    # every factor of the conjugate pairs written out in s = t^(1/2)
    p, q, a, N = BASE.p, Q, Fraction(3, 4), 5
    order = 2 * N
    total = [Fraction(0)] * (order + 1)
    for k in range(N + 1):
        scalar = qpoch(-q, k, q) * qpoch(p, k, q) * qpoch(-p, k, q) * qpoch(a, k, q)
        scalar /= qpoch(q, k, q) * qpoch(q, k, q)
        # r = s = 5 counting each pair twice, so the compensation exponent is 1
        scalar *= (-1) ** k * q ** (k * (k - 1) // 2)
        roots = [c * q ** i for c in (p, -p, q, -q) for i in range(k)]
        term = poly_inv(linear_product(roots, order), order)
        shifted = [Fraction(0)] * (2 * k) + term
        for i in range(order + 1):
            total[i] += scalar * shifted[i]
    assert all(total[2 * i + 1] == 0 for i in range(N))
    spec = phi([-q, p, -p, a, Zero()], [q, Pair(p), Pair(q)], LinearT(1), BASE)
    assert list(phi_series(spec, N).coeffs) == total[::2]


def test_f_eval_examples():
    for n in range(6):
        assert f_eval_scalar(hyp([-1, 2, -n], [1, 1], 1)) == 1 + 2 * n
    z = Fraction(5, 3)
    assert f_eval_scalar(hyp([-1, z], [], -1 / z)) == 2
    assert f_eval_scalar(hyp([0, Fraction(1, 2)], [Fraction(3, 2)], 7)) == 1


def test_f_eval_matches_definition():
    spec = hyp([-5, Fraction(7, 3), Fraction(-1, 2)], [Fraction(5, 4), 3], Fraction(-2, 9))
    assert f_eval_scalar(spec) == pfq_sum([-5, Fraction(7, 3), Fraction(-1, 2)],
                                         [Fraction(5, 4), 3], Fraction(-2, 9), 6)


def test_f_series_examples():
    t = sympy.Symbol("t")
    zero = TruncatedSeries.constant(0, 5)
    assert f_series(hyp([Fraction(1, 2)], [1]), zero) == TruncatedSeries.one(5)
    z = Fraction(3, 4)
    inner = (TruncatedSeries.monomial(-4 * z, 1, 5)).div_linear(1).div_linear(1)
    assert f_series(hyp([Fraction(1, 2)], [1]), inner)[1] == -2 * z
    lam = Fraction(5, 2)
    inner = TruncatedSeries.monomial(1, 1, 5).div_linear(z)
    out = f_series(hyp([lam, z], []), inner)
    assert out[1] == lam * z
    # against sympy's expansion of the same composition
    u = t / (1 - sym(z) * t)
    expected = taylor(sum(sympy.rf(sym(lam), k) * sympy.rf(sym(z), k) / sympy.factorial(k) * u ** k
                          for k in range(6)), t, 5)
    assert list(out.coeffs) == expected


def test_f_series_rejects_constant_inner():
    with pytest.raises(ValueError):
        f_series(hyp([Fraction(1, 2)], [1]), TruncatedSeries([1, 1, 0]))


@pytest.mark.parametrize("name", ["q-binomial theorem", "terminating invariance", "pair consistency"])
def test_hyper_properties(name):
    result = run_property("hyper", name)
    assert result.passed, result.detail


def test_direct_expansion_agrees_on_linear_denominators():
    spec = phi([Q ** -4, Q ** 5, Fraction(2, 3)], [Q, Q ** 2, LinearT(Fraction(3, 7))], LinearT(1), BASE)
    assert phi_series(spec, 10) == phi_series_direct(spec, 10)
