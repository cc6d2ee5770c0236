from fractions import Fraction

import mpmath
import pytest

from qident.families import SchemaError
from qident.limits import (
    LIMIT_IDS,
    limit_check,
    qpoch_float,
    qpoch_inf_float,
    qpoch_lambda_float,
    q_schedule,
)


def test_schedule():
    assert q_schedule(3) == [Fraction(15, 16), Fraction(31, 32), Fraction(63, 64)]


def test_fact_value_near_one():
    with mpmath.workprec(128):
        q = mpmath.mpf("0.999")
        value = (1 - q) ** 2 / qpoch_float(q, q, 2)
        assert abs(value - mpmath.mpf("0.50025")) < 1e-6


def test_fact_n_zero_is_exact():
    report = limit_check("LIM-FACT", {"n": 0})
    assert all(e == 0 for e in report.errors)
    assert report.status == "pass" and report.rate is None


def test_infinite_product_against_direct_product():
    with mpmath.workprec(200):
        q, x = mpmath.mpf(1) / 3, mpmath.mpf("-0.4")
        direct = qpoch_float(x, q, 400)
        tol = mpmath.mpf(2) ** -100
        assert abs(qpoch_inf_float(x, q, tol) - direct) < tol * 10
        L = q ** 5
        assert abs(qpoch_lambda_float(x, q, L, tol) - qpoch_float(x, q, 5)) < tol * 10


def test_phi22_degenerate_parameters():
    report = limit_check("LIM-PHI22", {"a": Fraction(1, 2), "b": Fraction(1, 2), "c": Fraction(1, 2),
                                       "d": Fraction(1, 2), "t": Fraction(1, 3)})
    assert report.status == "pass"
    assert report.final_error < 1e-4


def test_cor_j_example():
    report = limit_check("LIM-COR-J", {"m": 1, "j": 0, "t": Fraction(1, 4)})
    with mpmath.workprec(256):
        assert abs(report.target - mpmath.mpf(20) / 9) < mpmath.mpf(10) ** -50
    assert report.final_error < 1e-3
    assert report.status == "pass"


def test_cor_j_with_lambda():
    report = limit_check("LIM-COR-J", {"m": 2, "j": 1, "lam": Fraction(3, 2), "t": Fraction(1, 3)})
    assert report.status == "pass"


@pytest.mark.parametrize("m", range(5))
def test_l11_domain(m):
    for t in (Fraction(-1, 2), Fraction(1, 2)):
        assert limit_check("LIM-L11", {"m": m, "t": t}, steps=10).status == "pass"


@pytest.mark.parametrize("limit_id", LIMIT_IDS)
def test_precision_does_not_change_errors(limit_id):
    low = limit_check(limit_id, precision=128)
    high = limit_check(limit_id, precision=256)
    for a, b in zip(low.errors, high.errors):
        assert abs(a - b) <= 1e-10 * b


def test_fact_n_one_is_exact():
    # (1 - q) / (q; q)_1 = 1 identically
    report = limit_check("LIM-FACT", {"n": 1})
    assert all(e == 0 for e in report.errors) and report.rate is None


def test_rates_are_first_order():
    for n in range(2, 6):
        assert 0.5 <= limit_check("LIM-FACT", {"n": n}).rate <= 1.5
    assert 0.5 <= limit_check("LIM-EXP", {"t": Fraction(1, 2)}).rate <= 1.5


def test_errors_and_usage():
    with pytest.raises(ValueError):
        limit_check("LIM-FACT", {"n": 2}, precision=32)
    with pytest.raises(ValueError):
        limit_check("LIM-FACT", {"n": 2}, steps=2)
    with pytest.raises(KeyError):
        limit_check("LIM-NOPE", {})
    with pytest.raises(SchemaError):
        limit_check("LIM-EXP", {"t": Fraction(3, 4)})
    with pytest.raises(SchemaError):
        limit_check("LIM-COR-J", {"m": 1})


def test_coarse_schedule_is_reported_as_fail():
    # three steps stop at q = 63/64, too far from 1 for the tolerance
    coarse = limit_check("LIM-L11", {"m": 4, "t": Fraction(1, 2)}, steps=3)
    assert coarse.status == "fail"


def test_json_shape():
    out = limit_check("LIM-FACT", {"n": 2}, steps=4).to_json()
    assert list(out) == ["id", "point", "precision_bits", "steps", "rate", "status"]
    assert len(out["steps"]) == 4
    assert set(out["steps"][0]) == {"q", "error"}


def test_unsettled_series_is_a_fail_not_a_crash(monkeypatch):
    import qident.limits as limits
    monkeypatch.setattr(limits, "MAX_TERMS", 5)
    report = limits.limit_check("LIM-COR-J", {"m": 1, "j": 0, "t": Fraction(1, 4)})
    assert report.status == "fail"
    assert all(not mpmath.isfinite(e) for e in report.errors)
    assert report.to_json()["steps"][0]["error"] == "+inf"
