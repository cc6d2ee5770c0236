"""Numeric q -> 1 checks of the limit relations behind the classical
identities.

Each check evaluates a q-side quantity at ``q_k = 1 - 2^-(k+3)`` for
``k = 1..steps`` and compares it with its classical target.  Infinite
q-Pochhammer products are never multiplied out term by term (that would
need ~precision/(1-q) factors near q = 1); they are computed from

    log (x; q)_oo = - sum_{r>=1} x^r / (r (1 - q^r)),

which converges geometrically for |x| < 1 whatever q is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

import mpmath

from . import families as fam
from .hyper import f_eval_scalar, hyp
from .numerics import MIN_PRECISION, format_rational, to_float

DEFAULT_PRECISION = 256
DEFAULT_STEPS = 12
LIMIT_IDS = ("LIM-FACT", "LIM-EXP", "LIM-PHI22", "LIM-COR-J", "LIM-L11")
MAX_TERMS = 5000


@dataclass
class LimitReport:
    id: str
    point: dict[str, Fraction]
    precision: int
    target: mpmath.mpf
    steps: list[tuple[mpmath.mpf, mpmath.mpf]] = field(default_factory=list)
    rate: float | None = None
    status: str = "fail"

    @property
    def errors(self) -> list[mpmath.mpf]:
        return [e for _, e in self.steps]

    @property
    def final_error(self) -> mpmath.mpf:
        return self.steps[-1][1]

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "point": {k: format_rational(v) for k, v in self.point.items()},
            "precision_bits": self.precision,
            "steps": [{"q": mpmath.nstr(q, 20), "error": mpmath.nstr(e, 20)} for q, e in self.steps],
            "rate": None if self.rate is None else round(self.rate, 6),
            "status": self.status,
        }


# -- numeric q-primitives -------------------------------------------------------------

def qpoch_float(a, q, n: int):
    out = mpmath.mpf(1)
    x = mpmath.mpf(a)
    for _ in range(n):
        out *= 1 - x
        x *= q
    return out


def _log_qpoch_ratio(x, y, q, tol):
    """``log((x; q)_oo / (y; q)_oo)`` for ``|x|, |y| < 1``."""
    total = mpmath.mpf(0)
    xr, yr, qr = mpmath.mpf(1), mpmath.mpf(1), mpmath.mpf(1)
    bound = max(abs(x), abs(y))
    if bound >= 1:
        raise ValueError("the log expansion of (x;q)_oo needs |x| < 1")
    for r in range(1, MAX_TERMS):
        xr *= x
        yr *= y
        qr *= q
        term = (xr - yr) / (r * (1 - qr))
        total -= term
        # the tail after r is at most (|x|^r + |y|^r) bound / ((1 - bound) r (1 - q))
        if (abs(xr) + abs(yr)) * bound < tol * (1 - bound) * r * (1 - q):
            break
    return total


def qpoch_inf_float(x, q, tol):
    """``(x; q)_oo`` for ``|x| < 1``."""
    if x == 0:
        return mpmath.mpf(1)
    return mpmath.exp(_log_qpoch_ratio(x, mpmath.mpf(0), q, tol))


def qpoch_lambda_float(x, q, L, tol):
    """``(x; q)_lambda = (x; q)_oo / (x L; q)_oo`` with ``L = q^lambda``."""
    return mpmath.exp(_log_qpoch_ratio(x, x * L, q, tol))


def _qpow(q, a: Fraction):
    return mpmath.power(q, mpmath.mpf(a.numerator) / a.denominator)


def _sum_until_small(term_fn: Callable[[int], object], tol, minimum: int = 0):
    """Sum ``term_fn(0), term_fn(1), ...`` until two successive terms drop
    below ``tol`` relative to the running sum, after at least ``minimum``
    terms."""
    total = mpmath.mpf(0)
    quiet = 0
    for n in range(MAX_TERMS):
        term = term_fn(n)
        total += term
        if n >= minimum and abs(term) < tol * (1 + abs(total)):
            quiet += 1
            if quiet >= 2:
                return total
        else:
            quiet = 0
    raise ArithmeticError("series did not settle within the term budget")


# -- q-side and classical-side evaluators ---------------------------------------------

def _fact(point, q, tol):
    n = int(point["n"])
    return (1 - q) ** n / qpoch_float(q, q, n), mpmath.mpf(1) / math.factorial(n)


def _exp(point, q, tol):
    t = mpmath.mpf(point["t"].numerator) / point["t"].denominator
    return 1 / qpoch_inf_float(t * (1 - q), q, tol), mpmath.exp(t)


def _phi22(point, q, tol):
    a, b, c, d, t = (point[k] for k in ("a", "b", "c", "d", "t"))
    qa, qb, qc, qd = (_qpow(q, x) for x in (a, b, c, d))
    x = _as_mpf(t) * (q - 1)

    state = {"term": mpmath.mpf(1), "k": 0}

    def term(k):
        if k == 0:
            return state["term"]
        i = k - 1
        qi = q ** i
        ratio = ((1 - qa * qi) * (1 - qb * qi)
                 / ((1 - qc * qi) * (1 - qd * qi) * (1 - qi * q))
                 * (-qi) * x)
        state["term"] *= ratio
        return state["term"]

    value = _sum_until_small(term, tol, minimum=int(4 * abs(t)) + 4)
    target = mpmath.hyper([_as_mpf(a), _as_mpf(b)], [_as_mpf(c), _as_mpf(d)], _as_mpf(t))
    return value, target


def _as_mpf(x: Fraction):
    return mpmath.mpf(x.numerator) / x.denominator


def _pasternack_negodd_float(m: int, n: int, j: int, q):
    """``B^j_m(-2n-1-j; q)`` in floating point (argument ``q^n``)."""
    a1, a2, a3 = q ** (-m), q ** (m + 1), q ** (-n)
    b1 = q ** (j + 1)
    x = q ** n
    term = mpmath.mpf(1)
    total = mpmath.mpf(1)
    for k in range(min(m, n)):
        qk = q ** k
        term *= ((1 - a1 * qk) * (1 - a2 * qk) * (1 - a3 * qk)
                 / ((1 - q * qk) * (1 - b1 * qk) * (1 - q * qk)) * x)
        total += term
    return total


def _cor_j(point, q, tol):
    m, j = int(point["m"]), int(point["j"])
    t = point["t"]
    tf = _as_mpf(t)
    u = -t / (1 - t)
    if "lam" in point:
        lam = point["lam"]
        L = _qpow(q, lam)

        def term(n):
            w = qpoch_float(L, q, n) / qpoch_float(q, q, n)
            return w * _pasternack_negodd_float(m, n, j, q) * tf ** n

        value = _sum_until_small(term, tol, minimum=2 * m + 8)
        poly = f_eval_scalar(hyp([-m, m + 1, lam], [1, j + 1], u))
        target = mpmath.power(1 - tf, -_as_mpf(lam)) * _as_mpf(poly)
    else:
        value = _sum_until_small(lambda n: _pasternack_negodd_float(m, n, j, q) * tf ** n,
                                 tol, minimum=2 * m + 8)
        target = _as_mpf(f_eval_scalar(hyp([-m, m + 1], [j + 1], u)) / (1 - t))
    return value, target


def _l11(point, q, tol):
    m = int(point["m"])
    t = point["t"]
    x = _as_mpf(t) * (1 - q)

    def term(n):
        return _pasternack_negodd_float(m, n, 0, q) * x ** n / qpoch_float(q, q, n)

    value = _sum_until_small(term, tol, minimum=2 * m + 8)
    target = mpmath.exp(_as_mpf(t)) * _as_mpf(fam.batemanz(m, -t))
    return value, target


_EVALUATORS = {
    "LIM-FACT": (_fact, ("n",)),
    "LIM-EXP": (_exp, ("t",)),
    "LIM-PHI22": (_phi22, ("a", "b", "c", "d", "t")),
    "LIM-COR-J": (_cor_j, ("m", "j", "t")),
    "LIM-L11": (_l11, ("m", "t")),
}


def default_point(limit_id: str) -> dict[str, Fraction]:
    return {
        "LIM-FACT": {"n": Fraction(2)},
        "LIM-EXP": {"t": Fraction(1, 2)},
        "LIM-PHI22": {"a": Fraction(1, 2), "b": Fraction(3, 4), "c": Fraction(5, 3),
                      "d": Fraction(2), "t": Fraction(1, 2)},
        "LIM-COR-J": {"m": Fraction(1), "j": Fraction(0), "t": Fraction(1, 4)},
        "LIM-L11": {"m": Fraction(2), "t": Fraction(1, 2)},
    }[limit_id]


def q_schedule(steps: int) -> list[Fraction]:
    return [1 - Fraction(1, 2 ** (k + 3)) for k in range(1, steps + 1)]


def limit_check(limit_id: str, point: Mapping[str, Fraction] | None = None,
                precision: int = DEFAULT_PRECISION, steps: int = DEFAULT_STEPS) -> LimitReport:
    """Evaluate one limit relation along the q schedule.

    Passes when the final error is below ``1e-3 (1 + |target|)`` and the
    errors do not increase over the last three steps.
    """
    if limit_id not in _EVALUATORS:
        raise KeyError(f"unknown limit check {limit_id!r}")
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits")
    if steps < 3:
        raise ValueError("a limit check needs at least 3 steps")
    evaluate, required = _EVALUATORS[limit_id]
    point = {k: Fraction(v) for k, v in (point or default_point(limit_id)).items()}
    missing = [k for k in required if k not in point]
    if missing:
        raise fam.SchemaError(f"{limit_id}: point is missing {', '.join(missing)}")
    if "t" in point and abs(point["t"]) > Fraction(1, 2):
        raise fam.SchemaError(f"{limit_id}: |t| must be <= 1/2")

    with mpmath.workprec(precision):
        tol = mpmath.mpf(2) ** (-(precision // 2))
        report = LimitReport(limit_id, point, precision, mpmath.mpf(0))
        for qk in q_schedule(steps):
            q = to_float(qk, precision)
            try:
                value, target = evaluate(point, q, tol)
            except (ArithmeticError, ValueError):
                report.steps.append((q, mpmath.inf))
                continue
            report.target = target
            report.steps.append((q, abs(value - target)))
        report.rate = _rate(report.errors)
        report.status = "pass" if _passes(report) else "fail"
    return report


def _rate(errors) -> float | None:
    logs = [float(mpmath.log(a / b, 2)) for a, b in zip(errors, errors[1:])
            if a > 0 and b > 0 and mpmath.isfinite(a) and mpmath.isfinite(b)]
    return sum(logs) / len(logs) if logs else None


def _passes(report: LimitReport) -> bool:
    errs = report.errors
    if not all(mpmath.isfinite(e) for e in errs):
        return False
    last = errs[-3:]
    monotone = all(a >= b for a, b in zip(last, last[1:]))
    return monotone and errs[-1] < mpmath.mpf("1e-3") * (1 + abs(report.target))
