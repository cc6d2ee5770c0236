"""Executable property suites, one per module.

Each property runs over a fixed deterministic grid of bases and
parameters and returns a :class:`PropertyResult`; nothing is raised for
a failed property.  ``selftest`` runs all of them, and the test suite
calls them individually.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath

from . import families as fam
from .hyper import LinearT, Pair, Zero, hyp, phi, phi_eval_scalar, phi_series, phi_series_direct, termination_index
from .identities import build_lhs, build_rhs
from .numerics import format_rational, parse_rational, to_float
from .qcore import (
    QBase,
    q_binomial,
    qpoch_finite_in_t,
    qpoch_inf_reciprocal_series,
    qpoch_inf_series,
    qpoch_lambda_series,
    qpoch_scalar,
)
from .series import TruncatedSeries, series_compose, series_equal_to_order, series_reciprocal

BASES = tuple(QBase(p) for p in (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5), Fraction(5, 8), Fraction(7, 10)))
SCALARS = (Fraction(1, 3), Fraction(-2, 5), Fraction(7, 4), Fraction(-3), Fraction(5, 11))


@dataclass
class PropertyResult:
    module: str
    name: str
    passed: bool
    checks: int
    detail: str = ""


def _run(module: str, name: str, cases: Callable[[], object]) -> PropertyResult:
    """``cases`` yields ``(ok, description)`` pairs; stop at the first failure."""
    count = 0
    try:
        for ok, what in cases():
            count += 1
            if not ok:
                return PropertyResult(module, name, False, count, f"failed at {what}")
    except Exception as exc:
        return PropertyResult(module, name, False, count, f"{type(exc).__name__}: {exc}")
    return PropertyResult(module, name, True, count)


def _rng(name: str) -> random.Random:
    return random.Random(f"property|{name}")


def _random_series(rng: random.Random, order: int, nonzero_constant: bool = False) -> TruncatedSeries:
    coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(order + 1)]
    if nonzero_constant and coeffs[0] == 0:
        coeffs[0] = Fraction(1)
    return TruncatedSeries(coeffs)


# -- numerics -------------------------------------------------------------------------

def _exactness():
    rng = _rng("exactness")
    for _ in range(200):
        x = Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9))
        y = Fraction(rng.randint(-10**12, 10**12), rng.randint(1, 10**9)) or Fraction(1)
        yield (x + y) - y == x and (x * y) / y == x, (x, y)


def _parse_format():
    rng = _rng("parse")
    for _ in range(200):
        x = Fraction(rng.randint(-10**30, 10**30), rng.randint(1, 10**20))
        yield parse_rational(format_rational(x)) == x, x


def _to_float_error():
    rng = _rng("float")
    for precision in (64, 128, 256):
        for _ in range(50):
            x = Fraction(rng.randint(-10**40, 10**40) or 1, rng.randint(1, 10**40))
            with mpmath.workprec(precision + 64):
                f = to_float(x, precision)
                rel = abs((f - mpmath.mpf(x.numerator) / x.denominator) / (mpmath.mpf(x.numerator) / x.denominator))
                yield rel < mpmath.mpf(2) ** (1 - precision), (x, precision)


# -- series ---------------------------------------------------------------------------

def _ring_axioms():
    rng = _rng("ring")
    for order in (0, 1, 5, 16):
        for _ in range(5):
            f, g, h = (_random_series(rng, order) for _ in range(3))
            yield (f * g) * h == f * (g * h), ("assoc", order)
            yield f * g == g * f, ("comm", order)
            yield f * (g + h) == f * g + f * h, ("distrib", order)


def _reciprocal():
    rng = _rng("reciprocal")
    for order in (0, 3, 16):
        for _ in range(5):
            f = _random_series(rng, order, nonzero_constant=True)
            yield f * series_reciprocal(f) == TruncatedSeries.one(order), order


def _compose_laws():
    rng = _rng("compose")
    order = 10
    t = TruncatedSeries.monomial(1, 1, order)
    for _ in range(5):
        f = _random_series(rng, order)
        g = _random_series(rng, order).shift(1)
        h = _random_series(rng, order).shift(1)
        yield series_compose(f, t) == f, "identity"
        yield series_compose(series_compose(f, g), h) == series_compose(f, series_compose(g, h)), "associativity"


# -- qcore ----------------------------------------------------------------------------

def _shift_law():
    for base in BASES[:3]:
        for a in SCALARS[:3]:
            for n in range(11):
                for m in range(11):
                    lhs = qpoch_scalar(a, n + m, base)
                    rhs = qpoch_scalar(a, n, base) * qpoch_scalar(a * base.q ** n, m, base)
                    yield lhs == rhs, (base, a, n, m)


def _inversion_rewrite():
    for base in BASES:
        q = base.q
        for n in range(11):
            for k in range(n + 1):
                lhs = qpoch_scalar(q ** -n, k, base)
                rhs = (qpoch_scalar(q, n, base) / qpoch_scalar(q, n - k, base)
                       * (-1) ** k * q ** (k * (k - 1) // 2 - n * k))
                yield lhs == rhs, (base, n, k)


def _splitting():
    # (a;q)_{2n} = (c, -c, cp, -cp; q)_n with a = c^2, so every factor is rational
    for base in BASES:
        for c in SCALARS:
            a = c * c
            for n in range(9):
                rhs = (qpoch_scalar(c, n, base) * qpoch_scalar(-c, n, base)
                       * qpoch_scalar(c * base.p, n, base) * qpoch_scalar(-c * base.p, n, base))
                yield qpoch_scalar(a, 2 * n, base) == rhs, (base, c, n)


def _qbinomial_series():
    order = 16
    for base in BASES:
        for s in range(7):
            lhs = TruncatedSeries([q_binomial(n + s, s, base) for n in range(order + 1)])
            rhs = series_reciprocal(qpoch_finite_in_t(1, s + 1, base, order))
            yield lhs == rhs, (base, s)


def _qbinomial_symmetry():
    for base in BASES:
        for n in range(13):
            for k in range(n + 1):
                yield q_binomial(n, k, base) == q_binomial(n, n - k, base), (base, n, k)


def _lambda_finite():
    order = 16
    for base in BASES:
        for c in SCALARS + (Fraction(1),):
            for j in range(7):
                lhs = qpoch_lambda_series(c, base.q ** j, base, order)
                yield lhs == qpoch_finite_in_t(c, j, base, order), (base, c, j)


# -- hyper ----------------------------------------------------------------------------

def _q_binomial_theorem():
    order = 20
    for base, a in zip(BASES, SCALARS):
        lhs = phi_series(phi([a], [], LinearT(1), base), order)
        rhs = qpoch_inf_series(a, base, order) * qpoch_inf_reciprocal_series(1, base, order)
        yield lhs == rhs, (base, a)


def _terminating_invariance():
    for base in BASES:
        q = base.q
        for n in range(8):
            for z in SCALARS:
                spec = phi([q ** -n, q ** (n + 1), z], [q, q], q ** n, base)
                values = {phi_eval_scalar(spec, guard) for guard in (n, n + 5, 64, 200)}
                yield len(values) == 1, (base, n, z)


def _pair_consistency():
    order = 10
    for base in BASES[:3]:
        p, q = base.p, base.q
        for a in SCALARS[:3]:
            specs = [
                phi([-q, p, -p, Zero()], [q, Pair(q), Pair(p)], LinearT(a), base),
                phi([-q, p, -p, a, Zero()], [q, Pair(p), Pair(q)], LinearT(1), base),
                phi([a, Zero()], [Pair(p * a)], LinearT(q), base),
            ]
            for spec in specs:
                yield phi_series(spec, order) == phi_series_direct(spec, order), (base, a)


# -- families -------------------------------------------------------------------------

def _remark():
    for base in BASES:
        for a in SCALARS:
            for n in range(13):
                yield fam.q_pasternack(n, a, base.q, base) == fam.q_bateman(n, a, base), (base, a, n)


def _qcp():
    for base, z in zip(BASES, SCALARS):
        for s in range(7):
            for n in range(13):
                yield fam.cesaro_closed_form(n, s, z, base) == fam.q_cesaro(n, s, z, base), (base, s, n)


def _sylvester_laguerre():
    for z in SCALARS:
        for n in range(11):
            yield fam.sylvester(n, z) == (-1) ** n * fam.laguerre(n, -z - n, z), (z, n)


def _sylvester_charlier():
    for z in SCALARS:
        for n in range(11):
            yield fam.sylvester(n, z) == z ** n / math.factorial(n) * fam.charlier(n, z, -z), (z, n)


def _cesaro_jacobi():
    for z in SCALARS:
        for s in range(6):
            for n in range(11):
                yield fam.cesaro(n, s, z) == fam.jacobi(n, s + 1, -s - n - 1, 2 * z - 1), (z, s, n)


def _degree_termination():
    # each q-family sum stops exactly after its k = n term
    for base in BASES:
        q = base.q
        for n in range(13):
            for z in SCALARS:
                specs = [
                    phi([q ** -n, q ** (n + 1)], [q, q], q ** n * z, base),
                    phi([q ** -n, q ** (n + 1), z], [q, z * q], q ** n, base),
                    phi([q ** -n, z], [], q ** n, base),
                ]
                yield all(termination_index(spec) == n for spec in specs), (base, n, z)
            yield termination_index(hyp([-n, n + 1], [1, 1], 1)) == n, ("classical", n)


# -- verify ---------------------------------------------------------------------------

def _specialization_chain():
    order = 12
    for base in BASES:
        p, q = base.p, base.q
        for m in range(4):
            for j in range(3):
                b = {"p": p, "m": Fraction(m), "j": Fraction(j)}
                yield (build_rhs("Q-GF-3.9", b, order)
                       == build_rhs("Q-GF-3.10", {**b, "L": q}, order)), ("3.9 vs 3.10", base, m, j)
        for a in SCALARS:
            yield (build_rhs("Q-GF-3.4", {"p": p, "b": a, "mu": q}, order)
                   == build_rhs("Q-GF-3.2", {"p": p, "a": a}, order)), ("3.4 vs 3.2", base, a)


def _mode_agreement():
    # a binding given through z (consistent) and the same values typed in freely
    order = 12
    for base in BASES:
        p = base.p
        for z in (1, 3, 5):
            derived = {"a": p ** (z + 1), "Z": p ** (2 * z)}
            cases = [
                ("Q-GF-3.2", {"p": p, "z": Fraction(z)}, {"p": p, "a": derived["a"]}),
                ("Q-GF-3.6", {"p": p, "z": Fraction(z)}, {"p": p, "z": Fraction(z), "Z": derived["Z"]}),
                ("Q-GF-3.7", {"p": p, "z": Fraction(z), "lam": Fraction(2)},
                 {"p": p, "z": Fraction(z), "Z": derived["Z"], "L": base.q ** 2}),
            ]
            for identity_id, consistent, free in cases:
                sides = [build_lhs(identity_id, consistent, order), build_rhs(identity_id, consistent, order),
                         build_lhs(identity_id, free, order), build_rhs(identity_id, free, order)]
                yield all(s == sides[0] for s in sides), (identity_id, base, z)


SUITES: dict[str, list[tuple[str, Callable]]] = {
    "numerics": [("exact field operations", _exactness),
                 ("parse inverts format", _parse_format),
                 ("to_float relative error", _to_float_error)],
    "series": [("ring axioms", _ring_axioms),
               ("reciprocal", _reciprocal),
               ("composition laws", _compose_laws)],
    "qcore": [("shift law", _shift_law),
              ("(q^-n;q)_k rewrite", _inversion_rewrite),
              ("(a;q)_2n four-factor splitting", _splitting),
              ("q-binomial series", _qbinomial_series),
              ("q-binomial symmetry", _qbinomial_symmetry),
              ("(c t;q)_lambda at L = q^j", _lambda_finite)],
    "hyper": [("q-binomial theorem", _q_binomial_theorem),
              ("terminating invariance", _terminating_invariance),
              ("pair consistency", _pair_consistency)],
    "families": [("q-Pasternack at mu = q is q-Bateman", _remark),
                 ("q-Cesaro closed form", _qcp),
                 ("Sylvester-Laguerre", _sylvester_laguerre),
                 ("Sylvester-Charlier", _sylvester_charlier),
                 ("Cesaro-Jacobi", _cesaro_jacobi),
                 ("degree and termination", _degree_termination)],
    "verify": [("specialization chain", _specialization_chain),
               ("mode agreement", _mode_agreement)],
}


def run_property(module: str, name: str) -> PropertyResult:
    for prop_name, cases in SUITES[module]:
        if prop_name == name:
            return _run(module, name, cases)
    raise KeyError(f"no property {name!r} in {module}")


def run_properties(modules=None) -> list[PropertyResult]:
    selected = list(SUITES) if modules is None else list(modules)
    return [_run(module, name, cases) for module in selected for name, cases in SUITES[module]]
