"""The q-Bateman-Z, q-Bateman, q-Pasternack, q-Sylvester and q-Cesaro
polynomials, their classical counterparts, and the orthogonal polynomials
they connect to.

q-exponentials are passed as independent rationals: ``a`` stands for
``q^{(z+1)/2}``, ``Z`` for ``q^z``, ``b`` for ``q^{(z+m+1)/2}`` and ``mu``
for ``q^{m+1}``.  Orthogonal polynomials accept any ring element as the
argument, so they evaluate at truncated series as well as at rationals.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Mapping

from .hyper import f_coefficients, f_eval_scalar, hyp, phi, phi_eval_scalar
from .qcore import QBase, q_binomial, qpoch_scalar

ParamBinding = Mapping[str, Fraction]


class SchemaError(ValueError):
    """A parameter binding is missing a name or violates a constraint."""


class FamilyId(enum.Enum):
    qZ = "q-batemanz"
    qB = "q-bateman"
    qPasternack = "q-pasternack"
    qSylvester = "q-sylvester"
    qCesaro = "q-cesaro"
    cZ = "classical-batemanz"
    cB = "classical-bateman"
    cPasternack = "classical-pasternack"
    cSylvester = "classical-sylvester"
    cCesaro = "classical-cesaro"

    @property
    def is_q(self) -> bool:
        return self.value.startswith("q-")


# binding names each family reads; q-families also need the base
FAMILY_PARAMS = {
    FamilyId.qZ: ("z",),
    FamilyId.qB: ("a",),
    FamilyId.qPasternack: ("b", "mu"),
    FamilyId.qSylvester: ("z", "Z"),
    FamilyId.qCesaro: ("s", "z"),
    FamilyId.cZ: ("z",),
    FamilyId.cB: ("z",),
    FamilyId.cPasternack: ("m", "z"),
    FamilyId.cSylvester: ("z",),
    FamilyId.cCesaro: ("s", "z"),
}


# -- q-families ---------------------------------------------------------

def q_batemanz(n: int, z, base: QBase) -> Fraction:
    q = base.q
    return phi_eval_scalar(phi([q ** -n, q ** (n + 1)], [q, q], q ** n * Fraction(z), base))


def q_bateman(n: int, a, base: QBase) -> Fraction:
    q = base.q
    return phi_eval_scalar(phi([q ** -n, q ** (n + 1), a], [q, q], q ** n, base))


def q_pasternack(n: int, b, mu, base: QBase) -> Fraction:
    q = base.q
    return phi_eval_scalar(phi([q ** -n, q ** (n + 1), b], [q, mu], q ** n, base))


def q_sylvester(n: int, z, Z, base: QBase) -> Fraction:
    z = Fraction(z)
    if z == 0:
        raise SchemaError("q-Sylvester polynomials are undefined at z = 0")
    q = base.q
    body = phi_eval_scalar(phi([q ** -n, Z], [], q ** n / z, base))
    return z ** n / qpoch_scalar(q, n, base) * body


def q_cesaro(n: int, s: int, z, base: QBase) -> Fraction:
    q = base.q
    body = phi_eval_scalar(phi([q ** -n, q], [q ** (-s - n)], z, base))
    return qpoch_scalar(q ** (s + 1), n, base) / qpoch_scalar(q, n, base) * body


def cesaro_closed_form(n: int, s: int, z, base: QBase) -> Fraction:
    """``sum_k [k+s choose s]_q (z q^s)^{n-k}``."""
    x = Fraction(z) * base.q ** s
    total = Fraction(0)
    # Horner in x: the k = 0 coefficient ends up multiplied by x^n
    for k in range(n + 1):
        total = total * x + q_binomial(k + s, s, base)
    return total


def pasternack_at_negative_odd(m: int, n: int, j: int, base: QBase) -> Fraction:
    """The q-Pasternack term ``B^j_m(-2n-1-j; q)`` of the generating
    functions summed over ``n``.

    With ``z = -2n-1-j`` the third numerator parameter is ``q^{-n}``.  The
    series argument is ``q^n`` (the summation index), not the ``q^m`` of
    the degree-``m`` definition; only this reading satisfies the
    generating functions in ``n``.
    """
    q = base.q
    return phi_eval_scalar(phi([q ** -m, q ** (m + 1), q ** -n], [q, q ** (j + 1)], q ** n, base))


# -- classical families -------------------------------------------------

def batemanz(n: int, z) -> Fraction:
    return f_eval_scalar(hyp([-n, n + 1], [1, 1], Fraction(z)))


def bateman(n: int, z) -> Fraction:
    return f_eval_scalar(hyp([-n, n + 1, (Fraction(z) + 1) / 2], [1, 1], 1))


def pasternack(n: int, m, z) -> Fraction:
    m = Fraction(m)
    if m == -1:
        raise SchemaError("Pasternack polynomials need m != -1")
    return f_eval_scalar(hyp([-n, n + 1, (Fraction(z) + m + 1) / 2], [1, m + 1], 1))


def sylvester(n: int, z) -> Fraction:
    z = Fraction(z)
    if z == 0:
        raise SchemaError("Sylvester polynomials are evaluated here only for z != 0")
    return z ** n / math.factorial(n) * f_eval_scalar(hyp([-n, z], [], -1 / z))


def cesaro(n: int, s: int, z) -> Fraction:
    if s < 0 or Fraction(s).denominator != 1:
        raise SchemaError("classical Cesaro polynomials need an integer s >= 0")
    lead = Fraction(1)
    for i in range(n):
        lead *= Fraction(1 + s + i, i + 1)
    return lead * f_eval_scalar(hyp([-n, 1], [-s - n], Fraction(z)))


# -- dispatch -----------------------------------------------------------

def _need(binding: ParamBinding, names) -> list[Fraction]:
    missing = [name for name in names if name not in binding]
    if missing:
        raise SchemaError(f"binding is missing {', '.join(missing)}")
    return [Fraction(binding[name]) for name in names]


def _integer(x: Fraction, name: str, minimum: int = 0) -> int:
    if x.denominator != 1 or x < minimum:
        raise SchemaError(f"{name} must be an integer >= {minimum}, got {x}")
    return int(x)


def base_from_binding(binding: ParamBinding) -> QBase:
    if "p" in binding:
        return QBase(Fraction(binding["p"]))
    if "q" in binding:
        return QBase.from_q(Fraction(binding["q"]))
    raise SchemaError("binding needs the base p (or q)")


def q_family_value(family: FamilyId | str, n: int, binding: ParamBinding) -> Fraction:
    family = FamilyId(family)
    if not family.is_q:
        raise SchemaError(f"{family.value} is a classical family")
    if n < 0:
        raise SchemaError("degree n must be >= 0")
    base = base_from_binding(binding)
    args = _need(binding, FAMILY_PARAMS[family])
    if family is FamilyId.qZ:
        return q_batemanz(n, *args, base)
    if family is FamilyId.qB:
        return q_bateman(n, *args, base)
    if family is FamilyId.qPasternack:
        return q_pasternack(n, *args, base)
    if family is FamilyId.qSylvester:
        return q_sylvester(n, *args, base)
    s, z = args
    return q_cesaro(n, _integer(s, "s"), z, base)


def classical_family_value(family: FamilyId | str, n: int, binding: ParamBinding) -> Fraction:
    family = FamilyId(family)
    if family.is_q:
        raise SchemaError(f"{family.value} is a q-family")
    if n < 0:
        raise SchemaError("degree n must be >= 0")
    args = _need(binding, FAMILY_PARAMS[family])
    if family is FamilyId.cZ:
        return batemanz(n, *args)
    if family is FamilyId.cB:
        return bateman(n, *args)
    if family is FamilyId.cPasternack:
        return pasternack(n, *args)
    if family is FamilyId.cSylvester:
        return sylvester(n, *args)
    s, z = args
    return cesaro(n, _integer(s, "s"), z)


def family_value(family: FamilyId | str, n: int, binding: ParamBinding) -> Fraction:
    family = FamilyId(family)
    if family.is_q:
        return q_family_value(family, n, binding)
    return classical_family_value(family, n, binding)


# -- orthogonal polynomials ---------------------------------------------

def _horner(coeffs, x):
    total = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        total = total * x + c
    return total


def legendre(n: int, x):
    """``P_n(x)`` by the three-term recurrence."""
    prev, cur = 1, x
    if n == 0:
        return x * 0 + 1
    for k in range(1, n):
        prev, cur = cur, (cur * x * (2 * k + 1) - prev * k) * Fraction(1, k + 1)
    return cur


def jacobi(n: int, alpha, beta, x):
    """``P_n^{(alpha, beta)}(x) = (alpha+1)_n / n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)``.

    Parameters may depend on ``n``; the 2F1 coefficients are built
    directly, so a vanishing ``(alpha+1)_k`` raises.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    spec = hyp([-n, n + alpha + beta + 1], [alpha + 1])
    coeffs = f_coefficients(spec, n)
    lead = Fraction(1)
    for i in range(n):
        lead *= (alpha + 1 + i) / (i + 1)
    u = (1 - x) * Fraction(1, 2)
    return _horner(coeffs, u) * lead


def laguerre(n: int, alpha, x):
    """``L_n^{(alpha)}(x) = sum_k binom(n+alpha, n-k) (-x)^k / k!``.

    The binomial form stays finite when ``alpha`` is a negative integer.
    """
    alpha = Fraction(alpha)
    coeffs = []
    for k in range(n + 1):
        top = Fraction(1)
        for i in range(n - k):
            top *= (n + alpha - i) / (i + 1)
        coeffs.append(top * (-1) ** k / math.factorial(k))
    return _horner(coeffs, x)


def charlier(n: int, a, x):
    """``C_n(x; a) = 2F0(-n, -x; -; -1/a)``."""
    a, x = Fraction(a), Fraction(x)
    if a == 0:
        raise SchemaError("Charlier polynomials need a != 0")
    return f_eval_scalar(hyp([-n, -x], [], -1 / a))


def orth_value(kind: str, n: int, params: Mapping[str, Fraction], x):
    if kind == "legendre":
        return legendre(n, x)
    if kind == "jacobi":
        return jacobi(n, params["alpha"], params["beta"], x)
    if kind == "laguerre":
        return laguerre(n, params["alpha"], x)
    if kind == "charlier":
        return charlier(n, params["a"], x)
    raise SchemaError(f"unknown orthogonal family {kind!r}")
