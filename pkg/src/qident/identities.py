"""Registry of generating-function, connection and structural identities.

Every entry knows which parameters it needs and how to build both sides
as truncated series in ``t`` from a binding and an order ``N``.  The two
sides of an identity are deliberately built through different code
paths: the left side always sums family values coefficient by
coefficient, the right side goes through Pochhammer prefactors and
hypergeometric series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import families as fam
from .families import SchemaError, base_from_binding
from .hyper import LinearT, Pair, Zero, f_coefficients, f_series, hyp, phi, phi_series
from .qcore import (
    QBase,
    qpoch_finite_in_t,
    qpoch_inf_reciprocal_series,
    qpoch_inf_series,
    qpoch_lambda_series,
    qpoch_scalar,
)
from .series import TruncatedSeries, binomial_series, exp_series

Builder = Callable[[Mapping[str, Fraction], int], TruncatedSeries]


@dataclass(frozen=True)
class Param:
    """One binding entry of an identity schema.

    ``kind`` is ``"base"`` (the base p), ``"rational"`` or ``"integer"``.
    ``denominator`` marks q-exponentials that sit in a denominator
    Pochhammer and so must never equal ``q^{-i}``.
    """

    name: str
    kind: str = "rational"
    low: int = 0
    high: int = 6
    nonzero: bool = False
    denominator: bool = False

    def describe(self) -> str:
        if self.kind == "base":
            return f"{self.name}: rational in (0,1)"
        if self.kind == "integer":
            return f"{self.name}: integer in {self.low}..{self.high}"
        extra = ", nonzero" if self.nonzero else ""
        return f"{self.name}: rational{extra}"


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    description: str
    source: str
    params: tuple
    lhs_builder: Builder = field(repr=False)
    rhs_builder: Builder = field(repr=False)
    # q-exponential parameters that consistent mode derives rather than samples
    consistent: tuple = ()

    @property
    def schema(self) -> dict[str, str]:
        return {p.name: p.describe() for p in self.params}

    @property
    def param_names(self) -> tuple:
        return tuple(p.name for p in self.params)


# -- consistent-mode derivations ------------------------------------------
# Each derived q-exponential is a genuine power of p computed from integer
# exponents already in the binding.

def _derive_a(b: Mapping, base: QBase) -> Fraction:
    return base.half_pow(int(b["z"]) + 1)


def _derive_Z(b: Mapping, base: QBase) -> Fraction:
    return base.half_pow(2 * int(b["z"]))


def _derive_b(b: Mapping, base: QBase) -> Fraction:
    return base.half_pow(int(b["z"]) + int(b["m"]) + 1)


def _derive_mu(b: Mapping, base: QBase) -> Fraction:
    return base.qpow(int(b["m"]) + 1)


def _derive_L(b: Mapping, base: QBase) -> Fraction:
    return base.qpow(int(b["lam"]))


DERIVATIONS = {
    "a": (("z",), _derive_a),
    "Z": (("z",), _derive_Z),
    "b": (("z", "m"), _derive_b),
    "mu": (("m",), _derive_mu),
    "L": (("lam",), _derive_L),
}


def complete_binding(spec: IdentitySpec, binding: Mapping[str, Fraction]) -> dict[str, Fraction]:
    """Fill in derivable q-exponentials (``a`` from ``z`` and so on) and
    check the schema."""
    out = {k: Fraction(v) for k, v in binding.items()}
    names = spec.param_names
    if "p" in names and "p" not in out and "q" in out:
        base = QBase.from_q(out["q"])
        if base.p is None:
            raise SchemaError(f"q = {out['q']} is not the square of a rational p")
        out["p"] = base.p
    for name in spec.consistent:
        if name in out:
            continue
        sources, derive = DERIVATIONS[name]
        if all(s in out for s in sources):
            for s in sources:
                if out[s].denominator != 1:
                    raise SchemaError(f"deriving {name} needs an integer {s}, got {out[s]}")
            out[name] = derive(out, base_from_binding(out))
    check_schema(spec, out)
    return out


def check_schema(spec: IdentitySpec, binding: Mapping[str, Fraction]) -> None:
    missing = [p.name for p in spec.params if p.name not in binding]
    if missing:
        raise SchemaError(f"{spec.id}: binding is missing {', '.join(missing)}")
    base = None
    for p in spec.params:
        x = Fraction(binding[p.name])
        if p.kind == "base":
            if not 0 < x < 1:
                raise SchemaError(f"{spec.id}: base p must lie in (0,1), got {x}")
            base = QBase(x)
        elif p.kind == "integer":
            if x.denominator != 1 or x < p.low:
                raise SchemaError(f"{spec.id}: {p.name} must be an integer >= {p.low}, got {x}")
        elif p.nonzero and x == 0:
            raise SchemaError(f"{spec.id}: {p.name} must be nonzero")
    if base is not None:
        for p in spec.params:
            if p.denominator and _is_negative_q_power(Fraction(binding[p.name]), base.q):
                raise SchemaError(f"{spec.id}: {p.name} = q^-i makes a denominator vanish")


def _is_negative_q_power(x: Fraction, q: Fraction, limit: int = 64) -> bool:
    for _ in range(limit + 1):
        if x == 1:
            return True
        if x < 1:
            return False
        x *= q
    return False


# -- helpers ------------------------------------------------------------------

def _terms(fn: Callable[[int], Fraction], order: int) -> TruncatedSeries:
    return TruncatedSeries([fn(n) for n in range(order + 1)])


def _int(b: Mapping, name: str) -> int:
    return int(b[name])


def _rising(x: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= x + i
    return out


def _t(order: int) -> TruncatedSeries:
    return TruncatedSeries.monomial(1, 1, order)


# -- q identities ----------------------------------------------------------------

def _qbinomial_lhs(b, N):
    base = QBase(b["p"])
    return phi_series(phi([b["a"]], [], LinearT(1), base), N)


def _qbinomial_rhs(b, N):
    base = QBase(b["p"])
    return qpoch_inf_series(b["a"], base, N) * qpoch_inf_reciprocal_series(1, base, N)


def _batemanz_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_batemanz(n, b["z"], base), N)


def _batemanz_rhs(b, N):
    base = QBase(b["p"])
    p, q = base.p, base.q
    body = phi_series(phi([-q, p, -p, Zero()], [q, Pair(q), Pair(p)], LinearT(b["z"]), base), N)
    return body.div_linear(1)


def _bateman_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_bateman(n, b["a"], base), N)


def _bateman_rhs(b, N):
    base = QBase(b["p"])
    p, q = base.p, base.q
    body = phi_series(phi([-q, p, -p, b["a"], Zero()], [q, Pair(p), Pair(q)], LinearT(1), base), N)
    return body.div_linear(1)


def _bateman_diff_lhs(b, N):
    base = QBase(b["p"])
    a = b["a"]
    # B_n(z-2; q) carries q^{(z-1)/2} = a/q in place of a
    return _terms(lambda n: fam.q_bateman(n, a / base.q, base) - fam.q_bateman(n, a, base), N)


def _bateman_diff_rhs(b, N):
    base = QBase(b["p"])
    p, q = base.p, base.q
    a = b["a"]
    p3 = p ** 3
    body = phi_series(
        phi([-q * q, p3, -p3, a, Zero()], [q * q, Pair(p3), Pair(q * q)], LinearT(q), base), N)
    prefactor = (a / q) * (1 + q)
    return (body / qpoch_finite_in_t(1, 3, base, N)).shift(1) * prefactor


def _pasternack_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_pasternack(n, b["b"], b["mu"], base), N)


def _pasternack_rhs(b, N):
    base = QBase(b["p"])
    p, q = base.p, base.q
    body = phi_series(
        phi([-q, p, -p, b["b"], Zero()], [b["mu"], Pair(p), Pair(q)], LinearT(1), base), N)
    return body.div_linear(1)


def _sylvester_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_sylvester(n, b["z"], b["Z"], base), N)


def _sylvester_rhs(b, N):
    base = QBase(b["p"])
    return (qpoch_inf_series(b["Z"], base, N)
            * qpoch_inf_reciprocal_series(1, base, N)
            * qpoch_inf_reciprocal_series(b["z"], base, N))


def _sylvester_lambda_lhs(b, N):
    base = QBase(b["p"])
    L = b["L"]
    return _terms(lambda n: qpoch_scalar(L, n, base) * fam.q_sylvester(n, b["z"], b["Z"], base), N)


def _sylvester_lambda_rhs(b, N):
    base = QBase(b["p"])
    z, L = b["z"], b["L"]
    body = phi_series(phi([L, b["Z"]], [LinearT(z * L)], LinearT(1), base), N)
    return body / qpoch_lambda_series(z, L, base, N)


def _cesaro_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_cesaro(n, _int(b, "s"), b["z"], base), N)


def _cesaro_rhs(b, N):
    base = QBase(b["p"])
    s = _int(b, "s")
    inv = TruncatedSeries.one(N) / qpoch_finite_in_t(1, s + 1, base, N)
    return inv.div_linear(b["z"] * base.q ** s)


def _negodd_lhs(weight, with_j=True):
    def build(b, N):
        base = QBase(b["p"])
        m = _int(b, "m")
        j = _int(b, "j") if with_j else 0
        return _terms(lambda n: weight(b, base, n) * fam.pasternack_at_negative_odd(m, n, j, base), N)
    return build


def _weight_one(b, base, n):
    return 1


def _weight_lambda(b, base, n):
    return qpoch_scalar(b["L"], n, base) / qpoch_scalar(base.q, n, base)


def _weight_qfact(b, base, n):
    return 1 / qpoch_scalar(base.q, n, base)


def _negodd_rhs(b, N):
    base = QBase(b["p"])
    q = base.q
    m, j = _int(b, "m"), _int(b, "j")
    body = phi_series(phi([q ** -m, q ** (m + 1)], [q ** (j + 1), LinearT(q)], LinearT(1), base), N)
    return body.div_linear(1)


def _negodd_lambda_rhs(b, N):
    base = QBase(b["p"])
    q, L = base.q, b["L"]
    m, j = _int(b, "m"), _int(b, "j")
    body = phi_series(
        phi([q ** -m, q ** (m + 1), L], [q, q ** (j + 1), LinearT(L)], LinearT(1), base), N)
    return body / qpoch_lambda_series(1, L, base, N)


def q_batemanz_polynomial(m: int, base: QBase) -> TruncatedSeries:
    """``Z_m(x; q)`` as an exact polynomial in ``x``."""
    q = base.q
    coeffs = phi_series(phi([q ** -m, q ** (m + 1)], [q, q], LinearT(q ** m), base), m)
    return TruncatedSeries.polynomial_of(list(coeffs), m)


def _negodd_inf_rhs(b, N):
    base = QBase(b["p"])
    m = _int(b, "m")
    inner = TruncatedSeries.monomial(base.q ** -m, 1, N)
    return qpoch_inf_reciprocal_series(1, base, N) * q_batemanz_polynomial(m, base).compose(inner)


def _remark_lhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.q_pasternack(n, b["a"], base.q, base), N)


def _qcp_rhs(b, N):
    base = QBase(b["p"])
    return _terms(lambda n: fam.cesaro_closed_form(n, _int(b, "s"), b["z"], base), N)


# -- classical identities ------------------------------------------------------

def _c_batemanz_lhs(b, N):
    return _terms(lambda n: fam.batemanz(n, b["z"]), N)


def _minus4t_over(N, scale=1):
    """``-4 scale t / (1 - t)^2``."""
    return (_t(N) * (-4 * Fraction(scale))).div_linear(1).div_linear(1)


def _c_batemanz_rhs(b, N):
    body = f_series(hyp([Fraction(1, 2)], [1]), _minus4t_over(N, b["z"]))
    return body.div_linear(1)


def _c_bateman_lhs(b, N):
    return _terms(lambda n: fam.bateman(n, b["z"]), N)


def _c_bateman_rhs(b, N):
    body = f_series(hyp([Fraction(1, 2), (b["z"] + 1) / 2], [1]), _minus4t_over(N))
    return body.div_linear(1)


def _c_bateman_diff_lhs(b, N):
    z = b["z"]
    return _terms(lambda n: fam.bateman(n, z - 2) - fam.bateman(n, z), N)


def _c_bateman_diff_rhs(b, N):
    body = f_series(hyp([Fraction(3, 2), (b["z"] + 1) / 2], [2]), _minus4t_over(N))
    for _ in range(3):
        body = body.div_linear(1)
    return body.shift(1) * 2


def _c_sylvester_lhs(b, N):
    return _terms(lambda n: fam.sylvester(n, b["z"]), N)


def _c_sylvester_rhs(b, N):
    z = b["z"]
    return exp_series(z, N) * binomial_series(z, 1, N)


def _c_sylvester_lambda_lhs(b, N):
    lam = b["lam"]
    return _terms(lambda n: _rising(lam, n) * fam.sylvester(n, b["z"]), N)


def _c_sylvester_lambda_rhs(b, N):
    z, lam = b["z"], b["lam"]
    inner = _t(N).div_linear(z)
    return binomial_series(lam, z, N) * f_series(hyp([lam, z], []), inner)


def _c_cesaro_lhs(b, N):
    return _terms(lambda n: fam.cesaro(n, _int(b, "s"), b["z"]), N)


def _c_cesaro_rhs(b, N):
    s = _int(b, "s")
    return binomial_series(s + 1, 1, N).div_linear(b["z"])


def _c_cesaro_shift_lhs(b, N):
    s, ell = _int(b, "s"), _int(b, "ell")
    return _terms(lambda n: math.comb(n + ell, ell) * fam.cesaro(n + ell, s, b["z"]), N)


def cesaro_polynomial(ell: int, s: int, order: int) -> TruncatedSeries:
    """``g_ell^{(s)}(x)`` as an exact polynomial in ``x``."""
    coeffs = f_coefficients(hyp([-ell, 1], [-s - ell]), ell)
    lead = _rising(Fraction(1 + s), ell) / math.factorial(ell)
    return TruncatedSeries.polynomial_of([c * lead for c in coeffs], max(order, ell))


def _c_cesaro_shift_rhs(b, N):
    s, ell, z = _int(b, "s"), _int(b, "ell"), b["z"]
    # z (1 - t) / (1 - z t)
    inner = TruncatedSeries.constant(z, N).mul_linear(1).div_linear(z)
    poly = cesaro_polynomial(ell, s, N).compose(inner)
    return (binomial_series(s + 1 + ell, 1, N) * poly).div_linear(z)


def _bateman_negodd(m, n):
    return fam.bateman(m, -2 * n - 1)


def _c_lemma_lhs(b, N):
    m = _int(b, "m")
    return _terms(lambda n: _bateman_negodd(m, n) / math.factorial(n), N)


def _c_lemma_rhs(b, N):
    m = _int(b, "m")
    zm = TruncatedSeries.polynomial_of(f_coefficients(hyp([-m, m + 1], [1, 1]), m), max(N, m))
    return exp_series(1, N) * zm.compose(TruncatedSeries.monomial(-1, 1, N))


def _c_cor1_lhs(b, N):
    m = _int(b, "m")
    return _terms(lambda n: _bateman_negodd(m, n), N)


def _c_cor1_rhs(b, N):
    m = _int(b, "m")
    # (1 + t) / (1 - t)
    x = TruncatedSeries.linear(1, 1, N).div_linear(1)
    return fam.legendre(m, x).div_linear(1)


def _c_cor2_lhs(b, N):
    m, lam = _int(b, "m"), b["lam"]
    return _terms(lambda n: _bateman_negodd(m, n) * _rising(lam, n) / math.factorial(n), N)


def _minus_t_over(N):
    """``-t / (1 - t)``."""
    return (-_t(N)).div_linear(1)


def _c_cor2_rhs(b, N):
    m, lam = _int(b, "m"), b["lam"]
    return binomial_series(lam, 1, N) * f_series(hyp([-m, m + 1, lam], [1, 1]), _minus_t_over(N))


def _c_pasternack_negodd(m, j, n):
    return fam.pasternack(m, j, -2 * n - 1 - j)


def _c_cor3_lhs(b, N):
    m, j = _int(b, "m"), _int(b, "j")
    return _terms(lambda n: _c_pasternack_negodd(m, j, n), N)


def _c_cor3_rhs(b, N):
    m, j = _int(b, "m"), _int(b, "j")
    return f_series(hyp([-m, m + 1], [j + 1]), _minus_t_over(N)).div_linear(1)


def _c_cor4_lhs(b, N):
    m, j, lam = _int(b, "m"), _int(b, "j"), b["lam"]
    return _terms(lambda n: _c_pasternack_negodd(m, j, n) * _rising(lam, n) / math.factorial(n), N)


def _c_cor4_rhs(b, N):
    m, j, lam = _int(b, "m"), _int(b, "j"), b["lam"]
    return binomial_series(lam, 1, N) * f_series(hyp([-m, m + 1, lam], [1, j + 1]), _minus_t_over(N))


def _c_conn_laguerre_rhs(b, N):
    z = b["z"]
    return _terms(lambda n: (-1) ** n * fam.laguerre(n, -z - n, z), N)


def _c_conn_charlier_rhs(b, N):
    z = b["z"]
    return _terms(lambda n: z ** n / math.factorial(n) * fam.charlier(n, z, -z), N)


def _c_conn_jacobi_rhs(b, N):
    s, z = _int(b, "s"), b["z"]
    return _terms(lambda n: fam.jacobi(n, s + 1, -s - n - 1, 2 * z - 1), N)


# -- the registry ----------------------------------------------------------------

P = Param("p", "base")
Z_ANY = Param("z")
Z_NONZERO = Param("z", nonzero=True)
A = Param("a")
M = Param("m", "integer")
J = Param("j", "integer")
S = Param("s", "integer")
LAM_Q = Param("L")
LAM = Param("lam")

_ENTRIES = [
    IdentitySpec("Q-GF-2.1", "q-binomial theorem: 1phi0(a;-;q,t) = (at;q)_oo/(t;q)_oo",
                 "q-binomial theorem", (P, A), _qbinomial_lhs, _qbinomial_rhs, ("a",)),
    IdentitySpec("Q-GF-3.1", "generating function of the q-Bateman-Z polynomials (4phi5)",
                 "q-Bateman-Z generating function", (P, Z_ANY), _batemanz_lhs, _batemanz_rhs),
    IdentitySpec("Q-GF-3.2", "generating function of the q-Bateman polynomials (5phi5)",
                 "q-Bateman generating function", (P, A), _bateman_lhs, _bateman_rhs, ("a",)),
    IdentitySpec("Q-GF-3.3", "generating function of B_n(z-2;q) - B_n(z;q) (5phi5)",
                 "q-Bateman difference generating function", (P, A),
                 _bateman_diff_lhs, _bateman_diff_rhs, ("a",)),
    IdentitySpec("Q-GF-3.4", "generating function of the q-Pasternack polynomials (5phi5)",
                 "q-Pasternack generating function",
                 (P, Param("b"), Param("mu", denominator=True)),
                 _pasternack_lhs, _pasternack_rhs, ("b", "mu")),
    IdentitySpec("Q-GF-3.6", "generating function of the q-Sylvester polynomials",
                 "q-Sylvester generating function", (P, Z_NONZERO, Param("Z")),
                 _sylvester_lhs, _sylvester_rhs, ("Z",)),
    IdentitySpec("Q-GF-3.7", "(q^lambda;q)_n-weighted q-Sylvester generating function (2phi1)",
                 "q-Sylvester lambda generating function", (P, Z_NONZERO, Param("Z"), LAM_Q),
                 _sylvester_lambda_lhs, _sylvester_lambda_rhs, ("Z", "L")),
    IdentitySpec("Q-GF-3.8", "generating function of the q-Cesaro polynomials",
                 "q-Cesaro generating function", (P, S, Z_ANY), _cesaro_lhs, _cesaro_rhs),
    IdentitySpec("Q-GF-3.9", "sum_n B^j_m(-2n-1-j;q) t^n as a 2phi2",
                 "q-Pasternack generating function in the argument", (P, M, J),
                 _negodd_lhs(_weight_one), _negodd_rhs),
    IdentitySpec("Q-GF-3.10", "(q^lambda;q)_n/(q;q)_n-weighted version of Q-GF-3.9 (3phi3)",
                 "q-Pasternack lambda generating function in the argument", (P, M, J, LAM_Q),
                 _negodd_lhs(_weight_lambda), _negodd_lambda_rhs, ("L",)),
    IdentitySpec("Q-GF-3.11", "sum_n B_m(-2n-1;q) t^n/(q;q)_n = Z_m(t q^-m; q)/(t;q)_oo",
                 "q-Bateman exponential generating function in the argument", (P, M),
                 _negodd_lhs(_weight_qfact, with_j=False), _negodd_inf_rhs),
    IdentitySpec("Q-REM", "q-Pasternack with m = 0 is q-Bateman",
                 "q-Pasternack reduces to q-Bateman", (P, A), _remark_lhs, _bateman_lhs, ("a",)),
    IdentitySpec("Q-QCP", "q-Cesaro closed form equals the 2phi1 definition",
                 "q-Cesaro closed form", (P, S, Z_ANY), _cesaro_lhs, _qcp_rhs),
    IdentitySpec("C-GF-Z", "Bateman-Z generating function (1F1)",
                 "classical Bateman-Z generating function", (Z_ANY,),
                 _c_batemanz_lhs, _c_batemanz_rhs),
    IdentitySpec("C-GF-B1", "Bateman generating function (2F1)",
                 "classical Bateman generating function", (Z_ANY,),
                 _c_bateman_lhs, _c_bateman_rhs),
    IdentitySpec("C-GF-B2", "generating function of B_n(z-2) - B_n(z) (2F1)",
                 "classical Bateman difference generating function", (Z_ANY,),
                 _c_bateman_diff_lhs, _c_bateman_diff_rhs),
    IdentitySpec("C-GF-SYL1", "Sylvester generating function exp(zt)/(1-t)^z",
                 "classical Sylvester generating function", (Z_NONZERO,),
                 _c_sylvester_lhs, _c_sylvester_rhs),
    IdentitySpec("C-GF-SYL2", "(lambda)_n-weighted Sylvester generating function (2F0)",
                 "classical Sylvester lambda generating function", (Z_NONZERO, LAM),
                 _c_sylvester_lambda_lhs, _c_sylvester_lambda_rhs),
    IdentitySpec("C-GF-CES1", "Cesaro generating function (1-t)^(-s-1)(1-zt)^(-1)",
                 "classical Cesaro generating function", (S, Z_ANY),
                 _c_cesaro_lhs, _c_cesaro_rhs),
    IdentitySpec("C-GF-CES2", "shifted Cesaro generating function with binom(n+l, l)",
                 "classical shifted Cesaro generating function",
                 (S, Z_NONZERO, Param("ell", "integer", 0, 3)),
                 _c_cesaro_shift_lhs, _c_cesaro_shift_rhs),
    IdentitySpec("C-L-1.1", "sum_n B_m(-2n-1) t^n/n! = e^t Z_m(-t)",
                 "Bateman exponential generating function in the argument", (M,),
                 _c_lemma_lhs, _c_lemma_rhs),
    IdentitySpec("C-COR-1", "sum_n B_m(-2n-1) t^n = P_m((1+t)/(1-t))/(1-t)",
                 "Bateman-Legendre generating function", (M,), _c_cor1_lhs, _c_cor1_rhs),
    IdentitySpec("C-COR-2", "(lambda)_n/n!-weighted sum of B_m(-2n-1) (3F2)",
                 "Bateman lambda generating function", (M, LAM), _c_cor2_lhs, _c_cor2_rhs),
    IdentitySpec("C-COR-3", "sum_n B^j_m(-2n-1-j) t^n (2F1)",
                 "Pasternack generating function in the argument", (M, J),
                 _c_cor3_lhs, _c_cor3_rhs),
    IdentitySpec("C-COR-4", "(lambda)_n/n!-weighted sum of B^j_m(-2n-1-j) (3F2)",
                 "Pasternack lambda generating function", (M, J, LAM),
                 _c_cor4_lhs, _c_cor4_rhs),
    IdentitySpec("C-CONN-LAG", "Sylvester phi_n(z) = (-1)^n L_n^(-z-n)(z)",
                 "Sylvester-Laguerre connection", (Z_NONZERO,),
                 _c_sylvester_lhs, _c_conn_laguerre_rhs),
    IdentitySpec("C-CONN-CHA", "Sylvester phi_n(z) = z^n/n! C_n(-z; z)",
                 "Sylvester-Charlier connection", (Z_NONZERO,),
                 _c_sylvester_lhs, _c_conn_charlier_rhs),
    IdentitySpec("C-CONN-JAC", "Cesaro g_n^(s)(z) = P_n^(s+1,-s-n-1)(2z-1)",
                 "Cesaro-Jacobi connection", (S, Z_ANY), _c_cesaro_lhs, _c_conn_jacobi_rhs),
]

REGISTRY: dict[str, IdentitySpec] = {spec.id: spec for spec in _ENTRIES}


def list_identities() -> list[tuple[str, str, dict[str, str]]]:
    return [(spec.id, spec.description, spec.schema) for spec in _ENTRIES]


def get_identity(identity_id: str) -> IdentitySpec | None:
    return REGISTRY.get(identity_id)


def build_lhs(identity_id: str, binding: Mapping[str, Fraction], order: int) -> TruncatedSeries:
    spec = _lookup(identity_id)
    return spec.lhs_builder(complete_binding(spec, binding), order)


def build_rhs(identity_id: str, binding: Mapping[str, Fraction], order: int) -> TruncatedSeries:
    spec = _lookup(identity_id)
    return spec.rhs_builder(complete_binding(spec, binding), order)


def _lookup(identity_id: str) -> IdentitySpec:
    spec = REGISTRY.get(identity_id)
    if spec is None:
        raise KeyError(f"unknown identity {identity_id!r}")
    return spec
