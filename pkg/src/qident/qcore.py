"""q-numbers, q-factorials, q-binomials and q-Pochhammer symbols.

The base is carried as ``p = q**(1/2)`` so that half-integer powers of
``q`` stay rational.  Pochhammer symbols whose argument involves the
formal variable ``t`` come back as :class:`TruncatedSeries`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .series import TruncatedSeries


class QBase:
    """The base of every q-object, stored as ``p = q**(1/2)``.

    :meth:`from_q` builds a base from ``q`` itself; when ``q`` is not a
    rational square, half-integer powers are unavailable.
    """

    __slots__ = ("p", "q")

    def __init__(self, p):
        p = Fraction(p)
        if not 0 < p < 1:
            raise ValueError(f"base p must satisfy 0 < p < 1, got {p}")
        self.p = p
        self.q = p * p

    @classmethod
    def from_q(cls, q) -> QBase:
        q = Fraction(q)
        if not 0 < q < 1:
            raise ValueError(f"base q must satisfy 0 < q < 1, got {q}")
        obj = object.__new__(cls)
        obj.p = _rational_sqrt(q)
        obj.q = q
        return obj

    def qpow(self, k: int) -> Fraction:
        """``q**k`` for integer ``k``."""
        return self.q ** k

    def half_pow(self, k: int) -> Fraction:
        """``q**(k/2)``, i.e. ``p**k``."""
        if k % 2 == 0:
            return self.q ** (k // 2)
        if self.p is None:
            raise ValueError(f"q = {self.q} has no rational square root")
        return self.p ** k

    def __eq__(self, other):
        return isinstance(other, QBase) and self.q == other.q

    def __hash__(self):
        return hash(self.q)

    def __repr__(self):
        return f"QBase(p={self.p}, q={self.q})"


def _rational_sqrt(x: Fraction) -> Fraction | None:
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _as_base(base) -> QBase:
    return base if isinstance(base, QBase) else QBase(Fraction(base))


def q_number(a: int, base: QBase) -> Fraction:
    """``[a]_q = (1 - q^a) / (1 - q)`` for integer ``a``."""
    if not isinstance(a, int):
        raise TypeError(f"q_number takes an integer exponent, got {a!r}")
    q = _as_base(base).q
    return (1 - q ** a) / (1 - q)


def q_factorial(n: int, base: QBase) -> Fraction:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= q_number(k, base)
    return out


def q_binomial(n: int, k: int, base: QBase) -> Fraction:
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    q = _as_base(base).q
    return qpoch_scalar(q, n, base) / (qpoch_scalar(q, k, base) * qpoch_scalar(q, n - k, base))


def qpoch_scalar(a, n: int, base: QBase) -> Fraction:
    """``(a;q)_n = prod_{i<n} (1 - a q^i)``."""
    if n < 0:
        raise ValueError("qpoch_scalar needs n >= 0")
    q = _as_base(base).q
    a = Fraction(a)
    out = Fraction(1)
    x = a
    for _ in range(n):
        out *= 1 - x
        x *= q
    return out


def qpoch_scalar_table(a, n: int, base: QBase) -> list[Fraction]:
    """``[(a;q)_0, ..., (a;q)_n]``."""
    q = _as_base(base).q
    out = [Fraction(1)]
    x = Fraction(a)
    for _ in range(n):
        out.append(out[-1] * (1 - x))
        x *= q
    return out


def qpoch_inf_series(c, base: QBase, order: int) -> TruncatedSeries:
    """``(c t; q)_oo`` from Euler's expansion.

    The ``t^k`` coefficient is ``(-1)^k q^{k(k-1)/2} c^k / (q;q)_k``.
    """
    q = _as_base(base).q
    c = Fraction(c)
    coeffs = [Fraction(1)]
    # ratio of consecutive coefficients: -c q^{k-1} / (1 - q^k)
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * (-c) * q ** (k - 1) / (1 - q ** k))
    return TruncatedSeries(coeffs)


def qpoch_inf_reciprocal_series(c, base: QBase, order: int) -> TruncatedSeries:
    """``1 / (c t; q)_oo``; the ``t^k`` coefficient is ``c^k / (q;q)_k``."""
    q = _as_base(base).q
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / (1 - q ** k))
    return TruncatedSeries(coeffs)


def qpoch_lambda_series(c, L, base: QBase, order: int) -> TruncatedSeries:
    """``(c t; q)_lambda = (c t; q)_oo / (c L t; q)_oo`` with ``L = q^lambda``."""
    c, L = Fraction(c), Fraction(L)
    return qpoch_inf_series(c, base, order) * qpoch_inf_reciprocal_series(c * L, base, order)


def qpoch_finite_in_t(c, n: int, base: QBase, order: int) -> TruncatedSeries:
    """``(c t; q)_n = prod_{i<n} (1 - c q^i t)``."""
    if n < 0:
        raise ValueError("qpoch_finite_in_t needs n >= 0")
    q = _as_base(base).q
    x = Fraction(c)
    out = TruncatedSeries.one(order)
    for _ in range(n):
        out = out.mul_linear(x)
        x *= q
    return TruncatedSeries(list(out.coeffs), polynomial=n <= order)


def qpoch_pair(c, k: int, base: QBase, order: int) -> TruncatedSeries:
    """``(c t^{1/2}; q)_k (-c t^{1/2}; q)_k = prod_{i<k} (1 - c^2 q^{2i} t)``."""
    if k < 0:
        raise ValueError("qpoch_pair needs k >= 0")
    q = _as_base(base).q
    x = Fraction(c) ** 2
    out = TruncatedSeries.one(order)
    for _ in range(k):
        out = out.mul_linear(x)
        x *= q * q
    return TruncatedSeries(list(out.coeffs), polynomial=k <= order)
