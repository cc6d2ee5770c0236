"""Truncated formal power series in one variable ``t``.

A :class:`TruncatedSeries` of order ``N`` stores ``c_0 .. c_N`` and says
nothing about degrees above ``N``.  Binary operations truncate to the
smaller order.  Coefficients are either exact (``Fraction``) or float
(``mpmath.mpf``); the two kinds never mix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence

import mpmath

EXACT = "exact"
FLOAT = "float"


class Mismatch(NamedTuple):
    power: int
    lhs: object
    rhs: object


def _kind_of(value) -> str:
    return FLOAT if isinstance(value, mpmath.mpf) else EXACT


def _coerce(value, kind: str):
    if kind == EXACT:
        if isinstance(value, mpmath.mpf) or isinstance(value, float):
            raise TypeError("float scalar in an exact series")
        return Fraction(value)
    return mpmath.mpf(value)


class TruncatedSeries:
    """Immutable truncated power series ``c_0 + c_1 t + ... + c_N t^N``.

    ``polynomial=True`` asserts that every coefficient above ``N`` is zero,
    which is what lets :meth:`compose` accept an inner series with a
    nonzero constant term.
    """

    __slots__ = ("_coeffs", "kind", "polynomial")

    def __init__(self, coeffs: Sequence, kind: str | None = None, polynomial: bool = False):
        if len(coeffs) == 0:
            raise ValueError("a series needs at least the constant coefficient")
        if kind is None:
            kind = FLOAT if any(isinstance(c, mpmath.mpf) for c in coeffs) else EXACT
        if kind not in (EXACT, FLOAT):
            raise ValueError(f"unknown scalar kind {kind!r}")
        self._coeffs = tuple(_coerce(c, kind) for c in coeffs)
        self.kind = kind
        self.polynomial = polynomial

    @classmethod
    def _raw(cls, coeffs: list, kind: str, polynomial: bool = False) -> TruncatedSeries:
        # coefficients already of the right kind
        obj = object.__new__(cls)
        obj._coeffs = tuple(coeffs)
        obj.kind = kind
        obj.polynomial = polynomial
        return obj

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c, order: int, kind: str | None = None) -> TruncatedSeries:
        kind = kind or _kind_of(c)
        zero = _coerce(0, kind)
        return cls._raw([_coerce(c, kind)] + [zero] * order, kind, polynomial=True)

    @classmethod
    def one(cls, order: int, kind: str = EXACT) -> TruncatedSeries:
        return cls.constant(1, order, kind)

    @classmethod
    def monomial(cls, c, power: int, order: int, kind: str | None = None) -> TruncatedSeries:
        kind = kind or _kind_of(c)
        zero = _coerce(0, kind)
        coeffs = [zero] * (order + 1)
        if power <= order:
            coeffs[power] = _coerce(c, kind)
        return cls._raw(coeffs, kind, polynomial=True)

    @classmethod
    def polynomial_of(cls, coeffs: Sequence, order: int, kind: str | None = None) -> TruncatedSeries:
        """Exact polynomial with the given low-to-high coefficients.

        ``order`` may be below the degree; the series is then a truncation
        and loses the polynomial flag.
        """
        kind = kind or (FLOAT if any(isinstance(c, mpmath.mpf) for c in coeffs) else EXACT)
        cs = [_coerce(c, kind) for c in coeffs]
        zero = _coerce(0, kind)
        exact_poly = len(cs) <= order + 1 or all(c == 0 for c in cs[order + 1:])
        cs = (cs + [zero] * (order + 1))[: order + 1]
        return cls._raw(cs, kind, polynomial=exact_poly)

    @classmethod
    def linear(cls, c0, c1, order: int) -> TruncatedSeries:
        """``c0 + c1 t``."""
        return cls.polynomial_of([c0, c1], order)

    # -- accessors ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient t^{k} outside 0..{self.order}")
        return self._coeffs[k]

    __getitem__ = coeff

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            if not self.polynomial:
                raise ValueError(f"cannot extend a series of order {self.order} to {order}")
            zero = _coerce(0, self.kind)
            return TruncatedSeries._raw(list(self._coeffs) + [zero] * (order - self.order),
                                        self.kind, True)
        poly = self.polynomial and all(c == 0 for c in self._coeffs[order + 1:])
        return TruncatedSeries._raw(list(self._coeffs[: order + 1]), self.kind, poly)

    # -- ring operations ---------------------------------------------

    def _check_kind(self, other: TruncatedSeries) -> None:
        if self.kind != other.kind:
            raise TypeError(f"scalar-kind mismatch: {self.kind} vs {other.kind}")

    def _scalar(self, c):
        return _coerce(c, self.kind)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_kind(other)
            n = min(self.order, other.order)
            cs = [a + b for a, b in zip(self._coeffs[: n + 1], other._coeffs[: n + 1])]
            return TruncatedSeries._raw(cs, self.kind, self.polynomial and other.polynomial
                                        and n == max(self.order, other.order))
        cs = list(self._coeffs)
        cs[0] = cs[0] + self._scalar(other)
        return TruncatedSeries._raw(cs, self.kind, self.polynomial)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries._raw([-c for c in self._coeffs], self.kind, self.polynomial)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        c = self._scalar(other)
        return TruncatedSeries._raw([c * a for a in self._coeffs], self.kind, self.polynomial)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, series_reciprocal(other))
        c = self._scalar(other)
        return TruncatedSeries._raw([a / c for a in self._coeffs], self.kind, self.polynomial)

    def __rtruediv__(self, other):
        return series_reciprocal(self) * other

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return series_reciprocal(self) ** (-k)
        result = TruncatedSeries.one(self.order, self.kind)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.kind == other.kind and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.kind, self._coeffs))

    # -- cheap structured products -------------------------------------

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by ``t^k`` keeping the order."""
        if k == 0:
            return self
        zero = _coerce(0, self.kind)
        cs = ([zero] * k + list(self._coeffs))[: self.order + 1]
        return TruncatedSeries._raw(cs, self.kind, False)

    def mul_linear(self, alpha) -> TruncatedSeries:
        """Multiply by ``1 - alpha t`` in O(N)."""
        alpha = self._scalar(alpha)
        cs = self._coeffs
        out = [cs[0]] + [cs[i] - alpha * cs[i - 1] for i in range(1, len(cs))]
        return TruncatedSeries._raw(out, self.kind, False)

    def div_linear(self, alpha) -> TruncatedSeries:
        """Divide by ``1 - alpha t`` in O(N)."""
        alpha = self._scalar(alpha)
        out = [self._coeffs[0]]
        for c in self._coeffs[1:]:
            out.append(c + alpha * out[-1])
        return TruncatedSeries._raw(out, self.kind, False)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)

    def __call__(self, inner: TruncatedSeries) -> TruncatedSeries:
        return series_compose(self, inner)

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self._coeffs)
        return f"TruncatedSeries([{terms}], order={self.order})"


def series_mul(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at ``min(f.order, g.order)``."""
    f._check_kind(g)
    n = min(f.order, g.order)
    a, b = f.coeffs, g.coeffs
    zero = _coerce(0, f.kind)
    # skip zero coefficients, the common case for sparse prefactors
    nz = [(i, a[i]) for i in range(n + 1) if a[i] != 0]
    out = [zero] * (n + 1)
    for i, ai in nz:
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    poly = f.polynomial and g.polynomial and _degree(f) + _degree(g) <= n
    return TruncatedSeries._raw(out, f.kind, poly)


def _degree(f: TruncatedSeries) -> int:
    for k in range(f.order, -1, -1):
        if f.coeffs[k] != 0:
            return k
    return 0


def series_reciprocal(f: TruncatedSeries) -> TruncatedSeries:
    """``g`` with ``f g = 1`` through order ``N``."""
    a = f.coeffs
    if a[0] == 0:
        raise ZeroDivisionError("reciprocal of a series with zero constant term")
    inv0 = 1 / a[0]
    out = [inv0]
    nz = [(i, a[i]) for i in range(1, len(a)) if a[i] != 0]
    for k in range(1, len(a)):
        s = 0
        for i, ai in nz:
            if i > k:
                break
            s += ai * out[k - i]
        out.append(-s * inv0)
    out = [_coerce(c, f.kind) for c in out]
    return TruncatedSeries._raw(out, f.kind, False)


def series_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(t))``.

    Needs ``inner(0) == 0`` unless ``outer`` is flagged as an exact
    polynomial, in which case this is polynomial evaluation at a series.
    """
    outer._check_kind(inner)
    if outer.polynomial:
        order = inner.order
        coeffs = outer.coeffs[: _degree(outer) + 1]
    elif inner.coeffs[0] != 0:
        raise ValueError("inner series has a nonzero constant term and outer is not a polynomial")
    else:
        order = min(outer.order, inner.order)
        coeffs = outer.coeffs[: order + 1]
        inner = inner.truncate(order)
    result = TruncatedSeries.constant(coeffs[-1], order, outer.kind)
    for c in reversed(coeffs[:-1]):
        result = series_mul(result, inner) + c
    return TruncatedSeries._raw(list(result.coeffs), outer.kind,
                                outer.polynomial and inner.polynomial and result.polynomial)


def series_coeff(f: TruncatedSeries, k: int):
    return f.coeff(k)


def series_equal_to_order(f: TruncatedSeries, g: TruncatedSeries, order: int) -> tuple[bool, Mismatch | None]:
    """Compare ``c_0..c_order``; on failure report the lowest differing power."""
    if order > min(f.order, g.order):
        raise ValueError(f"order {order} exceeds available order {min(f.order, g.order)}")
    for k in range(order + 1):
        if f.coeffs[k] != g.coeffs[k]:
            return False, Mismatch(k, f.coeffs[k], g.coeffs[k])
    return True, None


def exp_series(c, order: int) -> TruncatedSeries:
    """``exp(c t)``."""
    c = Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / n)
    return TruncatedSeries._raw(coeffs, EXACT)


def binomial_series(alpha, c, order: int) -> TruncatedSeries:
    """``(1 - c t)^(-alpha)``, whose ``t^n`` coefficient is ``(alpha)_n c^n / n!``."""
    alpha, c = Fraction(alpha), Fraction(c)
    coeffs = [Fraction(1)]
    for n in range(1, order + 1):
        coeffs.append(coeffs[-1] * (alpha + n - 1) * c / n)
    return TruncatedSeries._raw(coeffs, EXACT)


def series_from_terms(terms: Sequence, order: int | None = None) -> TruncatedSeries:
    """Series whose ``t^n`` coefficient is ``terms[n]``."""
    if order is not None:
        terms = list(terms)[: order + 1]
    return TruncatedSeries(list(terms))
