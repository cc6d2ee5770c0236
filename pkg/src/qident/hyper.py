"""Basic hypergeometric series r_phi_s and classical pFq.

Parameters are :class:`Scalar`, :class:`Zero`, :class:`LinearT` (the
parameter ``c t``) or :class:`Pair` (the two parameters ``+c t^{1/2}`` and
``-c t^{1/2}``).  A spec with only scalar atoms and a scalar argument is
evaluated to a Fraction; otherwise it is expanded as a truncated series
in ``t``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .qcore import QBase, qpoch_finite_in_t, qpoch_scalar
from .series import TruncatedSeries

DEFAULT_GUARD = 64


@dataclass(frozen=True)
class Scalar:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class Zero:
    @property
    def c(self) -> Fraction:
        return Fraction(0)


@dataclass(frozen=True)
class LinearT:
    """The parameter ``c t``."""
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


@dataclass(frozen=True)
class Pair:
    """The two parameters ``c t^{1/2}`` and ``-c t^{1/2}``."""
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", Fraction(self.c))


ParamAtom = Union[Scalar, Zero, LinearT, Pair]


def _atom(x) -> ParamAtom:
    if isinstance(x, (Scalar, Zero, LinearT, Pair)):
        return x
    return Scalar(Fraction(x))


def _width(atom: ParamAtom) -> int:
    return 2 if isinstance(atom, Pair) else 1


def _is_scalar(atom: ParamAtom) -> bool:
    return isinstance(atom, (Scalar, Zero))


class NonTerminatingError(ValueError):
    pass


class VanishingDenominatorError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class PhiSpec:
    """An r_phi_s (``base`` given) or pFq (``base is None``) series.

    ``argument`` is a :class:`Scalar` or :class:`LinearT`; a bare rational
    is read as a scalar.
    """

    numerator: tuple
    denominator: tuple
    argument: ParamAtom | None = None
    base: QBase | None = None

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(_atom(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(_atom(b) for b in self.denominator))
        if self.argument is not None:
            object.__setattr__(self, "argument", _atom(self.argument))
        if self.base is None:
            bad = [a for a in self.numerator + self.denominator if not _is_scalar(a)]
            if bad:
                raise ValueError("classical series take scalar parameters only")

    @property
    def kind(self) -> str:
        return "classical" if self.base is None else "basic"

    @property
    def r(self) -> int:
        return sum(_width(a) for a in self.numerator)

    @property
    def s(self) -> int:
        return sum(_width(b) for b in self.denominator)

    @property
    def compensation(self) -> int:
        """Exponent of ``(-1)^k q^{k(k-1)/2}`` in the k-th term."""
        return 1 + self.s - self.r

    @property
    def scalar_mode(self) -> bool:
        return (all(_is_scalar(a) for a in self.numerator + self.denominator)
                and _is_scalar(self.argument))


def phi(numerator: Sequence, denominator: Sequence, argument, base: QBase) -> PhiSpec:
    return PhiSpec(tuple(numerator), tuple(denominator), argument, base)


def hyp(numerator: Sequence, denominator: Sequence, argument=None) -> PhiSpec:
    return PhiSpec(tuple(numerator), tuple(denominator), argument, None)


def termination_index(spec: PhiSpec, guard: int = DEFAULT_GUARD) -> int | None:
    """Smallest ``m <= guard`` such that a numerator parameter is ``q^{-m}``
    (or ``-m`` for a classical series), else ``None``."""
    scalars = [a.c for a in spec.numerator if _is_scalar(a)]
    if not scalars:
        return None
    if spec.base is None:
        hits = [-c for c in scalars if c.denominator == 1 and -guard <= c <= 0]
        return int(min(hits)) if hits else None
    q = spec.base.q
    hits = []
    for c in scalars:
        # c = q^{-m} means c q^m = 1; c q^m only decreases, so stop below 1
        x = c
        for m in range(guard + 1):
            if x == 1:
                hits.append(m)
                break
            if x < 1:
                break
            x *= q
    return min(hits) if hits else None


def phi_eval_scalar(spec: PhiSpec, guard: int = DEFAULT_GUARD) -> Fraction:
    """Exact value of a terminating basic series."""
    if spec.base is None:
        return f_eval_scalar(spec, guard)
    if not spec.scalar_mode:
        raise ValueError("phi_eval_scalar needs scalar parameters and argument")
    m = termination_index(spec, guard)
    if m is None:
        raise NonTerminatingError("no numerator parameter equals q^-m within the guard")
    q = spec.base.q
    e = spec.compensation
    x = spec.argument.c
    num = [a.c for a in spec.numerator]
    den = [b.c for b in spec.denominator]
    term = Fraction(1)
    total = Fraction(1)
    qk = Fraction(1)
    for k in range(m):
        ratio = x / (1 - qk * q)
        for a in num:
            ratio *= 1 - a * qk
        for b in den:
            d = 1 - b * qk
            if d == 0:
                raise VanishingDenominatorError(f"denominator Pochhammer vanishes at k={k + 1}")
            ratio /= d
        # compensation factor grows by (-q^k)^e from term k to k+1
        if e:
            ratio *= (-qk) ** e
        term *= ratio
        total += term
        qk *= q
    return total


def f_coefficients(spec: PhiSpec, count: int) -> list[Fraction]:
    """First ``count + 1`` coefficients ``prod (a)_k / (prod (b)_k k!)`` of a pFq."""
    num = [a.c for a in spec.numerator]
    den = [b.c for b in spec.denominator]
    out = [Fraction(1)]
    for k in range(count):
        ratio = Fraction(1, k + 1)
        for a in num:
            ratio *= a + k
        if ratio == 0:
            out.extend([Fraction(0)] * (count - k))
            break
        for b in den:
            if b + k == 0:
                raise VanishingDenominatorError(f"denominator rising factorial vanishes at k={k + 1}")
            ratio /= b + k
        out.append(out[-1] * ratio)
    return out


def f_eval_scalar(spec: PhiSpec, guard: int = DEFAULT_GUARD) -> Fraction:
    """Exact value of a terminating classical pFq."""
    if spec.base is not None:
        raise ValueError("f_eval_scalar takes a classical spec")
    m = termination_index(spec, guard)
    if m is None:
        raise NonTerminatingError("no numerator parameter is a non-positive integer within the guard")
    x = spec.argument.c
    total = Fraction(0)
    for c in reversed(f_coefficients(spec, m)):
        total = total * x + c
    return total


def f_series(spec: PhiSpec, inner: TruncatedSeries, order: int | None = None) -> TruncatedSeries:
    """Formal pFq(u) with ``u = inner(t)``.

    ``inner`` must vanish at ``t = 0`` unless the series terminates, in
    which case it is a polynomial and any inner series is allowed.
    """
    if spec.base is not None:
        raise ValueError("f_series takes a classical spec")
    order = inner.order if order is None else min(order, inner.order)
    inner = inner.truncate(order)
    m = termination_index(spec, DEFAULT_GUARD)
    if m is not None:
        outer = TruncatedSeries.polynomial_of(f_coefficients(spec, m), max(order, m))
    else:
        if inner.coeffs[0] != 0:
            raise ValueError("non-terminating pFq composed with an inner series of nonzero constant term")
        outer = TruncatedSeries(f_coefficients(spec, order))
    return outer.compose(inner).truncate(order)


def phi_series(spec: PhiSpec, order: int, guard: int = DEFAULT_GUARD) -> TruncatedSeries:
    """Expand a basic series whose parameters or argument involve ``t``.

    Running products are updated one linear factor at a time, so each
    term costs O(N) per ``t``-dependent parameter.
    """
    if spec.base is None:
        raise ValueError("phi_series takes a basic spec; use f_series for pFq")
    m = termination_index(spec, guard)
    arg = spec.argument
    if isinstance(arg, LinearT):
        last = order if m is None else min(order, m)
    elif _is_scalar(arg):
        if m is None:
            raise NonTerminatingError("scalar argument needs a terminating series")
        last = m
    else:
        raise ValueError("argument must be scalar or c*t")

    q = spec.base.q
    e = spec.compensation
    x = arg.c
    t_power = 1 if isinstance(arg, LinearT) else 0

    num_s = [a.c for a in spec.numerator if _is_scalar(a)]
    den_s = [b.c for b in spec.denominator if _is_scalar(b)]
    # t-dependent factors as (alpha, step): the k-th factor is 1 - alpha * step^k * t
    num_t = _t_factors(spec.numerator, q)
    den_t = _t_factors(spec.denominator, q)

    scalar = Fraction(1)
    body = TruncatedSeries.one(order)
    total = TruncatedSeries.constant(0, order)
    qk = Fraction(1)
    for k in range(last + 1):
        if k:
            ratio = x / (1 - qk * q)
            for a in num_s:
                ratio *= 1 - a * qk
            for b in den_s:
                d = 1 - b * qk
                if d == 0:
                    raise VanishingDenominatorError(f"denominator Pochhammer vanishes at k={k}")
                ratio /= d
            if e:
                ratio *= (-qk) ** e
            scalar *= ratio
            for alpha, step in num_t:
                body = body.mul_linear(alpha * step ** (k - 1))
            for alpha, step in den_t:
                body = body.div_linear(alpha * step ** (k - 1))
            qk *= q
        if scalar == 0:
            break
        total = total + (body * scalar).shift(k * t_power)
    return total


def _t_factors(atoms, q):
    out = []
    for a in atoms:
        if isinstance(a, LinearT):
            out.append((a.c, q))
        elif isinstance(a, Pair):
            out.append((a.c * a.c, q * q))
    return out


def phi_series_direct(spec: PhiSpec, order: int, guard: int = DEFAULT_GUARD) -> TruncatedSeries:
    """Term-by-term expansion with every Pochhammer rebuilt from scratch.

    A pair ``(c t^{1/2}; q)_k (-c t^{1/2}; q)_k`` is expanded here as
    ``(c^2 t; q^2)_k`` in base ``q^2``.  Slow; kept as a cross-check of
    :func:`phi_series`.
    """
    base = spec.base
    q = base.q
    base_sq = QBase(q)  # its own q is q^2
    m = termination_index(spec, guard)
    last = order if m is None else min(order, m)
    if not isinstance(spec.argument, LinearT):
        last = m
    e = spec.compensation
    total = TruncatedSeries.constant(0, order)
    for k in range(last + 1):
        coef = spec.argument.c ** k / qpoch_scalar(q, k, base)
        comp = (-1) ** k * q ** (k * (k - 1) // 2)
        coef *= comp ** e if e >= 0 else 1 / comp ** (-e)
        term = TruncatedSeries.one(order)
        for a in spec.numerator:
            if _is_scalar(a):
                coef *= qpoch_scalar(a.c, k, base)
            elif isinstance(a, LinearT):
                term = term * qpoch_finite_in_t(a.c, k, base, order)
            else:
                term = term * qpoch_finite_in_t(a.c * a.c, k, base_sq, order)
        for b in spec.denominator:
            if _is_scalar(b):
                d = qpoch_scalar(b.c, k, base)
                if d == 0:
                    raise VanishingDenominatorError(f"denominator Pochhammer vanishes at k={k}")
                coef /= d
            elif isinstance(b, LinearT):
                term = term / qpoch_finite_in_t(b.c, k, base, order)
            else:
                term = term / qpoch_finite_in_t(b.c * b.c, k, base_sq, order)
        if isinstance(spec.argument, LinearT):
            term = term.shift(k)
        total = total + term * coef
    return total
