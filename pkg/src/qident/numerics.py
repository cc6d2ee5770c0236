"""Exact rationals and configurable-precision floats.

Exact scalars are :class:`fractions.Fraction`, which is always kept in
lowest terms with a positive denominator.  Floating-point work (only the
q -> 1 limit checks need it) uses :mod:`mpmath` numbers rounded at an
explicit binary precision.
"""

from __future__ import annotations

import re
from fractions import Fraction

import mpmath
from mpmath.libmp import from_rational, round_nearest

Rational = Fraction
BigFloat = mpmath.mpf

MIN_PRECISION = 64

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"int"`` or ``"int/int"`` into a canonical Fraction.

    Decimal points, exponents and whitespace inside the literal are
    rejected so that no float ever leaks into the exact path.
    """
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def rational_power(x: Fraction, k: int) -> Fraction:
    if k < 0 and x == 0:
        raise ZeroDivisionError("0 raised to a negative power")
    return Fraction(x) ** k


def to_float(x: Fraction | int, precision: int) -> mpmath.mpf:
    """Round ``x`` to nearest at ``precision`` bits."""
    if precision < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {precision}")
    x = Fraction(x)
    return mpmath.mpf(from_rational(x.numerator, x.denominator, precision, round_nearest))
