"""Exact rational scalars.

Everything in the package computes over :class:`fractions.Fraction`; there is
no floating point anywhere.  The helpers here add the handful of predicates
and products the other modules need.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Fraction
Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def scalar(p: int, q: int = 1) -> Fraction:
    """Return p/q in lowest terms with a positive denominator.

    Raises ZeroDivisionError for q == 0.
    """
    if q == 0:
        raise ZeroDivisionError(f"scalar({p}, 0): zero denominator")
    return Fraction(p, q)


def as_scalar(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def is_integer(s: Rational) -> bool:
    return Fraction(s).denominator == 1


def falling_product(s: Rational, count: int) -> Fraction:
    """s (s-1) ... (s-count+1); the empty product is 1."""
    if count < 0:
        raise ValueError("count must be >= 0")
    out = Fraction(1)
    s = Fraction(s)
    for j in range(count):
        out *= s - j
    return out


def format_scalar(s: Rational) -> str:
    s = Fraction(s)
    if s.denominator == 1:
        return str(s.numerator)
    return f"{s.numerator}/{s.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" (q > 0) into a reduced Fraction."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"malformed rational (zero denominator): {text!r}")
    return Fraction(num, den)
