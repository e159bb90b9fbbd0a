"""Exact rationals.

The coefficient domain is :class:`fractions.Fraction`; integral values are
kept as plain ``int`` wherever possible because Python integer arithmetic is
several times faster than Fraction arithmetic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def normalize(x) -> Rational:
    """Return ``x`` as an int when it is integral, else as a reduced Fraction."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"not an exact rational: {x!r}")


def to_rational(x) -> Rational:
    """Coerce ints, Fractions and "a/b" strings; floats are rejected."""
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use 'a/b' strings")
    return normalize(x)


def format_rational(x) -> str:
    """Canonical "a/b" text form, with "/b" omitted when b == 1."""
    x = normalize(x)
    if isinstance(x, int):
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Rational:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse rational from {text!r}")
    num = int(m.group(1))
    if m.group(2) is None:
        return num
    den = int(m.group(2))
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return normalize(Fraction(num, den))


def exact_div(a: int, b: int) -> int:
    """Integer division that refuses to round."""
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError(f"{a} is not divisible by {b}")
    return q
