"""Univariate polynomials and reduced rational functions over Q.

Polynomials are tuples of coefficients in ascending order with no trailing
zeros; the zero polynomial is ``()``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Tuple

from .rational import normalize
from .series import LaurentSeries, series_multiply, series_reciprocal

UPoly = Tuple[object, ...]


def _strip(c: Sequence) -> UPoly:
    c = [normalize(x) for x in c]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_from_roots(roots: Iterable) -> UPoly:
    """``prod (z - r)`` for the given roots."""
    p: UPoly = (1,)
    for r in roots:
        p = poly_mul(p, (-r, 1))
    return p


def poly_add(a: UPoly, b: UPoly) -> UPoly:
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def poly_sub(a: UPoly, b: UPoly) -> UPoly:
    return poly_add(a, tuple(-x for x in b))


def poly_mul(a: UPoly, b: UPoly) -> UPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def poly_divmod(a: UPoly, b: UPoly):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        a = list(_strip(a))
    return _strip(q), _strip(a)


def poly_monic(a: UPoly) -> UPoly:
    if not a:
        return a
    lead = Fraction(a[-1])
    return _strip([x / lead for x in a])


def poly_gcd(a: UPoly, b: UPoly) -> UPoly:
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return poly_monic(a)


def poly_eval(a: UPoly, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return normalize(acc) if isinstance(acc, (int, Fraction)) else acc


def poly_shift(a: UPoly, s) -> UPoly:
    """``a(z + s)``."""
    out = [0] * len(a)
    for e, c in enumerate(a):
        if not c:
            continue
        for i in range(e + 1):
            out[i] += c * comb(e, i) * s ** (e - i)
    return _strip(out)


def poly_degree(a: UPoly) -> int:
    return len(a) - 1


class RationalFunction:
    """``num/den`` in lowest terms with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Sequence, den: Sequence = (1,)):
        num, den = _strip(num), _strip(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den) if num else den
        if num:
            num, _ = poly_divmod(num, g)
        den, _ = poly_divmod(den, g)
        lead = Fraction(den[-1])
        self.num = _strip([x / lead for x in num])
        self.den = _strip([x / lead for x in den])

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(num={self.num}, den={self.den})"

    def reciprocal(self) -> "RationalFunction":
        return RationalFunction(self.den, self.num)

    def shift(self, s) -> "RationalFunction":
        """``f(z + s)``."""
        return RationalFunction(poly_shift(self.num, s), poly_shift(self.den, s))

    def __call__(self, x):
        return Fraction(poly_eval(self.num, x)) / poly_eval(self.den, x)

    def laurent(self, order: int, variable: str = "z") -> LaurentSeries:
        """Expansion at infinity in decreasing powers, exact down to ``z**order``."""
        if not self.num:
            return LaurentSeries({}, variable, lo=order, hi=order)
        num = LaurentSeries.from_poly_coeffs(self.num, variable)
        den = LaurentSeries.from_poly_coeffs(self.den, variable)
        inv = series_reciprocal(den, order - poly_degree(self.num))
        return series_multiply(num, inv, lo=order)
