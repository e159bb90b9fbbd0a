"""Truncated Laurent series in decreasing powers, and ascending power series.

Coefficients may be exact rationals or :class:`MultiPoly` values; the code
only relies on ``+``, ``*`` and comparison with 0.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, List, Optional

from ..errors import NonInvertibleError, ShapeError, TruncationError
from .multipoly import MultiPoly
from .rational import normalize


def _is_zero(c) -> bool:
    return c == 0


def invert_coefficient(c):
    if isinstance(c, MultiPoly):
        if c.is_constant() and c:
            return MultiPoly.const(Fraction(1) / c.constant())
        raise NonInvertibleError(f"coefficient {c} is not invertible")
    if c == 0:
        raise NonInvertibleError("zero coefficient is not invertible")
    return normalize(Fraction(1) / c)


class LaurentSeries:
    """A series ``sum c_e z**e`` expanded toward negative exponents.

    Exponents above ``hi`` are exactly zero.  Coefficients are known exactly
    down to ``lo`` inclusive; below ``lo`` they are unknown.  ``lo is None``
    marks an exact Laurent polynomial.
    """

    __slots__ = ("variable", "coeffs", "hi", "lo")

    def __init__(self, coeffs: Dict[int, object], variable: str = "z",
                 lo: Optional[int] = None, hi: Optional[int] = None):
        clean = {e: c for e, c in coeffs.items() if not _is_zero(c)}
        if lo is not None:
            clean = {e: c for e, c in clean.items() if e >= lo}
        top = max(clean, default=None)
        if hi is None:
            hi = top if top is not None else (lo if lo is not None else 0)
        elif top is not None and top > hi:
            raise ValueError("stored exponent above the declared window")
        if lo is not None and lo > hi:
            hi = lo
        self.variable = variable
        self.coeffs = clean
        self.hi = hi
        self.lo = lo

    @classmethod
    def monomial(cls, e: int, c=1, variable: str = "z") -> "LaurentSeries":
        return cls({e: c}, variable)

    @classmethod
    def from_poly_coeffs(cls, coeffs, variable: str = "z") -> "LaurentSeries":
        """From ascending polynomial coefficients ``[c0, c1, ...]``."""
        return cls({i: c for i, c in enumerate(coeffs)}, variable)

    @property
    def exact(self) -> bool:
        return self.lo is None

    def window(self):
        return (self.lo, self.hi)

    def top(self):
        """Highest exponent with a non-zero coefficient."""
        return max(self.coeffs, default=None)

    def __repr__(self):
        return f"LaurentSeries({self.coeffs!r}, variable={self.variable!r}, lo={self.lo}, hi={self.hi})"

    def _check_var(self, other: "LaurentSeries"):
        if other.variable != self.variable:
            raise ShapeError(f"variable mismatch: {self.variable} vs {other.variable}")

    def coefficient(self, e: int):
        if e > self.hi:
            return 0
        if self.lo is not None and e < self.lo:
            raise TruncationError(
                f"coefficient of {self.variable}^{e} requested but series is only known down to "
                f"{self.variable}^{self.lo}"
            )
        return self.coeffs.get(e, 0)

    def truncate(self, lo: int) -> "LaurentSeries":
        new_lo = lo if self.lo is None else max(lo, self.lo)
        return LaurentSeries(self.coeffs, self.variable, lo=new_lo, hi=max(self.hi, new_lo))

    def map_coefficients(self, fn) -> "LaurentSeries":
        return LaurentSeries({e: fn(c) for e, c in self.coeffs.items()}, self.variable, self.lo, self.hi)

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries({0: other}, self.variable)
        self._check_var(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        los = [x for x in (self.lo, other.lo) if x is not None]
        lo = max(los) if los else None
        return LaurentSeries(out, self.variable, lo=lo, hi=max(self.hi, other.hi))

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries({e: -c for e, c in self.coeffs.items()}, self.variable, self.lo, self.hi)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LaurentSeries":
        return LaurentSeries({e: v * c for e, v in self.coeffs.items()}, self.variable, self.lo, self.hi)

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return self.scale(other)
        return series_multiply(self, other)

    def __rmul__(self, other):
        return self.scale(other)


def series_multiply(a: LaurentSeries, b: LaurentSeries, lo: Optional[int] = None) -> LaurentSeries:
    """Exact product on the guaranteed window ``[max(a.lo + b.hi, b.lo + a.hi), a.hi + b.hi]``.

    ``lo`` optionally truncates further (never extends).
    """
    a._check_var(b)
    bounds = []
    if a.lo is not None:
        bounds.append(a.lo + b.hi)
    if b.lo is not None:
        bounds.append(b.lo + a.hi)
    if lo is not None:
        bounds.append(lo)
    new_lo = max(bounds) if bounds else None
    out: Dict[int, object] = {}
    for ea, ca in a.coeffs.items():
        for eb, cb in b.coeffs.items():
            e = ea + eb
            if new_lo is not None and e < new_lo:
                continue
            v = ca * cb
            out[e] = out[e] + v if e in out else v
    return LaurentSeries(out, a.variable, lo=new_lo, hi=a.hi + b.hi)


def series_reciprocal(a: LaurentSeries, order: int) -> LaurentSeries:
    """``1/a`` computed down to exponent ``order`` (or as deep as ``a`` allows)."""
    m = a.top()
    if m is None:
        raise NonInvertibleError("reciprocal of the zero series")
    inv_lead = invert_coefficient(a.coeffs[m])
    depth = -m - order
    if a.lo is not None:
        depth = min(depth, m - a.lo)
    if depth < 0:
        depth = 0
    # b_{-m-i} = -inv_lead * sum_{j=1..i} a_{m-j} b_{-m-i+j}
    b: List[object] = [inv_lead]
    for i in range(1, depth + 1):
        acc = 0
        for j in range(1, i + 1):
            aj = a.coeffs.get(m - j)
            if aj is None:
                continue
            acc = acc + aj * b[i - j]
        b.append(-(acc * inv_lead) if not _is_zero(acc) else 0)
    coeffs = {-m - i: c for i, c in enumerate(b)}
    return LaurentSeries(coeffs, a.variable, lo=-m - depth, hi=-m)


def extract_coefficient(a: LaurentSeries, e: int):
    return a.coefficient(e)


def shift_substitute(a: LaurentSeries, j, order: int) -> LaurentSeries:
    """Substitute ``z -> z - j`` and re-expand in decreasing powers down to ``order``."""
    j = normalize(j) if isinstance(j, (int, Fraction)) else j
    if j == 0:
        return a if a.lo is None else a.truncate(max(order, a.lo))
    has_negative = any(e < 0 for e in a.coeffs)
    if a.lo is not None:
        new_lo = max(order, a.lo)
    elif has_negative:
        new_lo = order
    else:
        new_lo = None
    out: Dict[int, object] = {}

    def add(e, v):
        if new_lo is not None and e < new_lo:
            return
        out[e] = out[e] + v if e in out else v

    for e, c in a.coeffs.items():
        if e >= 0:
            # (z - j)^e
            for i in range(e + 1):
                add(i, c * (comb(e, i) * (-j) ** (e - i)))
        else:
            mneg = -e
            # (z - j)^(-m) = sum_s C(m+s-1, s) j^s z^(-m-s)
            s = 0
            while new_lo is None or -mneg - s >= new_lo:
                add(-mneg - s, c * (comb(mneg + s - 1, s) * j ** s))
                s += 1
    hi = max(a.hi, 0) if a.coeffs else a.hi
    return LaurentSeries(out, a.variable, lo=new_lo, hi=max(hi, max(out, default=hi)))


class PowerSeries:
    """Ascending power series ``sum c_e t**e``.

    ``prec`` is the number of known coefficients (exponents ``0..prec-1``);
    ``prec=None`` marks an exact polynomial.
    """

    __slots__ = ("coeffs", "prec")

    def __init__(self, coeffs, prec: Optional[int] = None):
        coeffs = list(coeffs)
        if prec is None:
            while coeffs and _is_zero(coeffs[-1]):
                coeffs.pop()
        else:
            coeffs = coeffs[:prec]
            coeffs += [0] * (prec - len(coeffs))
        self.coeffs = coeffs
        self.prec = prec

    @classmethod
    def one(cls, prec: Optional[int] = None) -> "PowerSeries":
        return cls([1], prec)

    def __repr__(self):
        return f"PowerSeries({self.coeffs!r}, prec={self.prec})"

    def at(self, prec: int) -> "PowerSeries":
        """Same series viewed with precision ``prec`` (may only shrink a finite one)."""
        if self.prec is not None and self.prec < prec:
            raise TruncationError(f"series known to precision {self.prec}, {prec} requested")
        return PowerSeries(self.coeffs, prec)

    def _get(self, e: int):
        return self.coeffs[e] if e < len(self.coeffs) else 0

    def coefficient(self, e: int):
        if e < 0:
            return 0
        if self.prec is not None and e >= self.prec:
            raise TruncationError(f"coefficient t^{e} requested but series precision is {self.prec}")
        return self._get(e)

    @staticmethod
    def _joint(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries([other])
        prec = self._joint(self.prec, other.prec)
        n = prec if prec is not None else max(len(self.coeffs), len(other.coeffs))
        return PowerSeries([self._get(i) + other._get(i) for i in range(n)], prec)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries([c * other for c in self.coeffs], self.prec)
        prec = self._joint(self.prec, other.prec)
        n = prec if prec is not None else len(self.coeffs) + len(other.coeffs)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return PowerSeries(out, prec)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PowerSeries":
        if n < 0:
            return self.reciprocal() ** (-n)
        result = PowerSeries.one(self.prec)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def reciprocal(self) -> "PowerSeries":
        if self.prec is None:
            raise TruncationError("reciprocal of an exact polynomial needs a precision; call .at(p) first")
        inv0 = invert_coefficient(self._get(0))
        out = [inv0]
        for i in range(1, self.prec):
            acc = 0
            for j in range(1, i + 1):
                a = self._get(j)
                if not _is_zero(a):
                    acc = acc + a * out[i - j]
            out.append(-(acc * inv0) if not _is_zero(acc) else 0)
        return PowerSeries(out, self.prec)

    def derivative(self) -> "PowerSeries":
        prec = None if self.prec is None else max(self.prec - 1, 0)
        return PowerSeries([self.coeffs[i] * i for i in range(1, len(self.coeffs))], prec)

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """``self(inner(t))``; ``inner`` must have zero constant term and finite precision."""
        if not _is_zero(inner._get(0)):
            raise ValueError("composition needs an inner series without constant term")
        prec = inner.prec if self.prec is None else self._joint(self.prec, inner.prec)
        if prec is None:
            raise TruncationError("composition of exact polynomials needs a precision")
        result = PowerSeries([0], prec)
        power = PowerSeries.one(prec)
        for i in range(prec):
            c = self._get(i)
            if not _is_zero(c):
                result = result + power * c
            power = power * inner
        return result

    def shift_down(self, k: int) -> "PowerSeries":
        """Divide by ``t**k``; the low ``k`` coefficients must vanish."""
        if any(not _is_zero(self._get(i)) for i in range(k)):
            raise ValueError("series is not divisible by t^k")
        prec = None if self.prec is None else self.prec - k
        return PowerSeries(self.coeffs[k:], prec)


def lagrange_modified(k: int, g: PowerSeries, phi: PowerSeries, n: int):
    """``a_n = [x^n] x^(-k) g(x) phi(x)^n`` via the modified Lagrange identity.

    With ``w = t * phi(w)`` one has ``sum_{n >= -k} a_n t^n = F(w) / (1 - t phi'(w))``
    where ``F(x) = x^(-k) g(x)``.  Writing ``w = t psi(t)`` the right side is
    ``t^(-k) psi^(-k) g(w) / (1 - t phi'(w))`` so ``a_n`` is the ``t^(n+k)``
    coefficient of an ordinary power series.
    """
    if n < -k:
        raise ValueError(f"a_n is only defined for n >= -k (got n={n}, k={k})")
    invert_coefficient(phi._get(0))
    invert_coefficient(g._get(0))
    prec = n + k + 1
    phi_w = phi.at(prec + 1)
    # fixed point w = t*phi(w); each pass fixes one more coefficient
    w = PowerSeries([0], prec + 1)
    for _ in range(prec + 1):
        w = PowerSeries([0] + phi_w.compose(w).coeffs, prec + 1)
    psi = w.shift_down(1)
    w = w.at(prec)
    dphi = phi.at(prec + 1).derivative()
    denom = PowerSeries.one(prec) - PowerSeries([0] + dphi.compose(w).coeffs, prec)
    body = (psi ** (-k)) * g.at(prec).compose(w) * denom.reciprocal()
    return body.coefficient(n + k)


def direct_coefficient(k: int, g: PowerSeries, phi: PowerSeries, n: int):
    """Brute-force ``[x^n] x^(-k) g(x) phi(x)^n`` by expanding the product."""
    if n < -k:
        raise ValueError("n must be >= -k")
    prec = n + k + 1
    return (g.at(prec) * phi.at(prec) ** n).coefficient(n + k)
