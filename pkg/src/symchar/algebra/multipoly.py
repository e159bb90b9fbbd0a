"""Sparse multivariate polynomials over the rationals.

A monomial is an immutable tuple of ``(name, exponent)`` pairs sorted by
:func:`var_key`; the empty tuple is the constant monomial.  Indeterminate
names carry a weight used by the grading of character polynomials:

* ``B~i`` (shifted Boolean), ``B^i`` (twisted Boolean), ``Ri`` (free) have
  weight ``i``;
* ``zeta`` and ``u`` have weight 1;
* everything else (``p``, ``q``, ...) has weight 0.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Mapping, Tuple

from .rational import format_rational, normalize, parse_rational

Monomial = Tuple[Tuple[str, int], ...]

_INDEXED_RE = re.compile(r"^(.*?)(\d+)$")
_CUMULANT_RE = re.compile(r"^(B~|B\^|R)(\d+)$")
_NAME_RE = re.compile(r"^[A-Za-z][A-Za-z_~^]*\d*$")


@lru_cache(maxsize=None)
def var_key(name: str):
    """Sort key putting ``B^2`` before ``B^10`` and grouping by prefix."""
    m = _INDEXED_RE.match(name)
    if m:
        return (m.group(1), int(m.group(2)), name)
    return (name, -1, name)


@lru_cache(maxsize=None)
def var_weight(name: str) -> int:
    m = _CUMULANT_RE.match(name)
    if m:
        return int(m.group(2))
    if name in ("zeta", "u"):
        return 1
    return 0


def monomial_weight(mono: Monomial) -> int:
    return sum(var_weight(n) * e for n, e in mono)


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def make_monomial(pairs: Iterable[Tuple[str, int]]) -> Monomial:
    acc: Dict[str, int] = {}
    for name, e in pairs:
        if e < 0:
            raise ValueError("negative exponent in polynomial monomial")
        if e:
            acc[name] = acc.get(name, 0) + e
    return tuple(sorted(acc.items(), key=lambda it: var_key(it[0])))


@lru_cache(maxsize=1 << 18)
def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for n, e in b:
        acc[n] = acc.get(n, 0) + e
    return tuple(sorted(acc.items(), key=lambda it: var_key(it[0])))


class MultiPoly:
    """Immutable polynomial ``sum c_m * m`` with exact rational ``c_m``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: Dict[Monomial, object] = {}
        if terms:
            for mono, c in terms.items():
                c = normalize(c)
                if c:
                    clean[mono] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, object]) -> "MultiPoly":
        # caller guarantees no zero and normalized coefficients
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def var(cls, name: str, exponent: int = 1) -> "MultiPoly":
        if not _NAME_RE.match(name):
            raise ValueError(f"invalid indeterminate name {name!r}")
        return cls._raw({((name, exponent),): 1} if exponent else {(): 1})

    @classmethod
    def const(cls, c) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def coerce(cls, x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        return cls.const(x)

    # -- inspection ------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant(self):
        return self.terms.get((), 0)

    def coefficient(self, mono) -> object:
        if isinstance(mono, MultiPoly):
            if len(mono.terms) != 1:
                raise ValueError("coefficient() needs a single monomial")
            (mono,) = mono.terms
        return self.terms.get(mono, 0)

    def variables(self):
        names = {n for mono in self.terms for n, _ in mono}
        return sorted(names, key=var_key)

    def degree(self) -> int:
        return max((monomial_degree(m) for m in self.terms), default=0)

    def max_weight(self) -> int:
        return max((monomial_weight(m) for m in self.terms), default=0)

    def weight_part(self, w: int) -> "MultiPoly":
        return MultiPoly._raw({m: c for m, c in self.terms.items() if monomial_weight(m) == w})

    def truncate_weight(self, cap: int) -> "MultiPoly":
        """Drop monomials of weight larger than ``cap``."""
        return MultiPoly._raw({m: c for m, c in self.terms.items() if monomial_weight(m) <= cap})

    def linear_part(self) -> "MultiPoly":
        return MultiPoly._raw({m: c for m, c in self.terms.items() if monomial_degree(m) == 1})

    def coefficients(self):
        return list(self.terms.values())

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                other = MultiPoly.const(other)
            else:
                return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = normalize(v)
            else:
                out.pop(m, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            if len(self.terms) < len(other.terms):
                a, b = self.terms, other.terms
            else:
                a, b = other.terms, self.terms
            out: Dict[Monomial, object] = {}
            for ma, ca in a.items():
                for mb, cb in b.items():
                    m = _mono_mul(ma, mb)
                    out[m] = out.get(m, 0) + ca * cb
            return MultiPoly(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return MultiPoly._raw({})
            other = normalize(other)
            return MultiPoly._raw({m: normalize(c * other) for m, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            if not other.is_constant() or not other:
                raise ZeroDivisionError("division by a non-constant or zero polynomial")
            other = other.constant()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return MultiPoly._raw({m: normalize(Fraction(c) / other) for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = MultiPoly.const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(): normalize(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- substitution ----------------------------------------------------

    def substitute(self, mapping: Mapping[str, object], weight_cap: int | None = None) -> "MultiPoly":
        """Replace indeterminates by polynomials or scalars.

        Names missing from ``mapping`` are kept.  With ``weight_cap`` every
        intermediate product is truncated to that weight, which is exact as
        long as each substituted value only raises weight.
        """
        powers: Dict[Tuple[str, int], MultiPoly] = {}

        def power(name: str, e: int) -> MultiPoly:
            key = (name, e)
            if key not in powers:
                base = MultiPoly.coerce(mapping[name])
                if e == 1:
                    val = base
                else:
                    val = power(name, e // 2) * power(name, e - e // 2)
                if weight_cap is not None:
                    val = val.truncate_weight(weight_cap)
                powers[key] = val
            return powers[key]

        acc: Dict[Monomial, object] = {}
        for mono, c in self.terms.items():
            kept = []
            term = MultiPoly.const(c)
            for name, e in mono:
                if name in mapping:
                    term = term * power(name, e)
                    if weight_cap is not None:
                        term = term.truncate_weight(weight_cap)
                else:
                    kept.append((name, e))
            if kept:
                term = term * MultiPoly._raw({tuple(kept): 1})
            for m, v in term.terms.items():
                acc[m] = acc.get(m, 0) + v
        out = MultiPoly(acc)
        if weight_cap is not None:
            out = out.truncate_weight(weight_cap)
        return out

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate to a scalar; every indeterminate must be assigned."""
        total = 0
        cache: Dict[Tuple[str, int], object] = {}
        for mono, c in self.terms.items():
            v = c
            for name, e in mono:
                if name not in values:
                    raise KeyError(f"no value given for {name}")
                key = (name, e)
                if key not in cache:
                    cache[key] = values[name] ** e
                v = v * cache[key]
            total = total + v
        if isinstance(total, (int, Fraction)):
            return normalize(total)
        return total

    # -- text form -------------------------------------------------------

    def sorted_terms(self):
        """Terms by descending weight, then ascending degree, then monomial."""

        def key(item):
            mono, _ = item
            return (
                -monomial_weight(mono),
                monomial_degree(mono),
                [(var_key(n), e) for n, e in mono],
            )

        return sorted(self.terms.items(), key=key)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (mono, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            mag = -c if neg else c
            body = "*".join(n if e == 1 else f"{n}**{e}" for n, e in mono)
            if not body:
                text = format_rational(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_rational(mag)}*{body}"
            if i == 0:
                parts.append(f"-{text}" if neg else text)
            else:
                parts.append(f"- {text}" if neg else f"+ {text}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        """Inverse of ``str()``; accepts "3/2*B^2**2*B^3 - R4 + 7"."""
        s = text.replace(" ", "").replace("**", "#")
        if not s:
            raise ValueError("empty polynomial text")
        if s[0] not in "+-":
            s = "+" + s
        pieces = re.findall(r"([+-])([^+-]+)", s)
        if "".join(sign + body for sign, body in pieces) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        acc: Dict[Monomial, object] = {}
        for sign, body in pieces:
            coef = Fraction(1)
            pairs = []
            for factor in body.split("*"):
                if not factor:
                    raise ValueError(f"empty factor in {text!r}")
                if factor[0].isdigit():
                    coef *= parse_rational(factor)
                    continue
                name, _, exp = factor.partition("#")
                if not _NAME_RE.match(name):
                    raise ValueError(f"bad indeterminate {name!r} in {text!r}")
                pairs.append((name, int(exp) if exp else 1))
            mono = make_monomial(pairs)
            if sign == "-":
                coef = -coef
            acc[mono] = acc.get(mono, 0) + coef
        return cls(acc)


def var(name: str) -> MultiPoly:
    return MultiPoly.var(name)
