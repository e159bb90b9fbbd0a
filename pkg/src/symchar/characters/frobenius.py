"""Normalized characters as polynomials in shifted Boolean cumulants.

The engine evaluates the nested residue

    (-1)^l k_1...k_l Sigma_k = [z_1^-1] ... [z_l^-1]
        prod_r H(z_r) H(z_r - 1) ... H(z_r - k_r + 1)
        * prod_{s<t} (z_s - z_t)(z_s - z_t + k_t - k_s)
                     / ((z_s - z_t - k_s)(z_s - z_t + k_t))

with parts sorted ascending and ``z_l`` extracted first.  Every variable is
shifted by ``zeta`` so that ``H`` becomes ``H(w + zeta) = w + zeta +
sum B~_i w^(1-i)``; the cross factors only depend on differences and are
expanded in descending powers of the later variable as

    1 + c * sum_{i>=0} ((w_s + k_t)^i - (w_s - k_s)^i) / w_t^(1+i),
    c = k_s k_t / (k_s + k_t).

To stay in integer arithmetic each cross factor is multiplied by
``k_s + k_t`` and the product of those scales is divided out at the end.

Intermediate data are dictionaries keyed by flat integer tuples: the
exponents of the remaining ``z`` variables followed by a dense cumulant
monomial ``(weight, zeta, -, B_2, ..., B_cap)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from operator import add
from typing import Dict, Tuple

from ..algebra.multipoly import MultiPoly, make_monomial
from ..algebra.ratfunc import RationalFunction, poly_mul, poly_shift
from ..algebra.rational import format_rational, normalize
from ..diagrams import (
    CumulantVector,
    as_diagram,
    cumulant_name,
    h_function,
    shifted_boolean_cumulants,
)
from ..errors import NonExactDivisionError
from ..permutations import CycleType, as_cycle_type

SYMBOLIC = "zeta"


def _unit(size: int) -> Tuple[int, ...]:
    return (0,) * size


def _bmono(size: int, slot: int, weight: int) -> Tuple[int, ...]:
    m = [0] * size
    m[0] = weight
    m[slot] = 1
    return tuple(m)


def _addmul(acc: dict, a: dict, b: dict, cap):
    for ka, va in a.items():
        for kb, vb in b.items():
            k = tuple(map(add, ka, kb))
            if cap is not None and k[0] > cap:
                continue
            acc[k] = acc.get(k, 0) + va * vb


def _series_mul(a: dict, b: dict, lo: int, cap) -> dict:
    out: dict = {}
    for ma, pa in a.items():
        for mb, pb in b.items():
            m = ma + mb
            if m < lo:
                continue
            _addmul(out.setdefault(m, {}), pa, pb, cap)
    return {m: {k: v for k, v in p.items() if v} for m, p in out.items()}


def _h_factor(j: int, lo: int, zeta, cap: int) -> dict:
    """``H(w + zeta - j)`` in descending powers of ``w`` down to ``w^lo``."""
    size = cap + 1
    one = _unit(size)
    series = {1: {one: 1}}
    const = {one: -j}
    if zeta == SYMBOLIC:
        const[_bmono(size, 1, 1)] = 1
    else:
        const[one] = const[one] + zeta
    series[0] = {k: v for k, v in const.items() if v}
    # (w - j)^(1-i) = sum_a C(i+a-2, a) j^a w^(1-i-a)
    for i in range(2, min(cap, 1 - lo) + 1):
        b = _bmono(size, i, i)
        for a in range(0, 2 - i - lo):
            if j == 0 and a > 0:
                break
            c = comb(i + a - 2, a) * j**a
            series.setdefault(1 - i - a, {})[b] = c
    return series


def _p_symbolic(k: int, lo: int, zeta, cap: int) -> dict:
    factor_lo = lo - (k - 1)
    p = _h_factor(0, factor_lo, zeta, cap)
    for j in range(1, k):
        p = _series_mul(p, _h_factor(j, factor_lo, zeta, cap), lo - (k - 1 - j), cap)
    return {m: v for m, v in p.items() if m >= lo}


def _p_numeric(h: RationalFunction, k: int, lo: int, zeta: int) -> dict:
    num, den = (1,), (1,)
    for j in range(k):
        num = poly_mul(num, poly_shift(h.num, zeta - j))
        den = poly_mul(den, poly_shift(h.den, zeta - j))
    series = RationalFunction(num, den).laurent(lo, "w")
    return {m: {(): normalize(c)} for m, c in series.coeffs.items() if m >= lo and c}


@lru_cache(maxsize=None)
def _cross_factor(ks: int, kt: int, cmax: int):
    """Scaled single cross factor: ``{c: {a: coeff of w_s^a w_t^-c}}``."""
    out = {0: {0: ks + kt}}
    for i in range(1, cmax):
        row = {}
        for a in range(i):
            v = ks * kt * comb(i, a) * (kt ** (i - a) - (-ks) ** (i - a))
            if v:
                row[a] = v
        if row:
            out[1 + i] = row
    return out


def _cross_product(parts, t: int, cmax: int) -> dict:
    """``prod_{s<t}`` scaled cross factors: ``{c: {z-exponent tuple: coeff}}``."""
    n = t - 1
    series = {0: {_unit(n): 1}}
    kt = parts[t - 1]
    for s in range(1, t):
        single = _cross_factor(parts[s - 1], kt, cmax)
        nxt: dict = {}
        for c1, p1 in series.items():
            for c2, row in single.items():
                c = c1 + c2
                if c > cmax:
                    continue
                acc = nxt.setdefault(c, {})
                for key, v1 in p1.items():
                    for a, v2 in row.items():
                        if a:
                            k2 = key[: s - 1] + (key[s - 1] + a,) + key[s:]
                        else:
                            k2 = key
                        acc[k2] = acc.get(k2, 0) + v1 * v2
        series = {c: {k: v for k, v in p.items() if v} for c, p in nxt.items()}
    return series


def _nested_residue(parts, provider, bsize: int, cap) -> Tuple[Dict[tuple, int], int]:
    """Run the extraction; returns (``{bmono: value}``, accumulated scale)."""
    l = len(parts)
    Q: Dict[tuple, object] = {_unit(l) + _unit(bsize): 1}
    scale = 1
    for t in range(l, 0, -1):
        k = parts[t - 1]
        groups: Dict[int, Dict[tuple, object]] = {}
        for key, c in Q.items():
            groups.setdefault(key[t - 1], {})[key[: t - 1] + key[t:]] = c
        if not groups:
            return {}, 1
        d = max(groups)
        P = provider(k, -1 - d)
        C = _cross_product(parts, t, k + d + 1)
        result: Dict[tuple, object] = {}
        for c, cz in C.items():
            T: Dict[tuple, object] = {}
            for e, qe in groups.items():
                pm = P.get(c - 1 - e)
                if not pm:
                    continue
                for rk, qc in qe.items():
                    zr, bm = rk[: t - 1], rk[t - 1 :]
                    for pb, pc in pm.items():
                        nb = tuple(map(add, bm, pb)) if bsize else ()
                        if cap is not None and nb[0] > cap:
                            continue
                        key = zr + nb
                        T[key] = T.get(key, 0) + qc * pc
            for tk, tc in T.items():
                if not tc:
                    continue
                zr, bm = tk[: t - 1], tk[t - 1 :]
                for czk, cc in cz.items():
                    key = tuple(map(add, zr, czk)) + bm
                    result[key] = result.get(key, 0) + tc * cc
        Q = {key: v for key, v in result.items() if v}
        scale *= prod(parts[s - 1] + k for s in range(1, t))
    return Q, scale


def _finish(value, denom: int):
    q = Fraction(value) / denom
    if q.denominator != 1:
        raise NonExactDivisionError(f"residue {value} is not divisible by {denom}")
    return q.numerator


@dataclass(frozen=True)
class CharacterPolynomial:
    """``Sigma_k`` as a polynomial in a cumulant basis.

    ``poly`` is ``Sigma_k`` itself; :meth:`signed` returns ``(-1)^l Sigma_k``,
    the normalization in which positivity statements are made.
    """

    cycle_type: CycleType
    basis: str
    zeta: object
    poly: MultiPoly

    def signed(self) -> MultiPoly:
        return -self.poly if self.cycle_type.l % 2 else self.poly

    def evaluate(self, cumulants: CumulantVector, zeta=None):
        values = {name: cumulants.values.get(int(name.lstrip("B~^R")), 0) for name in self._cumulant_names()}
        if self.zeta == SYMBOLIC:
            values["zeta"] = cumulants.zeta if zeta is None else zeta
        return self.poly.evaluate(values)

    def _cumulant_names(self):
        return sorted({n for mono in self.poly.terms for n, _ in mono if n != "zeta"})

    def to_json(self) -> dict:
        return {
            "cycles": list(self.cycle_type.parts),
            "basis": self.basis,
            "zeta": self.zeta if self.zeta == SYMBOLIC else format_rational(self.zeta),
            "sigma": str(self.poly),
            "signed_sigma": str(self.signed()),
        }


@lru_cache(maxsize=512)
def _frobenius_cached(parts: Tuple[int, ...], zeta) -> CharacterPolynomial:
    k = CycleType(parts)
    asc = k.ascending()
    cap = k.K + k.l
    bsize = cap + 1
    basis = "twisted" if zeta == 0 else "shifted"
    Q, scale = _nested_residue(asc, lambda kt, lo: _p_symbolic(kt, lo, zeta, cap), bsize, cap)
    denom = scale * (-1) ** k.l * prod(asc)
    terms = {}
    for bm, v in Q.items():
        pairs = []
        if bm[1]:
            pairs.append(("zeta", bm[1]))
        for i in range(2, bsize):
            if bm[i]:
                pairs.append((cumulant_name(basis, i), bm[i]))
        terms[make_monomial(pairs)] = _finish(v, denom)
    return CharacterPolynomial(k, basis, zeta, MultiPoly(terms))


def sigma_frobenius_polynomial(k, zeta=0) -> CharacterPolynomial:
    """``Sigma_k`` in shifted Boolean cumulants at ``zeta``.

    ``zeta`` is a non-negative integer, or the string ``"zeta"`` for a
    polynomial that also carries ``zeta`` as an indeterminate.  At
    ``zeta = 0`` the indeterminates are the twisted cumulants ``B^i``,
    otherwise ``B~i``.
    """
    k = as_cycle_type(k)
    if zeta != SYMBOLIC:
        if int(zeta) != zeta or zeta < 0:
            raise ValueError("zeta must be a non-negative integer or 'zeta'")
        zeta = int(zeta)
    return _frobenius_cached(k.parts, zeta)


def sigma_frobenius_numeric(lam, k, zeta: int = 0) -> int:
    """Run the nested residue directly on the diagram's ``H``; no polynomial."""
    k = as_cycle_type(k)
    lam = as_diagram(lam)
    h = h_function(lam)
    asc = k.ascending()
    Q, scale = _nested_residue(asc, lambda kt, lo: _p_numeric(h, kt, lo, zeta), 0, None)
    return _finish(Q.get((), 0), scale * (-1) ** k.l * prod(asc))


def sigma_evaluate(lam, k, zeta: int = 0) -> int:
    """Evaluate the character polynomial at the diagram's shifted cumulants."""
    k = as_cycle_type(k)
    cp = sigma_frobenius_polynomial(k, zeta)
    cum = shifted_boolean_cumulants(lam, zeta, max(k.K + k.l, 2))
    return cp.evaluate(cum)


@dataclass
class NonnegativityReport:
    cycle_type: CycleType
    zeta: int
    within_hypothesis: bool
    ok: bool
    offending: Dict[str, str]


def verify_nonnegativity(k, zeta: int) -> NonnegativityReport:
    """All coefficients of ``(-1)^l Sigma_k`` at ``zeta`` are non-negative integers."""
    k = as_cycle_type(k)
    signed = sigma_frobenius_polynomial(k, zeta).signed()
    bad = {}
    for mono, c in signed.terms.items():
        if not isinstance(c, int) or c < 0:
            bad[str(MultiPoly._raw({mono: 1}))] = format_rational(c)
    return NonnegativityReport(k, zeta, max(k.parts, default=0) <= zeta, not bad, bad)
