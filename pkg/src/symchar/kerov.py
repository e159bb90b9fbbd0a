"""Free cumulants and generalized Kerov polynomials.

Twisted Boolean cumulants ``B^i`` are the coefficients of
``H(z) = z + sum B^i z^(1-i)``, so ``phi(z) = z H(1/z) = 1 + sum B^i z^i``.
Free cumulants come from Lagrange inversion:

    R_{k+1} = -(1/k) [z^(k+1)] phi(z)^k,
    B^_{k+1} = -(1/k) [z^(k+1)] R(z)^k,   R(z) = 1 + sum_{i>=2} R_i z^i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from operator import add
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .algebra.multipoly import MultiPoly, make_monomial, monomial_weight
from .algebra.rational import format_rational, normalize
from .characters.frobenius import sigma_frobenius_polynomial
from .diagrams import CumulantVector
from .errors import CapExceededError, NonExactDivisionError
from .permutations import CycleType, as_cycle_type, cycle_product_table, cycle_types_up_to

KEROV_CAP = 7


# -- truncated power series over an arbitrary coefficient ring ------------


def _norm(c):
    return c if isinstance(c, MultiPoly) else normalize(c)


def _mul_trunc(a: List, b: List, order: int) -> List:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if not x or i > order:
            continue
        for j in range(0, order + 1 - i):
            y = b[j] if j < len(b) else 0
            if y:
                out[i + j] = out[i + j] + x * y
    return out


def _series_from(values: Mapping[int, object], order: int) -> List:
    s = [0] * (order + 1)
    s[0] = 1
    for i, v in values.items():
        if 2 <= i <= order:
            s[i] = v
    return s


def _lagrange_convert(values: Mapping[int, object], order: int) -> Dict[int, object]:
    """``c_{k+1} = -(1/k) [z^(k+1)] S(z)^k`` with ``S = 1 + sum values_i z^i``."""
    s = _series_from(values, order)
    out = {}
    power = [1] + [0] * order
    for k in range(1, order):
        power = _mul_trunc(power, s, order)
        c = power[k + 1]
        out[k + 1] = _norm(-c * Fraction(1, k)) if not isinstance(c, MultiPoly) else -c / k
    return out


def _values(vec) -> Dict[int, object]:
    if isinstance(vec, CumulantVector):
        return dict(vec.values)
    if isinstance(vec, Mapping):
        return {int(i): v for i, v in vec.items()}
    return {i + 2: v for i, v in enumerate(vec)}


def free_from_boolean(B, order: int | None = None) -> CumulantVector:
    """Free cumulants ``R_2..R_order`` from twisted Boolean cumulants."""
    if isinstance(B, CumulantVector) and B.basis != "twisted":
        raise ValueError("free_from_boolean expects twisted Boolean cumulants (zeta = 0)")
    vals = _values(B)
    order = max(vals, default=2) if order is None else order
    if order < 2:
        raise ValueError("order must be at least 2")
    return CumulantVector("free", _lagrange_convert(vals, order))


def boolean_from_free(R, order: int | None = None) -> CumulantVector:
    """Twisted Boolean cumulants ``B^2..B^order`` from free cumulants."""
    if isinstance(R, CumulantVector) and R.basis != "free":
        raise ValueError("boolean_from_free expects free cumulants")
    vals = _values(R)
    order = max(vals, default=2) if order is None else order
    if order < 2:
        raise ValueError("order must be at least 2")
    return CumulantVector("twisted", _lagrange_convert(vals, order))


@lru_cache(maxsize=None)
def boolean_in_free(order: int) -> Tuple[MultiPoly, ...]:
    """``(B^2(R), ..., B^order(R))`` as polynomials in ``R2, R3, ...``."""
    symbolic = {i: MultiPoly.var(f"R{i}") for i in range(2, order + 1)}
    conv = boolean_from_free(symbolic, order).values
    return tuple(conv[i] for i in range(2, order + 1))


# -- Kerov polynomials -----------------------------------------------------


@dataclass
class GradedKerovPolynomial:
    cycle_type: CycleType
    terms_by_grade: Dict[int, MultiPoly]

    @property
    def top_weight(self) -> int:
        return self.cycle_type.K + self.cycle_type.l

    def grade(self, two_n: int) -> MultiPoly:
        if two_n % 2 or not 0 <= two_n <= self.top_weight:
            raise ValueError(f"grade must be even and within [0, {self.top_weight}], got {two_n}")
        return self.terms_by_grade.get(two_n, MultiPoly())

    def total(self) -> MultiPoly:
        out = MultiPoly()
        for p in self.terms_by_grade.values():
            out = out + p
        return out

    def to_json(self) -> dict:
        return {
            "cycles": list(self.cycle_type.parts),
            "basis": "free",
            "sigma": str(self.total()),
            "grades": {str(g): str(p) for g, p in sorted(self.terms_by_grade.items())},
        }


def _graded(k: CycleType, poly: MultiPoly) -> GradedKerovPolynomial:
    top = k.K + k.l
    grades: Dict[int, Dict] = {}
    for mono, c in poly.terms.items():
        g = top - monomial_weight(mono)
        if g < 0 or g % 2:
            raise ArithmeticError(f"monomial of unexpected weight in Sigma_{k}: {mono}")
        grades.setdefault(g, {})[mono] = c
    return GradedKerovPolynomial(k, {g: MultiPoly(t) for g, t in sorted(grades.items())})


@lru_cache(maxsize=None)
def _kerov_cached(parts: Tuple[int, ...]) -> GradedKerovPolynomial:
    k = CycleType(parts)
    cap = k.K + k.l
    boolean = sigma_frobenius_polynomial(k, 0).poly
    subs = {f"B^{i}": b for i, b in enumerate(boolean_in_free(cap), start=2)}
    return _graded(k, boolean.substitute(subs, weight_cap=cap))


def kerov_polynomial(k) -> GradedKerovPolynomial:
    """``Sigma_k`` in free cumulants, by substituting ``B^i(R)`` into the twisted polynomial."""
    return _kerov_cached(as_cycle_type(k).parts)


def kerov_graded(k, two_n: int) -> MultiPoly:
    """Terms of weight ``K + l - 2n``."""
    return kerov_polynomial(k).grade(two_n)


def evaluate_free(poly: MultiPoly, R: CumulantVector):
    return poly.evaluate({f"R{i}": R[i] for i in range(2, R.order + 1)} | _zeros(poly, R))


def _zeros(poly: MultiPoly, R: CumulantVector):
    return {n: 0 for mono in poly.terms for n, _ in mono if int(n[1:]) > R.order}


# -- second engine: the Phi(x, u) residue ------------------------------------
#
# Phi(x, v) = (1 - v x) phi(x / (1 - v x)) = sum_m phi_m x^m (1 - v x)^(1-m).
# Keys are flat tuples: exponents of z_1..z_t (possibly negative), then the
# dense monomial (weight, u, -, R_2, ..., R_cap) with weight = R-weight + u-degree.


def _phi_coeffs(cap: int, size: int) -> Dict[int, Dict[tuple, int]]:
    """Dense form of ``phi_m(R) = B^m(R)`` for ``m <= cap``."""
    out = {0: {(0,) * size: 1}}
    for m, poly in enumerate(boolean_in_free(cap), start=2):
        dense = {}
        for mono, c in poly.terms.items():
            key = [0] * size
            key[0] = m
            for name, e in mono:
                key[int(name[1:])] += e
            if isinstance(c, Fraction):
                raise NonExactDivisionError("phi coefficient is not integral")
            dense[tuple(key)] = c
        out[m] = dense
    return out


def _phi_product(k: int, hi: int, cap: int, size: int, phi) -> Dict[int, Dict[tuple, int]]:
    """``prod_{j<k} Phi(z, j u)`` as ``{exponent: dense poly}`` up to ``z^hi``."""

    def factor(j):
        f: Dict[int, Dict[tuple, int]] = {0: {(0,) * size: 1}}
        if j:
            ukey = [0] * size
            ukey[0] = ukey[1] = 1
            f[1] = {tuple(ukey): -j}
        for m, pm in phi.items():
            if m < 2:
                continue
            for a in range(0, hi - m + 1):
                if a and not j:
                    break
                c = comb(m + a - 2, a) * j**a
                for key, v in pm.items():
                    nk = list(key)
                    nk[0] += a
                    nk[1] += a
                    if nk[0] > cap:
                        continue
                    row = f.setdefault(m + a, {})
                    t = tuple(nk)
                    row[t] = row.get(t, 0) + c * v
        return f

    result = factor(0)
    for j in range(1, k):
        fj = factor(j)
        nxt: Dict[int, Dict[tuple, int]] = {}
        for e1, p1 in result.items():
            for e2, p2 in fj.items():
                e = e1 + e2
                if e > hi:
                    continue
                acc = nxt.setdefault(e, {})
                for a, va in p1.items():
                    for b, vb in p2.items():
                        t = tuple(map(add, a, b))
                        if t[0] > cap:
                            continue
                        acc[t] = acc.get(t, 0) + va * vb
        result = nxt
    return result


def _u_cross_product(parts, t: int, cmax: int, size: int):
    """Scaled ``prod_{s<t}`` cross factors in ascending powers of ``z_t``.

    Each factor is ``(k_s + k_t) + k_s k_t sum_{i>=1} sum_a C(i,a)(k_t^a - (-k_s)^a)
    u^(1+a) z_s^(a-i) z_t^(1+i)``.
    """
    n = t - 1
    kt = parts[t - 1]
    series = {0: {(0,) * n + (0,) * size: 1}}
    for s in range(1, t):
        ks = parts[s - 1]
        single: Dict[int, Dict[Tuple[int, int], int]] = {0: {(0, 0): ks + kt}}
        for i in range(1, cmax):
            row = {}
            for a in range(1, i + 1):
                v = ks * kt * comb(i, a) * (kt**a - (-ks) ** a)
                if v:
                    row[(a - i, 1 + a)] = v
            if row:
                single[1 + i] = row
        nxt: Dict[int, Dict[tuple, int]] = {}
        for c1, p1 in series.items():
            for c2, row in single.items():
                c = c1 + c2
                if c > cmax:
                    continue
                acc = nxt.setdefault(c, {})
                for key, v1 in p1.items():
                    for (dz, du), v2 in row.items():
                        nk = list(key)
                        nk[s - 1] += dz
                        nk[n] += du
                        nk[n + 1] += du
                        t2 = tuple(nk)
                        acc[t2] = acc.get(t2, 0) + v1 * v2
        series = {c: {kk: v for kk, v in p.items() if v} for c, p in nxt.items()}
    return series


@lru_cache(maxsize=None)
def _phi_engine(parts: Tuple[int, ...]) -> Dict[int, MultiPoly]:
    k = CycleType(parts)
    asc = k.ascending()
    l = k.l
    cap = k.K + k.l
    size = cap + 1
    phi = _phi_coeffs(cap, size)
    Q: Dict[tuple, int] = {(0,) * l + (0,) * size: 1}
    scale = 1
    for t in range(l, 0, -1):
        kt = asc[t - 1]
        groups: Dict[int, Dict[tuple, int]] = {}
        for key, c in Q.items():
            groups.setdefault(key[t - 1], {})[key[: t - 1] + key[t:]] = c
        if not groups:
            break
        dmin = min(groups)  # z_t exponents in Q are <= 0
        target = kt + 1
        hi = target - dmin
        P = _phi_product(kt, hi, cap, size, phi)
        C = _u_cross_product(asc, t, hi, size)
        result: Dict[tuple, int] = {}
        for c, cz in C.items():
            T: Dict[tuple, int] = {}
            for e, qe in groups.items():
                pm = P.get(target - c - e)
                if not pm:
                    continue
                for rk, qc in qe.items():
                    zr, bm = rk[: t - 1], rk[t - 1 :]
                    for pb, pc in pm.items():
                        nb = tuple(map(add, bm, pb))
                        if nb[0] > cap:
                            continue
                        key = zr + nb
                        T[key] = T.get(key, 0) + qc * pc
            for tk, tc in T.items():
                if not tc:
                    continue
                for czk, cc in cz.items():
                    key = tuple(map(add, tk, czk))
                    if key[t - 1] > cap:
                        continue
                    result[key] = result.get(key, 0) + tc * cc
        Q = {key: v for key, v in result.items() if v}
        scale *= prod(asc[s - 1] + kt for s in range(1, t))
    denom = scale * (-1) ** l * prod(asc)
    grades: Dict[int, Dict] = {}
    for bm, v in Q.items():
        q = Fraction(v, denom)
        if q.denominator != 1:
            raise NonExactDivisionError(f"Phi residue {v} not divisible by {denom}")
        if bm[0] != cap:
            raise ArithmeticError("grading violated in the Phi engine")
        pairs = [(f"R{i}", bm[i]) for i in range(2, size) if bm[i]]
        grades.setdefault(bm[1], {})[make_monomial(pairs)] = q.numerator
    return {g: MultiPoly(t) for g, t in sorted(grades.items())}


def kerov_graded_phi(k, two_n: int | None = None):
    """Kerov polynomial from the ``Phi(x, u)`` residue, graded by the power of ``u``."""
    k = as_cycle_type(k)
    grades = _phi_engine(k.parts)
    if two_n is None:
        return GradedKerovPolynomial(k, dict(grades))
    return grades.get(two_n, MultiPoly())


# -- identity cumulants, linear terms -------------------------------------


def set_partitions(items: Sequence) -> Iterable[List[List]]:
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def identity_cumulant(types) -> MultiPoly:
    """``k^id(Sigma_{i_1}, ..., Sigma_{i_l})`` in free cumulants.

    ``sum_nu (-1)^(m-1) (m-1)! prod_{B in nu} Sigma_{parts in B}`` over set
    partitions ``nu`` with ``m`` blocks.
    """
    parts = list(as_cycle_type(types).parts) if not isinstance(types, (list, tuple)) else [
        p for t in types for p in (as_cycle_type(t).parts)
    ]
    total = MultiPoly()
    for nu in set_partitions(range(len(parts))):
        m = len(nu)
        term = MultiPoly.const((-1) ** (m - 1) * factorial(m - 1))
        for block in nu:
            term = term * kerov_polynomial([parts[i] for i in block]).total()
        total = total + term
    return total


@dataclass
class LinearTermsReport:
    mu: CycleType
    ok: bool
    coefficients: Dict[int, object]
    counts: Dict[int, int]
    linear_mass: object
    expected_mass: int
    problems: List[str] = field(default_factory=list)


def linear_terms_check(mu, cap: int = KEROV_CAP) -> LinearTermsReport:
    """Compare linear coefficients of ``(-1)^(l+1) k^id`` with cycle-product counts."""
    mu = as_cycle_type(mu)
    if mu.K > cap:
        raise CapExceededError(f"K={mu.K} above the cap {cap}")
    signed = identity_cumulant(mu)
    if (mu.l + 1) % 2:
        signed = -signed
    linear = signed.linear_part()
    coeffs: Dict[int, object] = {}
    for mono, c in linear.terms.items():
        (name, _), = mono
        coeffs[int(name[1:]) - 1] = c
    table = cycle_product_table(mu)
    counts = {b: c for b, c in enumerate(table) if c}
    problems = []
    for b in sorted(set(coeffs) | set(counts)):
        if coeffs.get(b, 0) != counts.get(b, 0):
            problems.append(f"b={b}: coefficient {coeffs.get(b, 0)} vs count {counts.get(b, 0)}")
    for b in coeffs:
        if b > mu.K:
            problems.append(f"non-zero coefficient beyond K at b={b}")
    mass = normalize(sum(Fraction(c) for c in coeffs.values()))
    expected = factorial(mu.K - 1)
    if mass != expected:
        problems.append(f"linear mass {mass} != {expected}")
    return LinearTermsReport(mu, not problems, coeffs, counts, mass, expected, problems)


# -- the l = 2, equal parts closed form --------------------------------------


def rr_weight_k_terms(r: int, R: Mapping[int, object] | None = None) -> MultiPoly:
    """``(1/r^2) [x^(r+1)][y^(r+1)] C(x)^-1 C(y)^-1 x^2 y^2 / (x R(y) - y R(x))^2``.

    ``C(x)^-1 = 1 - sum (i-1) R_i x^i``.  Writing ``x R(y) - y R(x) = (x - y)(1 - S)``
    with ``S = x y sum_i R_i h_{i-2}(x, y)``, the factor ``(1 - S)^-2`` is a power
    series and ``(x - y)^-2`` is expanded for ``|y| < |x|``, matching the order in
    which the cross factors are expanded elsewhere.  Only finitely many terms
    reach ``[x^(r+1)][y^(r+1)]`` so the result is exact.  ``R`` optionally maps
    indices to values (missing indices are zero); by default all ``R_i`` are
    indeterminates.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    N = r + 1

    def rval(i):
        if R is None:
            return MultiPoly.var(f"R{i}")
        return MultiPoly.coerce(R.get(i, 0))

    # bivariate polynomials: {(ex, ey): coeff}, truncated at ex <= N + r, ey <= N
    XMAX, YMAX = N + r, N

    def bmul(a, b):
        out = {}
        for (i1, j1), c1 in a.items():
            for (i2, j2), c2 in b.items():
                i, j = i1 + i2, j1 + j2
                if i > XMAX or j > YMAX:
                    continue
                v = c1 * c2
                out[(i, j)] = out.get((i, j), 0) + v
        return {k: v for k, v in out.items() if v}

    S = {}
    for i in range(2, XMAX + YMAX + 1):
        ri = rval(i)
        if not ri:
            continue
        for a in range(i - 1):  # h_{i-2}(x, y) = sum x^a y^(i-2-a)
            key = (1 + a, 1 + i - 2 - a)
            if key[0] <= XMAX and key[1] <= YMAX:
                S[key] = S.get(key, 0) + ri
    # (1 - S)^-2 = sum (m+1) S^m ; S has total degree >= 2 per factor
    inv2 = {(0, 0): MultiPoly.const(1)}
    power = {(0, 0): MultiPoly.const(1)}
    for m in range(1, (XMAX + YMAX) // 2 + 1):
        power = bmul(power, S)
        if not power:
            break
        for key, v in power.items():
            inv2[key] = inv2.get(key, 0) + (m + 1) * v
    cx = {(0, 0): MultiPoly.const(1)}
    cy = {(0, 0): MultiPoly.const(1)}
    for i in range(2, XMAX + 1):
        v = rval(i) * (i - 1)
        if v:
            cx[(i, 0)] = -v
    for i in range(2, YMAX + 1):
        v = rval(i) * (i - 1)
        if v:
            cy[(0, i)] = -v
    body = bmul(bmul(cx, cy), inv2)
    # x^2 y^2 (x - y)^-2 = y^2 sum_a (a+1) y^a x^-a ; need total x^N y^N
    total = MultiPoly()
    for a in range(0, N - 1):
        c = body.get((N + a, N - 2 - a))
        if c:
            total = total + c * (a + 1)
    return total / (r * r)


def rr_candidate_slices(r: int) -> Dict[str, MultiPoly]:
    """Graded pieces of ``Sigma_r Sigma_r - Sigma_{r,r}`` that the closed form may match."""
    single = kerov_polynomial((r,)).total()
    cross = single * single - kerov_polynomial((r, r)).total()
    return {
        "weight_2r_of_cross_term": cross.weight_part(2 * r),
        "weight_2r_of_sigma_rr": kerov_polynomial((r, r)).total().weight_part(2 * r),
    }


# -- positivity scan -------------------------------------------------------


@dataclass
class ConjectureScan:
    kmax: int
    checked_free: int
    checked_twisted: int
    free_violations: Dict[str, Dict[str, str]]
    twisted_violations: Dict[str, Dict[str, str]]

    @property
    def status(self) -> str:
        return "no violation" if not (self.free_violations or self.twisted_violations) else "counterexample candidates"

    def to_json(self) -> dict:
        return {
            "kmax": self.kmax,
            "checked_free": self.checked_free,
            "checked_twisted": self.checked_twisted,
            "status": self.status,
            "free_violations": self.free_violations,
            "twisted_violations": self.twisted_violations,
        }


def _negatives(poly: MultiPoly) -> Dict[str, str]:
    return {
        str(MultiPoly._raw({mono: 1})): format_rational(c)
        for mono, c in poly.sorted_terms()
        if c < 0
    }


def conjecture_scan(kmax: int) -> ConjectureScan:
    """Look for negative coefficients in ``(-1)^(l+1) k^id`` (free) and ``(-1)^l Sigma`` (twisted)."""
    free_bad, tw_bad = {}, {}
    nf = nt = 0
    for k in cycle_types_up_to(kmax):
        if k.K + k.l > kmax:
            continue
        kid = identity_cumulant(k)
        if (k.l + 1) % 2:
            kid = -kid
        nf += 1
        neg = _negatives(kid)
        if neg:
            free_bad[str(k)] = neg
        nt += 1
        neg = _negatives(sigma_frobenius_polynomial(k, 0).signed())
        if neg:
            tw_bad[str(k)] = neg
    return ConjectureScan(kmax, nf, nt, free_bad, tw_bad)
