"""Closed-form character bounds and exhaustive small-n verification.

Every verdict is exact: ``e`` and square roots enter only through rational
brackets, and a value is accepted only when it lies strictly on the safe
side of the whole bracket.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt
from typing import Dict, List, Sequence, Tuple

from .algebra.rational import format_rational, normalize, to_rational
from .characters.mn import normalized_character, sigma_oracle
from .diagrams import YoungDiagram, as_diagram, check_cumulant_bound, diagrams, partitions
from .permutations import CycleType, as_cycle_type, cycle_types_up_to

E_LO = Fraction(2718281828, 10**9)
E_HI = Fraction(2718281829, 10**9)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` of non-negative rationals."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("empty interval")

    @classmethod
    def point(cls, x) -> "Interval":
        x = Fraction(x)
        return cls(x, x)

    def __add__(self, other):
        other = _iv(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __mul__(self, other):
        other = _iv(other)
        if self.lo < 0 or other.lo < 0:
            raise ValueError("only non-negative intervals are supported")
        return Interval(self.lo * other.lo, self.hi * other.hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _iv(other)
        if other.lo <= 0:
            raise ZeroDivisionError("interval divisor must be positive")
        return Interval(self.lo / other.hi, self.hi / other.lo)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        return Interval(self.lo**k, self.hi**k)

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def to_json(self) -> dict:
        return {"lo": _decimal(self.lo), "hi": _decimal(self.hi, up=True)}

    def __str__(self):
        return f"[{_decimal(self.lo)}, {_decimal(self.hi, up=True)}]"


def _iv(x) -> Interval:
    return x if isinstance(x, Interval) else Interval.point(x)


def interval_max(a: Interval, b: Interval) -> Interval:
    return Interval(max(a.lo, b.lo), max(a.hi, b.hi))


def _decimal(x: Fraction, digits: int = 6, up: bool = False) -> str:
    """Scientific notation, rounded down (or up) in the last digit."""
    x = Fraction(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    x = abs(x)
    exp = len(str(x.numerator)) - len(str(x.denominator))
    if Fraction(10) ** exp > x:
        exp -= 1
    scaled = x / Fraction(10) ** (exp - digits + 1)
    m = scaled.numerator // scaled.denominator
    if up and m != scaled:
        m += 1
        if m >= 10**digits:
            m //= 10
            exp += 1
    s = str(m)
    return f"{sign}{s[0]}.{s[1:]}e{exp}"


@lru_cache(maxsize=None)
def e_bracket(digits: int = 9) -> Interval:
    """Rational bracket of ``e`` of width ``10^-digits``."""
    if digits <= 9:
        return Interval(E_LO, E_HI)
    scale = 10**digits
    total, term, k = Fraction(0), Fraction(1), 0
    while term * 2 > Fraction(1, scale * 10):
        total += term
        k += 1
        term /= k
    # tail after stopping is below 2 * term
    lo = total
    hi = total + 2 * term
    return Interval(Fraction(int(lo * scale), scale), Fraction(int(hi * scale) + 1, scale))


def sqrt_bracket(x, digits: int = 12) -> Interval:
    x = Fraction(x)
    scale = 10**digits
    num = x.numerator * x.denominator * scale * scale
    r = isqrt(num)
    lo = Fraction(r, x.denominator * scale)
    hi = Fraction(r if r * r == num else r + 1, x.denominator * scale)
    return Interval(lo, hi)


# -- Sigma bound -----------------------------------------------------------


def sigma_bound_value(A: int, k, digits: int = 9) -> Interval:
    """``(16 e^2 A)^(K+l)`` for ``K <= 8A``, ``(4eK)^K (4A)^l`` for ``K >= 8A``; max at ``K = 8A``."""
    k = as_cycle_type(k)
    if A < 1:
        raise ValueError("A must be at least 1")
    e = e_bracket(digits)
    K, l = k.K, k.l
    small = (16 * A * e * e) ** (K + l)
    large = (4 * K * e) ** K * Interval.point(4 * A) ** l
    if K < 8 * A:
        return small
    if K > 8 * A:
        return large
    return interval_max(small, large)


def sigma_bound_branch(A: int, k) -> str:
    K = as_cycle_type(k).K
    return "small" if K < 8 * A else "large" if K > 8 * A else "boundary"


@dataclass
class BoundReport:
    name: str
    scope: Dict[str, object]
    checked: int = 0
    violations: List[Dict[str, object]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "pass" if not self.violations else "fail"

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "BoundReport") -> "BoundReport":
        self.checked += other.checked
        self.violations.extend(other.violations)
        for note in other.notes:
            if note not in self.notes:
                self.notes.append(note)
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "scope": {k: _jsonable(v) for k, v in self.scope.items()},
            "checked": self.checked,
            "status": self.status,
            "violations": self.violations,
            "notes": self.notes,
        }


def _jsonable(v):
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _sigma_bound_for(lam: Tuple[int, ...]) -> BoundReport:
    lam = YoungDiagram(lam)
    rep = BoundReport("sigma-bound", {})
    A = lam.size_bound
    for k in cycle_types_up_to(lam.n):
        value = abs(sigma_oracle(lam, k))
        rep.checked += 1
        if max(k.parts) > 2 * A and value != 0:
            rep.violations.append({"lambda": str(lam), "cycles": str(k), "reason": "nonzero with k_i > 2A", "lhs": str(value)})
            continue
        bound = sigma_bound_value(A, k)
        if value < bound.lo:
            continue
        if value >= bound.hi:
            rep.violations.append({"lambda": str(lam), "cycles": str(k), "lhs": str(value), "rhs": bound.to_json()})
            continue
        tight = sigma_bound_value(A, k, digits=40)
        if not value < tight.lo:
            rep.violations.append(
                {"lambda": str(lam), "cycles": str(k), "lhs": str(value), "rhs": tight.to_json(), "reason": "marginal"}
            )
    return rep


def _run(fn, items: Sequence, workers: int) -> List:
    if workers and workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))
    return [fn(x) for x in items]


def verify_sigma_bound(n_max: int, workers: int = 1) -> BoundReport:
    """``|Sigma_k(lambda)|`` below the bound for all ``lambda |- n <= n_max`` and ``K <= n``.

    ``A`` is the larger of the row and column counts.  Also asserts
    ``Sigma_k = 0`` whenever some part exceeds ``2A``.
    """
    items = [p for n in range(1, n_max + 1) for p in partitions(n)]
    rep = BoundReport("sigma-bound", {"n_max": n_max, "A": "max(rows, cols)", "e_bracket": "9 digits, 40 on marginal"})
    for part in _run(_sigma_bound_for, items, workers):
        rep.merge(part)
    return rep


# -- Character bound on balanced diagrams -------------------------------


def _d_constant(C, e: Interval) -> Interval:
    C = Fraction(C)
    return interval_max((16 * C * e**3) ** 3, (32 * C * e**2) ** 2)


def character_bound_rhs(n: int, C, reduced_length: int, variant: str = "main", digits: int = 9) -> Interval:
    """Right-hand side of the character estimate for ``|pi| = reduced_length``.

    ``main``: ``(D max(1, |pi|^2/n) / sqrt n)^|pi|`` with
    ``D = max[(16 e^3 C)^3, (32 e^2 C)^2]``.
    ``almost``: ``(max[(16 e^3 C)^3, (32 e^2 C)^2 |pi|^2/n] / sqrt n)^|pi|``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    m = reduced_length
    if m == 0:
        return Interval.point(1)
    C = to_rational(C) if not isinstance(C, (int, Fraction)) else C
    e = e_bracket(digits)
    root = sqrt_bracket(n, digits + 3)
    ratio = Fraction(m * m, n)
    if variant == "main":
        base = _d_constant(C, e) * max(Fraction(1), ratio)
    elif variant == "almost":
        base = interval_max((16 * Fraction(C) * e**3) ** 3, (32 * Fraction(C) * e**2) ** 2 * ratio)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return (base / root) ** m


def balanced(lam: YoungDiagram, C) -> bool:
    """At most ``C sqrt(n)`` rows and columns, decided exactly."""
    C = Fraction(C)
    return lam.num_rows**2 <= C * C * lam.n and lam.num_cols**2 <= C * C * lam.n


def _classes(n: int):
    for p in partitions(n):
        yield CycleType(p)


def _main_for(args) -> BoundReport:
    lam, C = args
    lam = YoungDiagram(lam)
    n = lam.n
    rep = BoundReport("main", {})
    for mu in _classes(n):
        m = n - mu.l
        chi = abs(Fraction(normalized_character(lam, mu)))
        rep.checked += 1
        main = character_bound_rhs(n, C, m, "main")
        almost = character_bound_rhs(n, C, m, "almost")
        if m == 0:
            if not chi <= main.lo:
                rep.violations.append({"lambda": str(lam), "class": str(mu), "lhs": format_rational(chi), "rhs": "1", "form": "weak"})
        elif not chi < main.lo:
            rep.violations.append({"lambda": str(lam), "class": str(mu), "lhs": format_rational(chi), "rhs": main.to_json(), "form": "main"})
        if not chi <= almost.lo:
            rep.violations.append({"lambda": str(lam), "class": str(mu), "lhs": format_rational(chi), "rhs": almost.to_json(), "form": "almost"})
    return rep


def verify_main_bound(n_max: int, C, workers: int = 1) -> BoundReport:
    """Check the character estimate for every balanced diagram with ``n <= n_max``.

    The strict inequality is skipped for the identity class, where both sides
    equal 1; there the weak form is checked instead.  The ``almost`` form is
    checked with ``<=`` for every class.
    """
    C = to_rational(C) if isinstance(C, str) else normalize(Fraction(C))
    items = [(p, C) for n in range(1, n_max + 1) for p in partitions(n) if balanced(YoungDiagram(p), C)]
    rep = BoundReport("main", {"n_max": n_max, "C": C, "diagrams": len(items)})
    rep.notes.append("identity class exempt from strict inequality; checked as 1 <= 1")
    for part in _run(_main_for, items, workers):
        rep.merge(part)
    # the right-hand side decreases in n while |pi|^2 <= n
    for m in range(1, isqrt(n_max) + 1):
        prev = None
        for n in range(m * m, n_max + 1):
            cur = character_bound_rhs(n, C, m, "main")
            if prev is not None and not cur.hi <= prev.lo:
                rep.violations.append({"monotonicity": f"|pi|={m}, n={n}"})
            prev = cur
    return rep


# -- Corollary ---------------------------------------------------------------


def class_size(mu: CycleType, n: int) -> int:
    z = 1
    counts: Dict[int, int] = {}
    for p in mu.parts:
        counts[p] = counts.get(p, 0) + 1
    for p, c in counts.items():
        z *= p**c * factorial(c)
    return factorial(n) // z


def _ln_upper(x: int) -> Fraction:
    """Rational upper bound on ``ln x`` for a positive integer ``x``."""
    # ln x <= bit_length * ln 2 and ln 2 < 0.6932
    return Fraction(x.bit_length()) * Fraction(6932, 10000) if x > 1 else Fraction(0)


@dataclass
class CorollaryReport:
    diagram: YoungDiagram
    A: object
    classes: List[str]
    total: object
    log_main_bound: Interval
    tail_bound: Interval
    within_bound: bool
    status: str = "informational"

    def to_json(self) -> dict:
        return {
            "lambda": str(self.diagram),
            "A": format_rational(self.A),
            "classes": self.classes,
            "sum": format_rational(self.total),
            "log_of_exp_term": self.log_main_bound.to_json(),
            "geometric_tail": self.tail_bound.to_json(),
            "sum_within_proof_bound": self.within_bound,
            "status": self.status,
        }


def verify_corollary_sum(lam, A) -> CorollaryReport:
    """``sum_{|pi| <= A n^(4/7)} |chi(pi)|^4`` over permutations, against the proof-side bound.

    The condition on ``|pi|`` is decided as ``|pi|^7 <= A^7 n^4``.  ``C`` is the
    smallest admissible constant ``max(rows, cols)/sqrt(n)``.  The bound is
    ``exp[(16 e^3 C)^12]`` plus the geometric tail
    ``sum_{i <= A n^(4/7)} (e (32 e^2 C)^8 i^7 / n^4)^i``; both are reported.
    """
    lam = as_diagram(lam)
    A = to_rational(A)
    if A < 0:
        raise ValueError("A must be non-negative")
    n = lam.n
    total = Fraction(0)
    classes = []
    for mu in _classes(n):
        m = n - mu.l
        if Fraction(m) ** 7 <= Fraction(A) ** 7 * n**4:
            chi = Fraction(normalized_character(lam, mu))
            total += class_size(mu, n) * chi**4
            classes.append(str(mu))
    e = e_bracket()
    big = lam.size_bound
    c_sq = Fraction(big * big, n)  # C^2
    log_main = Interval.point(16**12) * e ** 36 * Interval.point(c_sq**6)
    tail = Interval.point(0)
    i = 1
    while Fraction(i) ** 7 <= Fraction(A) ** 7 * n**4:
        term = e * Interval.point(32**8) * e ** 16 * Interval.point(c_sq**4) * Fraction(i**7, n**4)
        tail = tail + term**i
        i += 1
    tail = tail + 1  # the i = 0 term
    ln_sum = _ln_upper(int(total) + 1)
    within = ln_sum < log_main.lo
    return CorollaryReport(lam, normalize(A), classes, normalize(total), log_main, tail, within)


# -- Cumulant bound sweep ----------------------------------------------------


def verify_cumulant_bounds(n_max: int, order: int = 12) -> BoundReport:
    """``check_cumulant_bound`` for every ``lambda |- n <= n_max`` with ``zeta in {0, 2A}``."""
    rep = BoundReport("cumulant-bound", {"n_max": n_max, "order": order, "zeta": "0 and 2A"})
    for n in range(1, n_max + 1):
        for lam in diagrams(n):
            A = lam.size_bound
            for zeta in (0, 2 * A):
                r = check_cumulant_bound(lam, A, zeta, order)
                rep.checked += 1
                for k, value, bound in r.violations:
                    rep.violations.append(
                        {"lambda": str(lam), "zeta": zeta, "k": k, "lhs": format_rational(value), "rhs": format_rational(bound)}
                    )
    return rep


def verify_moment_bounds(n_max: int, order: int = 12) -> BoundReport:
    """``|M_k| <= (A + zeta)^k`` for moments of the shifted transition measure."""
    from .diagrams import transition_measure

    rep = BoundReport("moment-bound", {"n_max": n_max, "order": order})
    for n in range(0, n_max + 1):
        for lam in diagrams(n):
            A = max(lam.size_bound, 1)
            tm = transition_measure(lam)
            for zeta in (0, 2 * A):
                for k in range(1, order + 1):
                    rep.checked += 1
                    if abs(Fraction(tm.moment(k, zeta))) > (A + zeta) ** k:
                        rep.violations.append({"lambda": str(lam), "zeta": zeta, "k": k})
    return rep
