"""Registry of reproducible acceptance checks.

Each check returns a :class:`CheckResult`; the CLI ``reproduce`` command
and the test-suite both run this registry.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, List, Tuple

from .algebra.multipoly import MultiPoly
from .algebra.series import PowerSeries, direct_coefficient, lagrange_modified
from .bounds import verify_cumulant_bounds, verify_main_bound, verify_sigma_bound
from .characters.frobenius import sigma_frobenius_polynomial, verify_nonnegativity
from .characters.mn import sigma_oracle
from .characters.stanley import stanley_polynomial
from .diagrams import diagrams, rect_boolean_cumulants, shifted_boolean_cumulants
from .kerov import (
    boolean_from_free,
    evaluate_free,
    free_from_boolean,
    kerov_graded,
    kerov_polynomial,
    linear_terms_check,
)
from .permutations import count_by_length, count_by_length_brute, cycle_product_table, cycle_types_up_to, normal_form_sweep

PRINTED_TWISTED = {
    (3, 2): "B^4*B^3 + 13*B^2*B^3 + B^2**2*B^3 + 6*B^5 + 18*B^3",
    (4, 2): (
        "B^5*B^3 + 32*B^2 + 80*B^4 + 8*B^6 + 17*B^3**2 + 40*B^2**2"
        " + 3*B^2*B^3**2 + 8*B^2**3 + 24*B^2*B^4"
    ),
}
PRINTED_FREE = {
    (3, 2): "R3*R4 - 5*R2*R3 - 6*R5 - 18*R3",
    (2, 2, 2): "R3**3 - 12*R3*R4 + 58*R3*R2 + 40*R5 + 80*R3 - 6*R3*R2**2",
}


@dataclass
class CheckResult:
    ok: bool
    detail: str
    data: Dict[str, object] = field(default_factory=dict)


@dataclass
class Criterion:
    number: int
    name: str
    tags: Tuple[str, ...]
    run: Callable[..., CheckResult]


REGISTRY: List[Criterion] = []


def criterion(number: int, name: str, *tags: str):
    def deco(fn):
        REGISTRY.append(Criterion(number, name, tags, fn))
        return fn

    return deco


@criterion(1, "printed polynomials", "characters", "kerov", "regression")
def printed_polynomials(**_) -> CheckResult:
    bad = []
    for parts, text in PRINTED_TWISTED.items():
        got = sigma_frobenius_polynomial(parts, 0).signed()
        if got != MultiPoly.parse(text):
            bad.append(f"twisted {parts}: {got}")
    for parts, text in PRINTED_FREE.items():
        got = kerov_polynomial(parts).total()
        if got != MultiPoly.parse(text):
            bad.append(f"free {parts}: {got}")
    return CheckResult(not bad, "; ".join(bad) or "4 polynomials match exactly")


@criterion(2, "oracle equivalence", "characters", "kerov", "oracle")
def oracle_equivalence(n_max: int = 10, **_) -> CheckResult:
    checked = 0
    bad = []
    for n in range(1, n_max + 1):
        for lam in diagrams(n):
            free = free_from_boolean(shifted_boolean_cumulants(lam, 0, 2 * n + 2), 2 * n + 2)
            cums = {z: shifted_boolean_cumulants(lam, z, 2 * n + 2) for z in (0, 2 * n)}
            for k in cycle_types_up_to(n):
                expect = sigma_oracle(lam, k)
                for z, cum in cums.items():
                    checked += 1
                    got = sigma_frobenius_polynomial(k, z).evaluate(cum)
                    if got != expect:
                        bad.append(f"{lam} {k} zeta={z}: {got} != {expect}")
                checked += 1
                got = evaluate_free(kerov_polynomial(k).total(), free)
                if got != expect:
                    bad.append(f"{lam} {k} free: {got} != {expect}")
    return CheckResult(not bad, f"{checked} evaluations, {len(bad)} mismatches" + (f": {bad[:3]}" if bad else ""))


@criterion(3, "rectangle identity", "characters", "stanley")
def rectangle_identity(K_max: int = 6, **_) -> CheckResult:
    p, q, zeta = MultiPoly.var("p"), MultiPoly.var("q"), MultiPoly.var("zeta")
    bad = []
    checked = 0
    for k in cycle_types_up_to(K_max):
        target = stanley_polynomial(k)
        for z in (0, max(k.parts), "zeta"):
            cp = sigma_frobenius_polynomial(k, z)
            zval = zeta if z == "zeta" else z
            cap = k.K + k.l
            subs = {}
            prefix = "B^" if z == 0 else "B~"
            for i in range(2, cap + 1):
                subs[f"{prefix}{i}"] = rect_boolean_cumulants(p, q, zval, i)
            if z == "zeta":
                subs["zeta"] = zeta
            got = cp.poly.substitute(subs)
            checked += 1
            if got != target:
                bad.append(f"{k} zeta={z}")
    return CheckResult(not bad, f"{checked} identities" + (f", failures: {bad}" if bad else " hold"))


@criterion(4, "positivity at zeta = max k", "characters", "positivity")
def positivity(weight_max: int = 8, **_) -> CheckResult:
    bad = []
    checked = 0
    for k in cycle_types_up_to(weight_max):
        if k.K + k.l > weight_max:
            continue
        rep = verify_nonnegativity(k, max(k.parts))
        checked += 1
        if not rep.ok:
            bad.append(f"{k}: {rep.offending}")
    return CheckResult(not bad, f"{checked} cycle types, {len(bad)} violations")


@criterion(5, "normal form of factorizations", "permutations")
def normal_form(K_max: int = 6, **_) -> CheckResult:
    total = 0
    bad = 0
    for K in range(1, K_max + 1):
        c, b = normal_form_sweep(K)
        total += c
        bad += b
    return CheckResult(bad == 0, f"{total} pairs checked, {bad} violations")


@criterion(6, "length counting lemma", "permutations")
def counting_lemma(n_max: int = 12, **_) -> CheckResult:
    problems = []
    for n in range(1, n_max + 1):
        counts = count_by_length(n)
        if sum(counts) != factorial(n):
            problems.append(f"n={n}: total")
        for i, c in enumerate(counts):
            if Fraction(c) > Fraction(n ** (2 * i), factorial(i)):
                problems.append(f"n={n}, i={i}")
        if n <= 8 and counts != count_by_length_brute(n):
            problems.append(f"n={n}: brute force disagrees")
    if count_by_length(4) != [1, 6, 11, 6]:
        problems.append("n=4 vector")
    return CheckResult(not problems, ", ".join(problems) or f"bounds hold for n <= {n_max}; n=4 -> (1, 6, 11, 6)")


@criterion(7, "linear terms", "kerov", "permutations")
def linear_terms(K_max: int = 7, **_) -> CheckResult:
    bad = []
    checked = 0
    for mu in cycle_types_up_to(K_max):
        rep = linear_terms_check(mu)
        checked += 1
        if not rep.ok:
            bad.append(f"{mu}: {rep.problems}")
    table = cycle_product_table((2, 2))
    if {b: c for b, c in enumerate(table) if c} != {1: 2, 3: 4}:
        bad.append(f"(2,2) table {table}")
    return CheckResult(not bad, f"{checked} cycle types" + (f", failures: {bad[:3]}" if bad else " agree"))


@criterion(8, "top-degree term", "kerov")
def top_term(weight_max: int = 10, **_) -> CheckResult:
    bad = []
    checked = 0
    for k in cycle_types_up_to(weight_max):
        if k.K + k.l > weight_max:
            continue
        expect = MultiPoly.const(1)
        for part in k.parts:
            expect = expect * MultiPoly.var(f"R{part + 1}")
        checked += 1
        if kerov_graded(k, 0) != expect:
            bad.append(str(k))
    return CheckResult(not bad, f"{checked} cycle types" + (f", failures: {bad}" if bad else " agree"))


@criterion(9, "bound sweeps", "bounds")
def bound_sweeps(sigma_n: int = 12, main_n: int = 10, cumulant_n: int = 12, workers: int = 1, **_) -> CheckResult:
    parts = []
    ok = True
    rep = verify_sigma_bound(sigma_n, workers=workers)
    ok &= rep.ok
    parts.append(f"sigma-bound n<={sigma_n}: {rep.checked} checked, {len(rep.violations)} violations")
    for C in (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)):
        rep = verify_main_bound(main_n, C, workers=workers)
        ok &= rep.ok
        parts.append(f"main C={C}: {rep.checked} checked, {len(rep.violations)} violations")
    rep = verify_cumulant_bounds(cumulant_n)
    ok &= rep.ok
    parts.append(f"cumulant n<={cumulant_n}: {rep.checked} checked, {len(rep.violations)} violations")
    return CheckResult(bool(ok), "; ".join(parts))


def _random_series(rng: random.Random, degree: int) -> PowerSeries:
    coeffs = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-5, 5) for _ in range(degree)]
    return PowerSeries(coeffs)


@criterion(10, "modified Lagrange lemma", "algebra")
def lagrange_lemma(trials: int = 40, seed: int = 20240607, **_) -> CheckResult:
    rng = random.Random(seed)
    bad = []
    checked = 0
    if lagrange_modified(0, PowerSeries([1]), PowerSeries([1, 2, 1]), 2) != 6:
        bad.append("central binomial")
    for _ in range(trials):
        g = _random_series(rng, rng.randint(0, 4))
        phi = _random_series(rng, rng.randint(0, 4))
        k = rng.randint(0, 10)
        for n in range(-min(k, 10), 11):
            checked += 1
            if lagrange_modified(k, g, phi, n) != direct_coefficient(k, g, phi, n):
                bad.append(f"k={k}, n={n}")
    return CheckResult(not bad, f"{checked} coefficients" + (f", failures: {bad[:3]}" if bad else " agree"))


@criterion(11, "free/Boolean round trip", "kerov", "algebra")
def round_trip(trials: int = 100, order: int = 10, seed: int = 7, **_) -> CheckResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        vec = {i: rng.randint(-20, 20) for i in range(2, order + 1)}
        there = boolean_from_free(free_from_boolean(vec, order).values, order).values
        back = free_from_boolean(boolean_from_free(vec, order).values, order).values
        if there != vec or back != vec:
            bad += 1
    return CheckResult(bad == 0, f"{trials} vectors through order {order}, {bad} failures")


def select(filter_text: str | None = None) -> List[Criterion]:
    if not filter_text:
        return list(REGISTRY)
    words = [w.strip().lower() for w in filter_text.split(",") if w.strip()]
    out = []
    for c in REGISTRY:
        hay = [str(c.number), c.name.lower(), *c.tags]
        if any(w in h for w in words for h in hay):
            out.append(c)
    return out


def run_all(filter_text: str | None = None, **options) -> List[Tuple[Criterion, CheckResult, float]]:
    results = []
    for c in sorted(select(filter_text), key=lambda c: c.number):
        t0 = time.perf_counter()
        try:
            res = c.run(**options)
        except Exception as exc:  # a crash is a failure, reported not raised
            res = CheckResult(False, f"error: {type(exc).__name__}: {exc}")
        results.append((c, res, time.perf_counter() - t0))
    return results
