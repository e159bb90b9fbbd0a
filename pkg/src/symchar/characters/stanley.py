"""Stanley's formula for characters on rectangular diagrams."""

from __future__ import annotations

from functools import lru_cache

from ..algebra.multipoly import MultiPoly, make_monomial
from ..algebra.rational import normalize, to_rational
from ..permutations import DEFAULT_CAP, CycleType, as_cycle_type, kappa_pair_counts, representative

# Overall sign of the factorization sum.  Calibrated against the
# Murnaghan-Nakayama oracle on the 2x3 and 3x3 rectangles and frozen by a
# regression test: flipping it breaks the rectangle identity.
STANLEY_SIGN = 1


@lru_cache(maxsize=None)
def _stanley(parts, cap: int) -> MultiPoly:
    k = CycleType(parts)
    counts = kappa_pair_counts(representative(k), cap=cap)
    sign = STANLEY_SIGN * (-1) ** k.K
    terms = {}
    for (a, b), c in counts.items():
        mono = make_monomial([("p", a), ("q", b)])
        terms[mono] = terms.get(mono, 0) + sign * c * (-1) ** b
    return MultiPoly(terms)


def stanley_polynomial(k, cap: int | None = None) -> MultiPoly:
    """``(-1)^K sum_{s1 s2 = pi} p^kappa(s1) (-q)^kappa(s2)`` for ``pi`` of type ``k``.

    Evaluated at positive integers it gives ``Sigma_k`` on the rectangle with
    ``p`` rows of length ``q``.
    """
    k = as_cycle_type(k)
    return _stanley(k.parts, DEFAULT_CAP if cap is None else cap)


def stanley_evaluate(k, p, q, cap: int | None = None):
    """Evaluate at rationals, negative values included, or at ``MultiPoly`` values."""
    if not isinstance(p, MultiPoly):
        p = to_rational(p)
    if not isinstance(q, MultiPoly):
        q = to_rational(q)
    value = stanley_polynomial(k, cap).evaluate({"p": p, "q": q})
    return value if isinstance(value, MultiPoly) else normalize(value)
