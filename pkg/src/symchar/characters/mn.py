"""Murnaghan-Nakayama oracle and normalized characters."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Tuple

from ..algebra.rational import normalize
from ..diagrams import as_diagram
from ..errors import ShapeError
from ..permutations import as_cycle_type


@lru_cache(maxsize=None)
def _mn(lam: Tuple[int, ...], mu: Tuple[int, ...]) -> int:
    # lam, mu are partitions of the same size; mu is weakly decreasing
    if not mu:
        return 1
    m, rest = mu[0], mu[1:]
    r = len(lam)
    beta = [lam[i] + r - 1 - i for i in range(r)]
    present = set(beta)
    total = 0
    for i, b in enumerate(beta):
        nb = b - m
        if nb < 0 or nb in present:
            continue
        # height of the rim hook = number of beads jumped over
        sign = -1 if sum(1 for x in beta if nb < x < b) % 2 else 1
        new = sorted((x if x != b else nb for x in beta), reverse=True)
        shape = tuple(new[j] - (r - 1 - j) for j in range(r))
        shape = tuple(x for x in shape if x > 0)
        total += sign * _mn(shape, rest)
    return total


def mn_character(lam, mu) -> int:
    """Unnormalized character value ``chi^lam`` on the class of type ``mu``."""
    lam = as_diagram(lam)
    mu = as_cycle_type(mu)
    if lam.n != mu.K:
        raise ShapeError(f"size mismatch: |lambda|={lam.n}, |mu|={mu.K}")
    return _mn(lam.rows, mu.parts)


def dimension(lam) -> int:
    lam = as_diagram(lam)
    return _mn(lam.rows, (1,) * lam.n)


def normalized_character(lam, mu):
    lam = as_diagram(lam)
    return normalize(Fraction(mn_character(lam, mu), dimension(lam)))


def falling(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def sigma_oracle(lam, k) -> int:
    """``chi^lam(k, 1^(n-K)) * n^(K falling)``, zero when ``K > n``."""
    lam = as_diagram(lam)
    k = as_cycle_type(k)
    n = lam.n
    if k.K > n:
        return 0
    mu = k.parts + (1,) * (n - k.K)
    value = Fraction(_mn(lam.rows, mu) * falling(n, k.K), dimension(lam))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral Sigma for {lam}, {k}")
    return value.numerator
