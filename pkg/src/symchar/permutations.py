"""Permutations of ``{1..n}``, cycle types and the counting kernels.

Composition is right-to-left everywhere: ``(a * b)(x) = a(b(x))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as _perms
from math import factorial
from typing import Iterator, Sequence, Tuple

from . import kernels
from .errors import CapExceededError, ShapeError

DEFAULT_CAP = 8


@dataclass(frozen=True, order=True)
class CycleType:
    """Multiset of cycle lengths, stored weakly decreasing."""

    parts: Tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ShapeError(f"cycle lengths must be positive, got {parts}")
        object.__setattr__(self, "parts", tuple(sorted(parts, reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "CycleType":
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls([int(t) for t in text.split(",")])
        except ValueError:
            raise ShapeError(f"cannot parse cycle type {text!r}") from None

    @property
    def K(self) -> int:
        return sum(self.parts)

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.parts)

    @property
    def reduced_length(self) -> int:
        return self.K - self.l

    def ascending(self) -> Tuple[int, ...]:
        return tuple(reversed(self.parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


def as_cycle_type(k) -> CycleType:
    if isinstance(k, CycleType):
        return k
    if isinstance(k, str):
        return CycleType.parse(k)
    if isinstance(k, int):
        return CycleType((k,))
    return CycleType(k)


class Permutation:
    """A bijection of ``{1..n}`` stored by its images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ShapeError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def _from0(cls, images0) -> "Permutation":
        p = cls.__new__(cls)
        p.images = tuple(x + 1 for x in images0)
        return p

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        img = list(range(1, n + 1))
        seen = set()
        for cyc in cycles:
            for i, x in enumerate(cyc):
                if x in seen or not 1 <= x <= n:
                    raise ShapeError(f"bad cycle {cyc} for n={n}")
                seen.add(x)
                img[x - 1] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1 3 2)(4 5)"``; ``"()"`` or ``"e"`` is the identity."""
        text = text.strip()
        cycles = []
        if text not in ("", "e", "()"):
            if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
                raise ShapeError(f"cannot parse permutation {text!r}")
            for body in re.findall(r"\(([^)]*)\)", text):
                cycles.append([int(t) for t in re.split(r"[\s,]+", body.strip())])
        top = max((x for c in cycles for x in c), default=0)
        if n is None:
            n = top
        elif n < top:
            raise ShapeError(f"permutation mentions {top} but n={n}")
        return cls.from_cycles(n, cycles)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def _zero(self):
        return [x - 1 for x in self.images]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, x in enumerate(self.images, 1):
            inv[x - 1] = i
        return Permutation(inv)

    def cycles(self):
        seen = set()
        out = []
        for i in range(1, self.n + 1):
            if i not in seen:
                cyc = []
                j = i
                while j not in seen:
                    seen.add(j)
                    cyc.append(j)
                    j = self(j)
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        return kernels.cycle_count(self._zero())

    def cycle_type(self) -> CycleType:
        return CycleType([len(c) for c in self.cycles()])

    def length(self) -> int:
        return self.n - self.cycle_count()

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def __str__(self):
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles() if len(c) > 1]
        return "".join(parts) or "e"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a * b``: apply ``b`` first."""
    if a.n != b.n:
        raise ShapeError(f"size mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a.images[x - 1] for x in b.images))


def cycle_type(s: Permutation) -> CycleType:
    return s.cycle_type()


def length(s: Permutation) -> int:
    return s.length()


def representative(k, n: int | None = None) -> Permutation:
    """Cycles of ``k`` on consecutive blocks ``1..k_1, k_1+1..``, padded with fixed points."""
    k = as_cycle_type(k)
    n = k.K if n is None else n
    if n < k.K:
        raise ShapeError(f"cycle type {k} does not fit in S_{n}")
    cycles, start = [], 1
    for part in k.parts:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles(n, cycles)


def _check_cap(K: int, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if K > cap:
        raise CapExceededError(f"enumeration over S_{K} exceeds the cap {cap}")


def enumerate_factorizations(pi: Permutation, cap: int | None = None) -> Iterator[Tuple[Permutation, Permutation]]:
    """Every ``(s1, s2)`` with ``s1 * s2 == pi``; ``s1`` runs over ``S_K``."""
    _check_cap(pi.n, cap)
    p0 = pi._zero()
    n = pi.n
    for s1 in _perms(range(n)):
        inv1 = [0] * n
        for i, x in enumerate(s1):
            inv1[x] = i
        yield Permutation._from0(s1), Permutation._from0([inv1[x] for x in p0])


def kappa_pair_counts(pi: Permutation, cap: int | None = None):
    """``{(kappa(s1), kappa(s2)): multiplicity}`` over factorizations of ``pi``."""
    _check_cap(pi.n, cap)
    return kernels.kappa_pair_counts(pi._zero())


def factorization_normal_form(s1: Permutation, s2: Permutation) -> Tuple[Permutation, Permutation]:
    """Push transpositions from ``s1`` into ``s2`` until each ``s1``-cycle lies in an ``s2``-cycle.

    Each step picks the lexicographically smallest offending pair ``a < b`` and
    sets ``s1 <- s1 * (a b)``, ``s2 <- (a b) * s2``; the product is unchanged.
    """
    if s1.n != s2.n:
        raise ShapeError(f"size mismatch: {s1.n} vs {s2.n}")
    r1, r2 = kernels.nf_reduce(s1._zero(), s2._zero())
    return Permutation._from0(r1), Permutation._from0(r2)


def normal_form_postconditions(s1: Permutation, s2: Permutation) -> bool:
    return kernels.nf_check(s1._zero(), s2._zero())


def normal_form_sweep(K: int) -> Tuple[int, int]:
    """``(pairs checked, violations)`` over all of ``S_K x S_K``."""
    return kernels.normal_form_sweep(K)


def count_by_length(n: int):
    """Coefficients of ``(1+x)(1+2x)...(1+(n-1)x)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    c = [1]
    for m in range(1, n):
        c = [(c[i] if i < len(c) else 0) + (m * c[i - 1] if i >= 1 else 0) for i in range(len(c) + 1)]
    return c


def count_by_length_brute(n: int, cap: int | None = None):
    _check_cap(n, cap)
    return kernels.length_distribution(n)


def length_count_bound_holds(n: int) -> bool:
    """``#{|s| = i} <= n^(2i)/i!`` for every ``i``."""
    return all(Fraction(c) <= Fraction(n ** (2 * i), factorial(i)) for i, c in enumerate(count_by_length(n)))


def cycle_product_table(mu, cap: int | None = None):
    """``table[b]`` = number of long cycles ``c`` with ``kappa(c * omega_mu) == b``."""
    mu = as_cycle_type(mu)
    _check_cap(mu.K, cap)
    table = kernels.cycle_product_counts(representative(mu)._zero())
    K = mu.K
    for b, cnt in enumerate(table):
        # sign(c * omega) = (-1)^(K-1) * (-1)^(K-l) must equal (-1)^(K-b)
        if cnt and (K - 1 + K - mu.l) % 2 != (K - b) % 2:
            raise AssertionError(f"parity violated for {mu} at b={b}")
    return table


def count_cycle_products(mu, b: int, cap: int | None = None) -> int:
    table = cycle_product_table(mu, cap)
    return table[b] if 0 <= b < len(table) else 0


def cycle_types(K: int):
    """All cycle types (partitions) of ``K``, in reverse lexicographic order."""
    from .diagrams import partitions

    for p in partitions(K):
        yield CycleType(p)


def cycle_types_up_to(K: int, min_K: int = 1):
    for k in range(min_K, K + 1):
        yield from cycle_types(k)
