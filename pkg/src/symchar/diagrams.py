"""Young diagrams, their profiles, Cauchy transforms and cumulants.

Profiles use the Russian convention: the box in row ``i`` and column ``j``
(both 1-based) has content ``j - i``.  The local minima of the profile are
the contents of the addable boxes, the local maxima those of the removable
boxes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from .algebra.multipoly import MultiPoly
from .algebra.ratfunc import RationalFunction, poly_from_roots, poly_mul
from .algebra.rational import format_rational, normalize
from .errors import ShapeError


class YoungDiagram:
    """An integer partition ``rows[0] >= rows[1] >= ... > 0``."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[int] = ()):
        rows = tuple(int(r) for r in rows)
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        if any(r < 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise ShapeError(f"rows must be weakly decreasing and positive: {rows}")
        self.rows = rows

    @classmethod
    def parse(cls, text: str) -> "YoungDiagram":
        text = text.strip()
        if text in ("", "0", "()", "empty"):
            return cls(())
        try:
            return cls([int(t) for t in text.split(",")])
        except ValueError:
            raise ShapeError(f"cannot parse partition {text!r}") from None

    @classmethod
    def rectangle(cls, p: int, q: int) -> "YoungDiagram":
        """``p`` rows of length ``q``."""
        return cls([q] * p)

    @property
    def n(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def num_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def size_bound(self) -> int:
        """Smallest ``A`` with the diagram inside an ``A x A`` square."""
        return max(self.num_rows, self.num_cols)

    def conjugate(self) -> "YoungDiagram":
        return YoungDiagram([sum(1 for r in self.rows if r > j) for j in range(self.num_cols)])

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.rows + (0,) * (length - len(self.rows))

    def __eq__(self, other):
        return isinstance(other, YoungDiagram) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return f"YoungDiagram({list(self.rows)})"

    def __str__(self):
        return ",".join(map(str, self.rows)) or "()"


def as_diagram(lam) -> YoungDiagram:
    if isinstance(lam, YoungDiagram):
        return lam
    if isinstance(lam, str):
        return YoungDiagram.parse(lam)
    return YoungDiagram(lam)


def partitions(n: int, max_part: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``n`` as tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def diagrams(n: int) -> Iterator[YoungDiagram]:
    for p in partitions(n):
        yield YoungDiagram(p)


def profile(lam) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """``(minima, maxima)`` of the profile, each increasing."""
    rows = as_diagram(lam).rows
    r = len(rows)
    ext = rows + (0,)
    xs = [ext[i] - i for i in range(r + 1) if i == 0 or ext[i - 1] > ext[i]]
    ys = [rows[i] - i - 1 for i in range(r) if rows[i] > ext[i + 1]]
    return tuple(sorted(xs)), tuple(sorted(ys))


def cauchy_transform(lam, form: str = "corner") -> RationalFunction:
    """``G(z)`` from the profile corners, or from the row lengths when ``form="row"``."""
    lam = as_diagram(lam)
    if form == "corner":
        xs, ys = profile(lam)
        return RationalFunction(poly_from_roots(ys), poly_from_roots(xs))
    if form == "row":
        n = lam.n
        rows = lam.padded(n)
        num = poly_from_roots([rows[i - 1] - i for i in range(1, n + 1)])
        den = poly_mul((n, 1), poly_from_roots([rows[i - 1] - i + 1 for i in range(1, n + 1)]))
        return RationalFunction(num, den)
    raise ValueError(f"unknown form {form!r}")


def h_function(lam) -> RationalFunction:
    """``H = 1/G``."""
    return cauchy_transform(lam).reciprocal()


@dataclass(frozen=True)
class TransitionMeasure:
    atoms: Tuple[Tuple[int, object], ...]

    def total_mass(self):
        return normalize(sum(Fraction(w) for _, w in self.atoms))

    def moment(self, k: int, shift=0):
        """``sum w (x - shift)^k``."""
        return normalize(sum(Fraction(w) * (x - shift) ** k for x, w in self.atoms))


def transition_measure(lam) -> TransitionMeasure:
    xs, ys = profile(lam)
    atoms = []
    for i, x in enumerate(xs):
        num = 1
        for y in ys:
            num *= x - y
        den = 1
        for j, x2 in enumerate(xs):
            if j != i:
                den *= x - x2
        atoms.append((x, normalize(Fraction(num, den))))
    return TransitionMeasure(tuple(atoms))


BASES = ("shifted", "twisted", "free")


def cumulant_name(basis: str, i: int) -> str:
    if basis == "shifted":
        return f"B~{i}"
    if basis == "twisted":
        return f"B^{i}"
    if basis == "free":
        return f"R{i}"
    raise ValueError(f"unknown basis {basis!r}")


@dataclass
class CumulantVector:
    """Cumulants indexed from 2; entries are rationals or ``MultiPoly``."""

    basis: str
    values: Dict[int, object]
    zeta: object = 0
    meta: Dict[str, object] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    @property
    def order(self) -> int:
        return max(self.values, default=1)

    def __getitem__(self, i: int):
        if i == 1 and self.basis != "free":
            return 0
        return self.values.get(i, 0)

    def as_list(self) -> List[object]:
        return [self.values.get(i, 0) for i in range(2, self.order + 1)]

    def mapping(self) -> Dict[str, object]:
        """Indeterminate name -> value, ready for ``MultiPoly.evaluate``."""
        return {cumulant_name(self.basis, i): v for i, v in self.values.items()}

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "zeta": str(self.zeta) if isinstance(self.zeta, MultiPoly) else format_rational(self.zeta),
            "values": {str(i): _fmt(v) for i, v in sorted(self.values.items())},
        }


def _fmt(v) -> str:
    return str(v) if isinstance(v, MultiPoly) else format_rational(v)


def shifted_boolean_cumulants(lam, zeta: int = 0, order: int = 8) -> CumulantVector:
    """Coefficients ``B~_i = [z^(1-i)] H(z + zeta)`` for ``2 <= i <= order``.

    At ``zeta = 0`` these are the twisted cumulants.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    if int(zeta) != zeta or zeta < 0:
        raise ValueError("zeta must be a non-negative integer")
    series = h_function(lam).shift(zeta).laurent(1 - order)
    values = {i: normalize(series.coefficient(1 - i)) for i in range(2, order + 1)}
    basis = "twisted" if zeta == 0 else "shifted"
    return CumulantVector(basis, values, zeta=int(zeta))


def twisted_boolean_cumulants(lam, order: int = 8) -> CumulantVector:
    return shifted_boolean_cumulants(lam, 0, order)


def rect_boolean_cumulants(p, q, zeta, i: int):
    """Shifted cumulant ``-pq (q - p - zeta)^(i-2)`` of the ``p x q`` rectangle.

    ``p``, ``q`` and ``zeta`` may be rationals or ``MultiPoly`` values; ``p`` may
    be negative.
    """
    if i < 2:
        raise ValueError("index must be at least 2")
    value = -(p * q) * (q - p - zeta) ** (i - 2) if i > 2 else -(p * q)
    return normalize(value) if not isinstance(value, MultiPoly) else value


@dataclass
class CumulantBoundReport:
    diagram: YoungDiagram
    A: int
    zeta: int
    order: int
    ok: bool
    violations: List[Tuple[int, object, object]]


def check_cumulant_bound(lam, A: int, zeta: int = 0, order: int = 12) -> CumulantBoundReport:
    """``|B~_k| <= (2(A + zeta))^k / 2`` for ``2 <= k <= order``."""
    lam = as_diagram(lam)
    if lam.num_rows > A or lam.num_cols > A:
        raise ShapeError(f"{lam} does not fit in a {A}x{A} square")
    bad = []
    if lam.n:
        cum = shifted_boolean_cumulants(lam, zeta, order)
        for k in range(2, order + 1):
            bound = Fraction((2 * (A + zeta)) ** k, 2)
            if abs(Fraction(cum[k])) > bound:
                bad.append((k, cum[k], normalize(bound)))
    return CumulantBoundReport(lam, A, zeta, order, not bad, bad)


def h_tilde(mu: Sequence[int]) -> RationalFunction:
    """``z prod (z - mu_i - 1) / prod (z - mu_i)``."""
    num = poly_mul((0, 1), poly_from_roots([m + 1 for m in mu]))
    return RationalFunction(num, poly_from_roots(mu))


def h_tilde_identity_check(lam) -> bool:
    """``H~_mu(z + n) == H(z)`` with ``mu = lambda + (n-1, ..., 1, 0)``."""
    lam = as_diagram(lam)
    n = lam.n
    rows = lam.padded(n)
    mu = [rows[i] + n - 1 - i for i in range(n)]
    return h_tilde(mu).shift(n) == h_function(lam)
