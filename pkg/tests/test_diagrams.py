from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symchar.algebra.multipoly import MultiPoly
from symchar.algebra.ratfunc import RationalFunction
from symchar.diagrams import (
    YoungDiagram,
    cauchy_transform,
    check_cumulant_bound,
    diagrams,
    h_tilde,
    h_tilde_identity_check,
    partitions,
    profile,
    rect_boolean_cumulants,
    shifted_boolean_cumulants,
    transition_measure,
)
from symchar.errors import ShapeError

small_diagrams = st.integers(1, 9).flatmap(lambda n: st.sampled_from(list(partitions(n)))).map(YoungDiagram)


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions(3)) == [(3,), (2, 1), (1, 1, 1)]


def test_diagram_basics():
    lam = YoungDiagram.parse("4,3,1")
    assert lam.n == 8 and lam.conjugate().rows == (3, 2, 2, 1)
    assert YoungDiagram.rectangle(2, 3).rows == (3, 3)
    with pytest.raises(ShapeError):
        YoungDiagram([1, 2])


@pytest.mark.parametrize(
    "rows,xs,ys",
    [((4, 3, 1), (-3, -1, 2, 4), (-2, 1, 3)), ((), (0,), ()), ((2, 1), (-2, 0, 2), (-1, 1))],
)
def test_profiles(rows, xs, ys):
    assert profile(rows) == (xs, ys)


def test_cauchy_transform_examples():
    assert cauchy_transform(()) == RationalFunction((1,), (0, 1))
    assert cauchy_transform((2, 1)) == RationalFunction((-1, 0, 1), (0, -4, 0, 1))
    assert cauchy_transform((1,)) == RationalFunction((0, 1), (-1, 0, 1))


@given(small_diagrams)
def test_profiles_interlace(lam):
    xs, ys = profile(lam)
    assert len(xs) == len(ys) + 1
    assert all(xs[i] < ys[i] < xs[i + 1] for i in range(len(ys)))
    assert sum(xs) == sum(ys)


@given(small_diagrams)
def test_row_form_agrees_with_corner_form(lam):
    assert cauchy_transform(lam, "row") == cauchy_transform(lam, "corner")


def test_transition_measure():
    assert transition_measure(()).atoms == ((0, 1),)
    assert dict(transition_measure((1,)).atoms) == {-1: Fraction(1, 2), 1: Fraction(1, 2)}


@given(small_diagrams)
def test_transition_measure_is_centred_probability(lam):
    mu = transition_measure(lam)
    assert mu.total_mass() == 1 and mu.moment(1) == 0
    assert mu.moment(2) == lam.n
    assert all(w > 0 for _, w in mu.atoms)


def test_twisted_cumulants_of_21():
    cum = shifted_boolean_cumulants((2, 1), 0, 6)
    assert cum.basis == "twisted"
    assert cum.as_list() == [-3, 0, -3, 0, -3]


@given(small_diagrams, st.integers(0, 12))
def test_second_cumulant_is_minus_n(lam, zeta):
    assert shifted_boolean_cumulants(lam, zeta, 3)[2] == -lam.n


def test_empty_diagram_cumulants_vanish():
    for zeta in (0, 3):
        assert set(shifted_boolean_cumulants((), zeta, 6).values.values()) == {0}


def test_rectangle_cumulants():
    p, q, zeta = MultiPoly.var("p"), MultiPoly.var("q"), MultiPoly.var("zeta")
    assert rect_boolean_cumulants(p, q, zeta, 2) == -(p * q)
    assert rect_boolean_cumulants(4, 4, 0, 5) == 0
    assert rect_boolean_cumulants(2, 3, 0, 3) == -6 == shifted_boolean_cumulants((3, 3), 0, 3)[3]


@pytest.mark.parametrize("p,q,zeta", [(2, 3, 0), (3, 2, 1), (1, 4, 5), (3, 3, 2)])
def test_rectangle_cumulants_match_diagrams(p, q, zeta):
    cum = shifted_boolean_cumulants(YoungDiagram.rectangle(p, q), zeta, 8)
    assert all(cum[i] == rect_boolean_cumulants(p, q, zeta, i) for i in range(2, 9))


def test_cumulant_bound():
    assert check_cumulant_bound((2, 1), 2, 0, 6).ok
    assert check_cumulant_bound((), 1, 4).ok
    with pytest.raises(ShapeError):
        check_cumulant_bound((3,), 2)
    for n in range(1, 8):
        for lam in diagrams(n):
            A = lam.size_bound
            assert check_cumulant_bound(lam, A, 0).ok and check_cumulant_bound(lam, A, 2 * A).ok


def test_h_tilde_identity():
    assert h_tilde(()) == RationalFunction((0, 1))
    assert h_tilde_identity_check(()) and h_tilde_identity_check((1,))
    for n in range(1, 8):
        assert all(h_tilde_identity_check(lam) for lam in diagrams(n))
