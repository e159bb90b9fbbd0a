from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symchar.algebra.multipoly import MultiPoly
from symchar.algebra.ratfunc import RationalFunction
from symchar.algebra.rational import format_rational, normalize, parse_rational, to_rational
from symchar.algebra.series import (
    LaurentSeries,
    PowerSeries,
    direct_coefficient,
    extract_coefficient,
    lagrange_modified,
    series_multiply,
    series_reciprocal,
    shift_substitute,
)
from symchar.diagrams import cauchy_transform
from symchar.errors import NonInvertibleError, TruncationError

z = LaurentSeries.monomial


def L(d, lo=None):
    return LaurentSeries(d, lo=lo)


# -- rationals ---------------------------------------------------------------


def test_normalize_collapses_integral_fractions():
    assert normalize(Fraction(6, 3)) == 2 and isinstance(normalize(Fraction(6, 3)), int)
    assert normalize(Fraction(1, 2)) == Fraction(1, 2)


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_rational(0.5)


@given(st.fractions())
def test_rational_text_round_trip(x):
    assert parse_rational(format_rational(x)) == x


# -- Laurent series ----------------------------------------------------------


def test_products():
    assert series_multiply(z(1), z(-1)).coeffs == {0: 1}
    one_plus, one_minus = L({0: 1, 1: 1}), L({0: 1, 1: -1})
    assert series_multiply(one_plus, one_minus).coeffs == {0: 1, 2: -1}
    a = L({1: 1, -1: -2})
    assert series_multiply(a, a).coeffs == {2: 1, 0: -4, -2: 4}


def test_reciprocals():
    geo = series_reciprocal(L({0: 1, -1: -1}), -6)
    assert all(geo.coefficient(-i) == 1 for i in range(7))
    assert series_reciprocal(z(1), -5).coefficient(-1) == 1
    assert series_reciprocal(z(1), -5).coefficient(-3) == 0


def test_reciprocal_of_cauchy_transform():
    h = cauchy_transform((2, 1)).reciprocal().laurent(-5)
    assert [h.coefficient(e) for e in (1, 0, -1, -2, -3, -4, -5)] == [1, 0, -3, 0, -3, 0, -3]


def test_reciprocal_of_zero_fails():
    with pytest.raises(NonInvertibleError):
        series_reciprocal(L({}), -3)


def test_extraction():
    assert extract_coefficient(L({1: 1, -1: 5}), -1) == 5
    assert extract_coefficient(z(2), -1) == 0


def test_truncation_window_is_enforced():
    s = series_reciprocal(L({0: 1, -1: -1}), -4)
    with pytest.raises(TruncationError):
        s.coefficient(-5)


def test_shift_substitute():
    assert shift_substitute(z(1), 1, -5).coeffs == {1: 1, 0: -1}
    s = shift_substitute(z(-1), 1, -6)
    assert [s.coefficient(-i) for i in range(1, 7)] == [1] * 6
    s = shift_substitute(z(-2), -1, -6)
    assert [s.coefficient(-i) for i in (2, 3, 4, 5)] == [1, -2, 3, -4]


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(-3, 3))
def test_shift_matches_rational_function(num, j):
    f = RationalFunction(num, (0, 0, 0, 1))  # num / z^3
    direct = f.shift(-j).laurent(-8)
    via = shift_substitute(f.laurent(-8), j, -8)
    for e in range(-8, 4):
        assert direct.coefficient(e) == via.coefficient(e)


@given(
    st.dictionaries(st.integers(-4, 3), st.integers(-6, 6), max_size=5),
    st.dictionaries(st.integers(-4, 3), st.integers(-6, 6), max_size=5),
)
def test_multiplication_commutes(a, b):
    x, y = L(a), L(b)
    assert series_multiply(x, y).coeffs == series_multiply(y, x).coeffs


# -- Lagrange ----------------------------------------------------------------


def test_lagrange_examples():
    assert lagrange_modified(1, PowerSeries([1]), PowerSeries([1]), -1) == 1
    assert lagrange_modified(0, PowerSeries([1]), PowerSeries([1, 2, 1]), 2) == 6
    assert lagrange_modified(0, PowerSeries([1]), PowerSeries([1, 1]), 3) == 1


def test_lagrange_domain():
    with pytest.raises(ValueError):
        lagrange_modified(1, PowerSeries([1]), PowerSeries([1]), -2)


@given(
    st.integers(0, 4),
    st.lists(st.integers(-4, 4), min_size=0, max_size=3),
    st.lists(st.integers(-4, 4), min_size=0, max_size=4),
    st.integers(0, 6),
    st.sampled_from([1, -1, 2]),
)
def test_lagrange_against_direct(k, gtail, ptail, n, lead):
    g, phi = PowerSeries([lead] + gtail), PowerSeries([1] + ptail)
    for m in range(-k, n + 1):
        assert lagrange_modified(k, g, phi, m) == direct_coefficient(k, g, phi, m)


# -- polynomials ---------------------------------------------------------------


def test_parse_and_print_round_trip():
    text = "B^3*B^4 + B^2**2*B^3 + 6*B^5 + 13*B^2*B^3 + 18*B^3"
    assert str(MultiPoly.parse(text)) == text


def test_canonical_order_is_independent_of_input_order():
    a = MultiPoly.parse("R3 + R2*R3 - 1/2*R2**2")
    b = MultiPoly.parse("-1/2*R2**2 + R3 + R2*R3")
    assert str(a) == str(b)


def test_substitute_with_weight_cap():
    p = MultiPoly.parse("B^2*B^3 + B^4")
    out = p.substitute({"B^2": MultiPoly.parse("R2"), "B^3": MultiPoly.parse("R3 + R2**2")}, weight_cap=5)
    assert out == MultiPoly.parse("R2*R3 + B^4")


def _build(d):
    out = MultiPoly()
    for m, c in d.items():
        out = out + MultiPoly.parse(m) * c
    return out


polys = st.dictionaries(
    st.sampled_from(["R2", "R3", "R2*R3", "R2**2", "1", "R4"]), st.integers(-5, 5), max_size=4
).map(_build)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - a) == MultiPoly()


@given(polys, st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, r2, r3, r4):
    vals = {"R2": r2, "R3": r3, "R4": r4}
    assert (a * a).evaluate(vals) == a.evaluate(vals) ** 2


def test_rational_function_laurent():
    f = RationalFunction((0, 1), (-1, 0, 1))  # z / (z^2 - 1)
    s = f.laurent(-7)
    assert [s.coefficient(e) for e in range(-7, 1)] == [1, 0, 1, 0, 1, 0, 1, 0]
