from __future__ import annotations

from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from symchar.errors import CapExceededError, ShapeError
from symchar.permutations import (
    CycleType,
    Permutation,
    count_by_length,
    count_by_length_brute,
    count_cycle_products,
    cycle_product_table,
    enumerate_factorizations,
    factorization_normal_form,
    normal_form_postconditions,
    kappa_pair_counts,
    length_count_bound_holds,
    representative,
)

P = Permutation.parse


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_composition_applies_right_factor_first():
    s = P("(1 2 3)")
    assert Permutation.identity(3) * s == s
    assert P("(1 2)", 3) * P("(1 2)", 3) == Permutation.identity(3)
    assert P("(1 2)", 3) * P("(1 3)") == P("(1 3 2)")


@pytest.mark.parametrize(
    "text,n,ctype,length",
    [("e", 4, (1, 1, 1, 1), 0), ("(1 2 3)", 3, (3,), 2), ("(1 2)(3 4)", 4, (2, 2), 2)],
)
def test_cycle_type_and_length(text, n, ctype, length):
    s = P(text, n)
    assert s.cycle_type().parts == ctype
    assert s.length() == length


def test_parse_rejects_garbage():
    with pytest.raises(ShapeError):
        P("(1 2")
    with pytest.raises(ShapeError):
        P("(1 2)(2 3)")


def test_string_form_round_trips():
    s = P("(1 4 2)(3 5)")
    assert P(str(s), 5) == s
    assert str(Permutation.identity(3)) == "e"


@given(perms(6), perms(6))
def test_length_is_subadditive(a, b):
    assert (a * b).length() <= a.length() + b.length()
    assert (a * b).inverse() == b.inverse() * a.inverse()


def test_factorizations_small():
    pairs = list(enumerate_factorizations(P("(1 2)")))
    assert set(pairs) == {(Permutation.identity(2), P("(1 2)")), (P("(1 2)"), Permutation.identity(2))}
    e3 = Permutation.identity(3)
    pairs = list(enumerate_factorizations(e3))
    assert len(pairs) == 6 and all(b == a.inverse() for a, b in pairs)
    assert sum(kappa_pair_counts(P("(1 2 3)")).values()) == 6


def test_factorization_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_factorizations(Permutation.identity(9)))
    assert sum(1 for _ in enumerate_factorizations(Permutation.identity(4), cap=4)) == 24


def test_normal_form_examples():
    t12, t13 = P("(1 2)", 3), P("(1 3)", 3)
    assert factorization_normal_form(t12, t12) == (t12, t12)
    s1, s2 = factorization_normal_form(t12, t13)
    assert s1 == Permutation.identity(3) and s2 == P("(1 3 2)")
    assert s2.cycle_count() == (t12 * t13).cycle_count()
    sigma = P("(1 2 3)")
    assert factorization_normal_form(Permutation.identity(3), sigma) == (Permutation.identity(3), sigma)


@given(perms(6), perms(6))
def test_normal_form_properties(a, b):
    s1, s2 = factorization_normal_form(a, b)
    pi = a * b
    assert s1 * s2 == pi
    assert s1.length() + s2.length() == a.length() + b.length()
    assert normal_form_postconditions(a, b)


def test_count_by_length():
    assert count_by_length(1) == [1]
    assert count_by_length(4) == [1, 6, 11, 6]
    for n in range(1, 8):
        assert count_by_length(n) == count_by_length_brute(n)
        assert sum(count_by_length(n)) == factorial(n)
    assert all(length_count_bound_holds(n) for n in range(1, 13))


def test_count_by_length_brute_from_scratch():
    n = 5
    counts = [0] * n
    for img in permutations(range(1, n + 1)):
        counts[Permutation(img).length()] += 1
    assert counts == count_by_length(n)


def test_cycle_product_tables():
    assert {b: c for b, c in enumerate(cycle_product_table((2,))) if c} == {2: 1}
    assert {b: c for b, c in enumerate(cycle_product_table((3,))) if c} == {1: 1, 3: 1}
    assert {b: c for b, c in enumerate(cycle_product_table((2, 2))) if c} == {3: 4, 1: 2}
    assert count_cycle_products((2, 2), 3) == 4
    assert count_cycle_products((2, 2), 2) == 0


def test_cycle_product_tables_sum_to_long_cycles():
    for mu in [(3, 1), (2, 2, 1), (4, 2), (3, 3)]:
        assert sum(cycle_product_table(mu)) == factorial(sum(mu) - 1)


def test_cycle_type_parsing_and_representatives():
    k = CycleType.parse("2,3")
    assert k.parts == (3, 2) and k.K == 5 and k.l == 2
    assert representative(k).cycle_type() == k
    assert representative(k, 7).cycle_type().parts == (3, 2, 1, 1)
    with pytest.raises(ShapeError):
        representative(k, 4)

