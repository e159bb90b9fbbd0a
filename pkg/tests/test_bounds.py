from __future__ import annotations

from fractions import Fraction
from math import e as E, factorial

import pytest

from symchar.bounds import (
    Interval,
    balanced,
    character_bound_rhs,
    class_size,
    e_bracket,
    sigma_bound_branch,
    sigma_bound_value,
    sqrt_bracket,
    verify_corollary_sum,
    verify_cumulant_bounds,
    verify_main_bound,
    verify_moment_bounds,
    verify_sigma_bound,
)
from symchar.diagrams import YoungDiagram, partitions
from symchar.permutations import CycleType


def test_e_bracket_contains_e():
    for digits in (9, 20, 40):
        iv = e_bracket(digits)
        assert iv.lo < Fraction(E) + Fraction(1, 10**15) and iv.hi > Fraction(E) - Fraction(1, 10**15)
        assert iv.hi - iv.lo <= Fraction(2, 10**digits)
    assert e_bracket(40).lo >= e_bracket(9).lo and e_bracket(40).hi <= e_bracket(9).hi


def test_sqrt_bracket():
    iv = sqrt_bracket(2)
    assert iv.lo**2 <= 2 <= iv.hi**2
    assert sqrt_bracket(9) == Interval(Fraction(3), Fraction(3))


def test_interval_arithmetic_is_outward():
    a = Interval(Fraction(1), Fraction(2))
    b = Interval(Fraction(3), Fraction(4))
    assert (a * b) == Interval(Fraction(3), Fraction(8))
    assert (a + b) == Interval(Fraction(4), Fraction(6))
    assert (b / b).contains(1)
    with pytest.raises(ValueError):
        Interval(Fraction(-1), Fraction(1)) * b


def test_sigma_bound_branches():
    v = sigma_bound_value(2, (2,))
    assert sigma_bound_branch(2, (2,)) == "small"
    assert Fraction(132 * 10**5) < v.lo and v.hi < Fraction(133 * 10**5)
    assert sigma_bound_branch(1, (8, 8)) == "large"
    large = sigma_bound_value(1, (8, 8))
    e = e_bracket()
    assert large == (64 * e) ** 16 * Interval.point(16)
    assert sigma_bound_branch(1, (8,)) == "boundary"
    both = sigma_bound_value(1, (8,))
    assert both.lo >= (16 * e * e).lo ** 9 - 1


def test_sigma_bound_sweep():
    rep = verify_sigma_bound(8)
    assert rep.ok and rep.checked > 0


def test_rhs_identity_and_example():
    assert character_bound_rhs(5, 1, 0) == Interval.point(1)
    e = e_bracket()
    D = max(((16 * e**3) ** 3).lo, ((32 * e**2) ** 2).lo)
    rhs = character_bound_rhs(9, 1, 2)
    assert rhs.lo <= (D / 3) ** 2 * Fraction(1000001, 1000000)
    assert rhs.hi >= (D / 3) ** 2 * Fraction(999999, 1000000)


def test_balanced():
    assert balanced(YoungDiagram((2, 2)), 1)
    assert not balanced(YoungDiagram((4,)), 1)
    assert all(balanced(YoungDiagram(p), 3) for n in range(1, 9) for p in partitions(n))


def test_main_bound_sweep():
    rep = verify_main_bound(8, 3)
    assert rep.ok
    assert any("identity" in note for note in rep.notes)
    rep = verify_main_bound(7, Fraction(3, 2), workers=2)
    assert rep.ok


def test_worker_count_does_not_change_reports():
    a = verify_main_bound(6, 2, workers=1).to_json()
    b = verify_main_bound(6, 2, workers=3).to_json()
    assert a == b


def test_class_sizes_sum_to_factorial():
    for n in range(1, 8):
        assert sum(class_size(CycleType(p), n) for p in partitions(n)) == factorial(n)


def test_corollary():
    rep = verify_corollary_sum((3, 3), 1)
    assert rep.total == Fraction(29, 25)
    assert rep.status == "informational"
    trivial = verify_corollary_sum((5,), 1)
    counted = sum(class_size(CycleType.parse(c), 5) for c in trivial.classes)
    assert trivial.total == counted
    assert verify_corollary_sum((2, 2), 0).total == 1


def test_cumulant_and_moment_sweeps():
    assert verify_cumulant_bounds(9).ok
    assert verify_moment_bounds(8).ok


def test_report_json_has_string_numbers():
    doc = verify_main_bound(4, Fraction(3, 2)).to_json()
    assert doc["scope"]["C"] == "3/2"
    assert doc["status"] == "pass"
