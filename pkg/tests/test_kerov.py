from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from symchar.algebra.multipoly import MultiPoly
from symchar.characters import sigma_oracle
from symchar.diagrams import CumulantVector, diagrams, shifted_boolean_cumulants
from symchar.kerov import (
    boolean_from_free,
    conjecture_scan,
    evaluate_free,
    free_from_boolean,
    identity_cumulant,
    kerov_graded,
    kerov_graded_phi,
    kerov_polynomial,
    linear_terms_check,
    rr_candidate_slices,
    rr_weight_k_terms,
)
from symchar.permutations import cycle_types_up_to

R = MultiPoly.var
P = MultiPoly.parse


def kp(k):
    return kerov_polynomial(k).total()


def test_conversion_examples():
    zero = free_from_boolean({i: 0 for i in range(2, 7)}, 6)
    assert set(zero.values.values()) == {0}
    free = free_from_boolean(shifted_boolean_cumulants((2, 1), 0, 4), 4)
    assert [free[i] for i in (2, 3, 4)] == [3, 0, -6]
    assert set(boolean_from_free({i: 0 for i in range(2, 7)}, 6).values.values()) == {0}


def test_rectangle_free_cumulants():
    p, q = R("p"), R("q")
    B = {i: -(p * q) * (q - p) ** (i - 2) for i in range(2, 5)}
    free = free_from_boolean(B, 4)
    assert free[2] == p * q
    assert free[3] == p * q * (q - p)


def test_single_free_cumulant_back_to_boolean():
    pq = R("p") * R("q")
    b = boolean_from_free({2: pq}, 4)
    assert (b[2], b[3], b[4]) == (-pq, 0, -(pq * pq))


def test_round_trip_on_diagram():
    vec = shifted_boolean_cumulants((2, 1), 0, 8)
    back = boolean_from_free(free_from_boolean(vec, 8).values, 8)
    assert back.values == vec.values


@given(st.lists(st.integers(-20, 20), min_size=9, max_size=9))
def test_round_trip_random(xs):
    vec = {i: x for i, x in enumerate(xs, start=2)}
    assert boolean_from_free(free_from_boolean(vec, 10).values, 10).values == vec
    assert free_from_boolean(boolean_from_free(vec, 10).values, 10).values == vec


def test_free_cumulants_from_moments():
    # R_k of the transition measure via the moment-cumulant relation for k <= 4
    for lam in [(2, 1), (3, 1), (4, 2, 1)]:
        from symchar.diagrams import transition_measure

        m = [transition_measure(lam).moment(k) for k in range(5)]
        free = free_from_boolean(shifted_boolean_cumulants(lam, 0, 4), 4)
        assert free[2] == m[2]
        assert free[3] == m[3]
        assert free[4] == m[4] - 2 * m[2] ** 2


def test_kerov_examples():
    assert kp((2,)) == R("R3")
    assert kp((3,)) == R("R4") + R("R2")
    assert kp((3, 2)) == P("R3*R4 - 5*R2*R3 - 6*R5 - 18*R3")
    assert kp((2, 2, 2)) == P("R3**3 - 12*R3*R4 + 58*R3*R2 + 40*R5 + 80*R3 - 6*R3*R2**2")


def test_gradings():
    assert kerov_graded((3, 2), 0) == P("R3*R4")
    assert kerov_graded((3, 2), 2) == P("-5*R2*R3 - 6*R5")
    g = kerov_polynomial((4, 3))
    total = MultiPoly()
    for two_n in range(0, g.top_weight + 1, 2):
        total = total + g.grade(two_n)
    assert total == g.total()
    with pytest.raises(ValueError):
        g.grade(3)


@pytest.mark.parametrize("k", [(2,), (3,), (4,), (3, 2), (2, 2, 2), (4, 1), (3, 3), (2, 2, 1)])
def test_phi_engine_agrees(k):
    assert kerov_graded_phi(k).terms_by_grade == kerov_polynomial(k).terms_by_grade


def test_free_route_matches_oracle():
    for n in range(1, 8):
        for lam in diagrams(n):
            free = free_from_boolean(shifted_boolean_cumulants(lam, 0, 2 * n + 2), 2 * n + 2)
            for k in cycle_types_up_to(n):
                assert evaluate_free(kp(k), free) == sigma_oracle(lam, k)


def test_top_terms():
    for k in cycle_types_up_to(7):
        if k.K + k.l <= 8:
            expect = MultiPoly.const(1)
            for part in k.parts:
                expect = expect * R(f"R{part + 1}")
            assert kerov_graded(k, 0) == expect


def test_identity_cumulants():
    assert identity_cumulant("3") == kp((3,))
    assert identity_cumulant("3,2") == kp((3, 2)) - kp((3,)) * kp((2,))
    r, s, t = (4,), (3,), (2,)
    expect = (
        kp((4, 3, 2)) - kp(r) * kp((3, 2)) - kp(s) * kp((4, 2)) - kp(t) * kp((4, 3))
        + 2 * kp(r) * kp(s) * kp(t)
    )
    assert identity_cumulant("4,3,2") == expect
    assert -identity_cumulant("3,2") == P("6*R2*R3 + 6*R5 + 18*R3")


def test_linear_terms():
    for mu, lin, counts in [
        ((2,), P("R3"), {2: 1}),
        ((3,), P("R2 + R4"), {1: 1, 3: 1}),
        ((2, 2), P("4*R4 + 2*R2"), {3: 4, 1: 2}),
    ]:
        rep = linear_terms_check(mu)
        assert rep.ok, rep.problems
        assert rep.counts == counts
        assert MultiPoly({((f"R{b + 1}", 1),): c for b, c in rep.coefficients.items()}) == lin


def test_linear_terms_sweep():
    for mu in cycle_types_up_to(6):
        assert linear_terms_check(mu).ok, mu


def test_rr_closed_form():
    for r in (2, 3):
        cross = rr_candidate_slices(r)["weight_2r_of_cross_term"]
        assert r * r * rr_weight_k_terms(r) == -cross
    assert rr_weight_k_terms(2) == P("-R4 - 1/2*R2**2")


def test_rr_with_only_second_cumulant():
    assert rr_weight_k_terms(2, {2: 1}) == Fraction(-1, 2)


def test_conjecture_scan_reports():
    scan = conjecture_scan(6)
    doc = scan.to_json()
    assert doc["checked_free"] == doc["checked_twisted"] == scan.checked_free > 0
    assert doc["status"] in ("no violation", "counterexample candidates")


def test_evaluate_free_accepts_vectors():
    vec = CumulantVector("free", {2: 3, 3: 0, 4: -6})
    assert evaluate_free(kp((3,)), vec) == -3
