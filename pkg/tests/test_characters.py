from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from symchar.algebra.multipoly import MultiPoly
from symchar.characters import (
    dimension,
    mn_character,
    normalized_character,
    sigma_evaluate,
    sigma_frobenius_numeric,
    sigma_frobenius_polynomial,
    sigma_oracle,
    verify_nonnegativity,
)
from symchar.characters import stanley
from symchar.characters.stanley import stanley_evaluate, stanley_polynomial
from symchar.diagrams import YoungDiagram, diagrams, partitions, shifted_boolean_cumulants
from symchar.permutations import cycle_types_up_to

B = MultiPoly.var

diagram_and_type = st.integers(1, 8).flatmap(
    lambda n: st.tuples(
        st.sampled_from(list(partitions(n))),
        st.sampled_from([k for k in cycle_types_up_to(n)]),
    )
)


# -- Murnaghan-Nakayama -------------------------------------------------------


def test_s3_character_table():
    assert [mn_character((2, 1), mu) for mu in [(3,), (2, 1), (1, 1, 1)]] == [-1, 0, 2]
    assert [mn_character((3,), mu) for mu in [(3,), (2, 1), (1, 1, 1)]] == [1, 1, 1]
    assert [mn_character((1, 1, 1), mu) for mu in [(3,), (2, 1), (1, 1, 1)]] == [1, -1, 1]


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality_on_identity(n):
    # sum of squared dimensions is n!
    assert sum(dimension(lam) ** 2 for lam in diagrams(n)) == factorial(n)


@pytest.mark.parametrize("n", range(2, 7))
def test_sign_representation(n):
    col = tuple([1] * n)
    for mu in partitions(n):
        assert mn_character(col, mu) == (-1) ** (n - len(mu))


def test_normalized_characters():
    assert normalized_character((2, 1), (3,)) == Fraction(-1, 2)
    assert normalized_character((2, 1), (2, 1)) == 0
    assert normalized_character((4, 2), (1,) * 6) == 1


def test_sigma_oracle_examples():
    assert sigma_oracle((2, 1), (1,)) == 3
    assert sigma_oracle((2, 1), (3,)) == -3
    assert sigma_oracle((2, 1), (2, 2)) == 0


# -- Frobenius polynomials ----------------------------------------------------


def test_small_polynomials():
    for zeta in (0, 2, "zeta"):
        cp = sigma_frobenius_polynomial((1,), zeta)
        name = "B^2" if zeta == 0 else "B~2"
        assert cp.poly == -B(name)
    assert sigma_frobenius_polynomial((2,), 0).signed() == B("B^3")


def test_printed_twisted_expansions():
    s32 = sigma_frobenius_polynomial((3, 2), 0).signed()
    assert s32 == MultiPoly.parse("B^4*B^3 + 13*B^2*B^3 + B^2**2*B^3 + 6*B^5 + 18*B^3")
    s42 = sigma_frobenius_polynomial((4, 2), 0).signed()
    assert s42 == MultiPoly.parse(
        "B^5*B^3 + 32*B^2 + 80*B^4 + 8*B^6 + 17*B^3**2 + 40*B^2**2 + 3*B^2*B^3**2 + 8*B^2**3 + 24*B^2*B^4"
    )


def test_evaluation_examples():
    assert sigma_evaluate((2, 1), (3,), 0) == -3
    assert sigma_evaluate((2, 1), (2,), 0) == 0


def test_part_order_is_irrelevant():
    assert sigma_frobenius_polynomial("2,3", 1).poly == sigma_frobenius_polynomial("3,2", 1).poly


def test_symbolic_zeta_specializes():
    cp = sigma_frobenius_polynomial((3, 1), "zeta")
    for zeta in (0, 1, 4):
        fixed = sigma_frobenius_polynomial((3, 1), zeta)
        prefix = "B^" if zeta == 0 else "B~"
        renamed = cp.poly.substitute({"zeta": zeta, **{f"B~{i}": B(f"{prefix}{i}") for i in range(2, 6)}})
        assert renamed == fixed.poly


@given(diagram_and_type, st.integers(0, 6))
def test_frobenius_matches_oracle(pair, zeta):
    lam, k = pair
    expect = sigma_oracle(lam, k)
    assert sigma_evaluate(lam, k, zeta) == expect
    assert sigma_frobenius_numeric(lam, k, zeta) == expect


def test_exhaustive_oracle_sweep_small():
    for n in range(1, 7):
        for lam in diagrams(n):
            for k in cycle_types_up_to(n):
                expect = sigma_oracle(lam, k)
                for zeta in {0, max(k.parts), 2 * n}:
                    assert sigma_evaluate(lam, k, zeta) == expect, (lam, k, zeta)


def test_evaluation_beyond_size_gives_zero():
    # K > n: the polynomial must still vanish on the diagram
    assert sigma_evaluate((2,), (3,), 0) == 0
    assert sigma_evaluate((1, 1), (2, 2), 3) == 0


def test_json_numbers_are_strings():
    doc = sigma_frobenius_polynomial((2,), 3).to_json()
    assert doc["zeta"] == "3" and doc["basis"] == "shifted"


# -- positivity --------------------------------------------------------------


def test_nonnegativity_examples():
    assert verify_nonnegativity((3, 2), 3).ok
    assert verify_nonnegativity((2,), 0).ok
    assert verify_nonnegativity((3, 2), 0).ok and verify_nonnegativity((4, 2), 0).ok


def test_nonnegativity_sweep():
    for k in cycle_types_up_to(6):
        if k.K + k.l <= 8:
            rep = verify_nonnegativity(k, max(k.parts))
            assert rep.ok and rep.within_hypothesis, (k, rep.offending)


# -- Stanley -----------------------------------------------------------------


def test_stanley_examples():
    p, q = B("p"), B("q")
    assert stanley_polynomial((1,)) == p * q
    assert stanley_polynomial((2,)) == p * q * (q - p)
    assert stanley_evaluate((2,), 2, 3) == 6 == sigma_oracle((3, 3), (2,))
    assert stanley_evaluate((2,), -1, 1) == -2
    assert stanley_evaluate((2,), 1, 1) == 0
    assert stanley_evaluate((1,), -4, 4) == -16


@pytest.mark.parametrize("p,q", [(1, 1), (2, 3), (3, 2), (3, 3), (1, 4), (2, 2)])
def test_stanley_matches_oracle(p, q):
    lam = YoungDiagram.rectangle(p, q)
    for k in cycle_types_up_to(5):
        assert stanley_evaluate(k, p, q) == sigma_oracle(lam, k), (p, q, k)


def test_sign_flip_breaks_rectangle_identity(monkeypatch):
    from symchar.acceptance import rectangle_identity

    monkeypatch.setattr(stanley, "STANLEY_SIGN", -1)
    stanley._stanley.cache_clear()
    try:
        assert not rectangle_identity(K_max=3).ok
    finally:
        stanley._stanley.cache_clear()


def test_rectangle_cumulants_reproduce_stanley():
    cp = sigma_frobenius_polynomial((3, 2), 0)
    for p, q in [(2, 3), (3, 1)]:
        cum = shifted_boolean_cumulants(YoungDiagram.rectangle(p, q), 0, 7)
        assert cp.evaluate(cum) == stanley_evaluate((3, 2), p, q)
