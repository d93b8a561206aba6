from fractions import Fraction

import pytest

from betashift.constructions import (
    FamilyIndex,
    family_beta,
    family_params,
    family_polynomial,
    fourblock_holds,
    multinacci,
    prefix_difference_poly,
    self_admissible,
    verify_maximal_root,
    verify_projection_half,
    verify_self_admissible,
    xi_word,
    xi_word_by_substitution,
)
from betashift.dynamics import project
from betashift.exactnum import count_roots, sign_at
from betashift.words import EPWord, star

SMALL = [FamilyIndex(n, k) for n in (2, 3) for k in (0, 1, 2)]


def test_multinacci_values():
    assert multinacci(2).approx(15).startswith("1.6180339887")
    assert multinacci(3).approx(15).startswith("1.8392867552")


def test_family_polynomial():
    assert str(family_polynomial(FamilyIndex(2, 1))) == "x^4-x^2-1"
    assert str(family_polynomial(2, 0)) == "x^2-x-1"
    assert family_polynomial(3, 2).degree == 12


def test_family_beta_is_root_of_power():
    # beta_{n,k}^(2^k) = gamma_n
    for n, k in [(2, 1), (3, 2)]:
        beta = family_beta(n, k)
        assert float(beta) ** (2 ** k) == pytest.approx(float(multinacci(n)), rel=1e-12)


def test_xi_small_words():
    assert str(xi_word(2, "minus", 0)) == "(011)"
    assert str(xi_word(FamilyIndex(2, 1))) == "(011010)"
    assert str(xi_word(FamilyIndex(2, 1), "plus")) == "(100101)"


@pytest.mark.parametrize("idx", SMALL + [FamilyIndex(4, 3)])
def test_two_constructions_agree(idx):
    assert xi_word(idx) == xi_word_by_substitution(idx)
    assert len(xi_word(idx).per) == idx.period


@pytest.mark.parametrize("idx", [FamilyIndex(n, k) for n in (2, 3, 4) for k in (2, 3, 4)])
def test_fourblock(idx):
    assert fourblock_holds(idx)


@pytest.mark.parametrize("idx", SMALL)
def test_battery(idx):
    assert verify_self_admissible(idx)
    assert verify_maximal_root(idx)
    assert verify_projection_half(idx)


def test_mutated_word_is_not_self_admissible():
    minus = xi_word(FamilyIndex(2, 1))
    assert self_admissible(minus, star(minus))
    # flipping bit 1, 2 or 4 of (011010) puts a shift strictly between the pair
    for i in (1, 2, 4):
        bad = list(minus.per)
        bad[i] ^= 1
        w = EPWord((), bad)
        assert not self_admissible(w, star(w)), w


def test_prefix_sum_negative_on_whole_interval():
    # exact strengthening of the sampled check: no root in (1, 2) and negative at 3/2
    for idx in SMALL:
        poly = prefix_difference_poly(idx)
        if len(poly) > 1:
            assert count_roots(poly, 1, 2) == 0
        assert sign_at(poly, Fraction(3, 2)) < 0


def test_projection_half_fails_off_family():
    idx = FamilyIndex(2, 1)
    params = family_params(idx)
    from betashift.dynamics import Params

    other = Params(params.beta, Fraction(1, 3))
    assert not verify_projection_half(idx, params=other)
    assert project(params, xi_word(idx)) == Fraction(1, 2)


def test_bad_index():
    with pytest.raises(ValueError):
        FamilyIndex(1, 0)
    with pytest.raises(ValueError):
        FamilyIndex(2, -1)
