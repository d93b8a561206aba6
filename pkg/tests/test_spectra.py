from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from betashift.constructions import FamilyIndex, family_beta, family_params, multinacci
from betashift.dynamics import Params
from betashift.exactnum import AlgebraicReal, IntPoly, isolate_roots
from betashift.spectra import (
    THETA0,
    THETA1,
    PreconditionFailed,
    SpectralVerdict,
    finite_type_witness_check,
    kneading_polynomial,
    perron_check,
    pisot_check,
    pm1_vanishes,
    pm1_witness_search,
    root_enclosures,
)
from betashift.words import EPWord
from oracles import brute_pm1_search

P = IntPoly.parse


@pytest.mark.parametrize(
    "poly, pisot, perron",
    [
        ("x^2-x-1", "Pisot", "Perron"),
        ("x^3-x^2-x-1", "Pisot", "Perron"),
        ("x^3-x-1", "Pisot", "Perron"),
        ("x^4-x^3-1", "Pisot", "Perron"),
        ("x^4-x^2-1", "NotPisot", "NotPerron"),
        ("x^2-2", "NotPisot", "NotPerron"),
        ("x^4-x^3-x^2-x+1", "Indeterminate", "Perron"),  # Salem: conjugates on the unit circle
        ("5*x-9", "NotPisot", "NotPerron"),
    ],
)
def test_examples(poly, pisot, perron):
    assert pisot_check(P(poly)).verdict.value == pisot
    assert perron_check(P(poly)).verdict.value == perron


def test_qualifier_and_json():
    r = perron_check(P("x^4-x^2-1"))
    assert r.qualifier == "polynomial-level"
    out = r.to_json()
    assert out["verdict"] == "NotPerron" and len(out["others"]) == 3


def test_precondition():
    with pytest.raises(PreconditionFailed):
        pisot_check(P("x^2-5*x+6"))  # roots 2 and 3
    with pytest.raises(PreconditionFailed):
        perron_check(P("x^2+1"))


def test_theta_constants():
    assert pisot_check(THETA0).verdict is SpectralVerdict.PISOT
    assert pisot_check(THETA1).verdict is SpectralVerdict.PISOT
    assert float(pisot_check(THETA0).dominant) == pytest.approx(1.324718, abs=1e-6)


@pytest.mark.parametrize("poly", ["x^5-x^4-x^3+x^2-x+1", "x^6-x-1", "x^4-x^2-1", "x^3-x^2-x-1", "x^7-x^3-1"])
def test_enclosures_consistent_with_sturm(poly):
    encl = root_enclosures(P(poly))
    p = P(poly).squarefree()
    assert len(encl) == p.degree
    reals = isolate_roots(p)
    assert sum(e.real for e in encl) == len(reals)
    for e in encl:
        assert e.modulus_hi - e.modulus_lo < 1e-6
        # each disk centre nearly annihilates p
        assert abs(p(e.center)) < 1e-6 * sum(abs(c) for c in p.coeffs) * max(1, abs(e.center)) ** p.degree


def _monic_polys():
    return st.lists(st.integers(-2, 2), min_size=2, max_size=6).map(lambda c: IntPoly(tuple(c) + (1,)))


@given(_monic_polys())
def test_pisot_implies_perron(p):
    try:
        a = pisot_check(p)
    except PreconditionFailed:
        return
    if a.verdict is SpectralVerdict.PISOT:
        assert perron_check(p).verdict is SpectralVerdict.PERRON


def test_pm1_examples():
    assert str(pm1_witness_search(multinacci(2), 2)) == "x^2-x-1"
    assert str(pm1_witness_search(family_beta(2, 1), 4)) == "x^4-x^2-1"
    assert pm1_witness_search(AlgebraicReal.from_rational(Fraction(9, 5)), 8) is None
    assert pm1_witness_search(family_beta(2, 1), 3) is None


@pytest.mark.parametrize("poly", ["x^2-x-1", "x^3-x-1", "x^4-x^3-1", "x^4-x^2-1", "x^3-x^2-1"])
def test_pm1_matches_exhaustive(poly):
    beta = isolate_roots(P(poly), (1, 2))[0]
    found = pm1_witness_search(beta, 6)
    brute = brute_pm1_search(float(beta), 6)
    assert found is not None and pm1_vanishes(beta, found.coeffs)
    # same minimal degree, and the search result is among the exhaustive hits
    assert found.degree == min(len(c) - 1 for c in brute)
    assert found.coeffs in brute


def test_pm1_witness_vanishes_exactly():
    beta = family_beta(3, 1)
    w = pm1_witness_search(beta, 8)
    assert w is not None and beta.element(w.coeffs).is_zero()


def test_kneading_polynomial_periodic():
    poly = kneading_polynomial(EPWord.parse("(011)"), EPWord.parse("(100)"))
    assert poly.coeffs == (-1, -1, 1)


def test_kneading_polynomial_greedy():
    poly = kneading_polynomial(EPWord.parse("(01)"), EPWord.parse("1(0)"))
    assert poly.coeffs == (-1, -1, 1)


@pytest.mark.parametrize(
    "params",
    [
        family_params(FamilyIndex(2, 1)),
        family_params(FamilyIndex(3, 2)),
        Params(multinacci(2), "1/4"),
        Params(multinacci(3), "1-b/2"),
        Params.greedy(multinacci(2)),
    ],
)
def test_finite_type_forces_pm1_root(params):
    report = finite_type_witness_check(params)
    assert report.verdict == "SFT"
    assert report.witness is not None
    assert pm1_vanishes(params.beta, report.kneading_polynomial.coeffs)
