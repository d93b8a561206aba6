from fractions import Fraction

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from betashift.exactnum import (
    AlgebraicReal,
    ContextMismatch,
    DivisionByZero,
    IntPoly,
    OrbitIndex,
    ParseError,
    count_roots,
    format_poly,
    isolate_roots,
    parse_element,
    parse_qpoly,
    sign_at,
    squarefree,
)

GOLDEN = AlgebraicReal(IntPoly.parse("x^2-x-1"), (1, 2))
QUARTIC = AlgebraicReal(IntPoly.parse("x^4-x^2-1"), (1, 2))

small_ints = st.integers(min_value=-6, max_value=6)
int_polys = st.lists(small_ints, min_size=2, max_size=7).filter(lambda c: c[-1] != 0)
fractions = st.fractions(min_value=-4, max_value=4, max_denominator=12)


def _numeric_real_roots(coeffs):
    with mpmath.workdps(60):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=300, extraprec=300)
        return sorted(float(mpmath.re(r)) for r in roots if abs(mpmath.im(r)) < mpmath.mpf(10) ** -20)


# --- polynomials -----------------------------------------------------------


def test_parse_and_format_roundtrip():
    for text in ["x^2-x-1", "x^4-x^2-1", "5*x-9", "x^3-x-1"]:
        assert format_poly(IntPoly.parse(text).coeffs) == text


def test_parse_rejects_garbage():
    for text in ["x^^2", "import os", "x**y", "", "2*"]:
        with pytest.raises(ParseError):
            parse_qpoly(text)


def test_parse_clears_denominators():
    assert IntPoly.parse("x/2 - 1/3").coeffs == (-2, 3)


def test_squarefree_removes_repeated_factor():
    f = (1, -2, 1)  # (x-1)^2
    assert squarefree(f) == (-1, 1)


@given(int_polys)
def test_sturm_count_matches_numeric(coeffs):
    f = squarefree(tuple(coeffs))
    assume(len(f) >= 2)
    numeric = _numeric_real_roots(f)
    # stay clear of roots near the interval ends
    assume(all(abs(abs(r) - 10) > 1e-6 for r in numeric))
    assert count_roots(f, -10, 10) == sum(1 for r in numeric if -10 < r < 10)


@given(int_polys)
def test_isolated_roots_are_sorted_and_certified(coeffs):
    roots = isolate_roots(IntPoly(tuple(coeffs)))
    f = squarefree(tuple(coeffs))
    assert len(roots) == count_roots(f, -100, 100)
    for a, b in zip(roots, roots[1:]):
        assert a.compare(b) < 0
    for r in roots:
        assert r.is_root_of(tuple(Fraction(c) for c in coeffs))


def test_sign_at_is_exact():
    assert sign_at((-2, 0, 1), Fraction(3, 2)) == 1
    assert sign_at((-9, 4), Fraction(9, 4)) == 0


# --- algebraic reals -------------------------------------------------------


def test_interval_must_isolate():
    with pytest.raises(ValueError):
        AlgebraicReal(IntPoly.parse("x^2-2"), (-2, 2))


def test_compare_equal_numbers_with_different_polynomials():
    # sqrt(2) as a root of x^2-2 and of x^4-4
    a = AlgebraicReal(IntPoly.parse("x^2-2"), (1, 2))
    b = AlgebraicReal(IntPoly.parse("x^4-4"), (1, 2))
    assert a.compare(b) == 0
    assert a.compare(Fraction(141, 100)) > 0


def test_approx_digits():
    assert GOLDEN.approx(15).startswith("1.61803398874989")


def test_interval_refinement_is_nested():
    prev = GOLDEN.interval_at(8)
    for bits in (16, 32, 64):
        iv = GOLDEN.interval_at(bits)
        assert prev.lo <= iv.lo <= iv.hi <= prev.hi
        assert iv.width < Fraction(1, 2 ** bits) * 2
        prev = iv


# --- field elements --------------------------------------------------------

elements = st.lists(fractions, min_size=1, max_size=4)


@given(elements, elements, elements)
def test_field_ring_axioms(a, b, c):
    x, y, z = (QUARTIC.element(v) for v in (a, b, c))
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0


@given(elements, elements)
def test_field_ops_match_floats(a, b):
    x, y = GOLDEN.element(a), GOLDEN.element(b)
    bf = float(GOLDEN)
    fx = sum(float(c) * bf ** i for i, c in enumerate(a))
    fy = sum(float(c) * bf ** i for i, c in enumerate(b))
    assert float(x * y) == pytest.approx(fx * fy, rel=1e-9, abs=1e-9)
    assert float(x + y) == pytest.approx(fx + fy, rel=1e-9, abs=1e-9)


@given(elements)
def test_inverse(a):
    x = QUARTIC.element(a)
    assume(not x.is_zero())
    assert x * x.inverse() == 1


@given(elements, elements)
def test_sign_agrees_with_float_when_separated(a, b):
    x = GOLDEN.element(a) - GOLDEN.element(b)
    f = float(x)
    assume(abs(f) > 1e-9)
    assert x.sign() == (1 if f > 0 else -1)


def test_exact_zero_detection():
    b = GOLDEN.gen
    assert (b * b - b - 1).is_zero()
    assert ((5 - 3 * b) * b ** 4 - 1).is_zero()
    assert (b ** -4 - (5 - 3 * b)).is_zero()


def test_division_by_zero():
    b = GOLDEN.gen
    with pytest.raises(DivisionByZero):
        (b * b - b) / (b * b - b - 1 + 1 - b * b + b)
    with pytest.raises(ZeroDivisionError):
        1 / (b - b)


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        GOLDEN.gen + QUARTIC.gen


def test_reducible_defining_polynomial():
    # x^3 - 2x on (1, 2) is sqrt(2); Q(beta) arithmetic must still be exact
    beta = AlgebraicReal((0, -2, 0, 1), (1, 2))
    b = beta.gen
    assert (b * b - 2).is_zero()
    assert (1 / b) * b == 1


def test_parse_element():
    e = parse_element("1 - b/2", GOLDEN)
    assert e == 1 - GOLDEN.gen / 2
    assert parse_element("b^-4", GOLDEN) == 5 - 3 * GOLDEN.gen
    with pytest.raises(ParseError):
        parse_element("__import__('os')", GOLDEN)


def test_orbit_index_finds_equal_values():
    idx = OrbitIndex(GOLDEN)
    b = GOLDEN.gen
    assert idx.find_or_add(b - 1, 0) is None
    assert idx.find_or_add(1 / b, 1) == 0
    assert idx.find_or_add(b / 2, 2) is None
