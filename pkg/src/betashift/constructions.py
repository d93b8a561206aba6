"""The family beta_{n,k}, alpha_{n,k} = 1 - beta_{n,k}/2 and its kneading words.

beta_{n,k} is the root in (1, 2) of P_{n,k}(x) = P_{n,0}(x^(2^k)), where
P_{n,0}(x) = x^n - x^(n-1) - ... - 1 defines the multinacci number gamma_n.
The words xi^-_{n,k} are built by a recursion on k; xi^+ is the bit-flip.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .dynamics import Params, project
from .exactnum import AlgebraicReal, IntPoly, count_roots, sign_at
from .words import EPWord, kappa_subst, lex_compare, shift, star


@dataclass(frozen=True, order=True)
class FamilyIndex:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 2 or self.k < 0:
            raise ValueError(f"need n >= 2 and k >= 0, got n={self.n}, k={self.k}")

    @property
    def period(self) -> int:
        return (self.n + 1) * 2 ** self.k


def _idx(idx, k=None) -> FamilyIndex:
    if isinstance(idx, FamilyIndex):
        return idx
    if k is None:
        return FamilyIndex(*idx)
    return FamilyIndex(idx, k)


def multinacci_polynomial(n: int) -> IntPoly:
    return IntPoly((-1,) * n + (1,))


@lru_cache(maxsize=None)
def multinacci(n: int) -> AlgebraicReal:
    """gamma_n, the root in (1, 2) of x^n - x^(n-1) - ... - 1."""
    if n < 2:
        raise ValueError("multinacci numbers need n >= 2")
    return AlgebraicReal(multinacci_polynomial(n), (1, 2))


def family_polynomial(idx, k=None) -> IntPoly:
    idx = _idx(idx, k)
    return multinacci_polynomial(idx.n).compose_power(2 ** idx.k)


@lru_cache(maxsize=None)
def family_beta(n: int, k: int) -> AlgebraicReal:
    return AlgebraicReal(family_polynomial(FamilyIndex(n, k)), (1, 2))


def family_params(idx, k=None) -> Params:
    idx = _idx(idx, k)
    beta = family_beta(idx.n, idx.k)
    return Params(beta, 1 - beta.gen / 2)


# ---------------------------------------------------------------------------
# words


@lru_cache(maxsize=None)
def _xi_minus_period(n: int, k: int) -> tuple[int, ...]:
    if k == 0:
        return (0,) + (1,) * n
    prev = _xi_minus_period(n, k - 1)
    a = prev[: 2 ** (k - 1)]
    sa = star(a)
    return a + sa + (sa + a) * n


def xi_word(idx, sign: str = "minus", k=None) -> EPWord:
    """xi^-_{n,k} (sign 'minus') or xi^+_{n,k} (sign 'plus')."""
    idx = _idx(idx, k)
    w = EPWord((), _xi_minus_period(idx.n, idx.k))
    if sign in ("minus", "-"):
        return w
    if sign in ("plus", "+"):
        return star(w)
    raise ValueError(f"sign must be 'plus' or 'minus', got {sign!r}")


def xi_word_by_substitution(idx, k=None) -> EPWord:
    """xi^-_{n,k} rebuilt from the substitution 0 -> 01, 1 -> 10.

    The leading block of length 2^k is the k-fold substitution image of (0),
    and the period is that block followed by n copies of its flip.
    """
    idx = _idx(idx, k)
    block: tuple[int, ...] = (0,)
    for _ in range(idx.k):
        block = kappa_subst(block)
    return EPWord((), block + star(block) * idx.n)


def fourblock_holds(idx, k=None) -> bool:
    """For 2 <= l <= k: the 2^(k-l+2)-prefix of xi^-_{n,k} is (a, *a, *a, a) with
    a the 2^(k-l)-prefix of xi^-_{n,k-l}, and the plus word is its flip."""
    idx = _idx(idx, k)
    minus, plus = xi_word(idx, "minus"), xi_word(idx, "plus")
    for l in range(2, idx.k + 1):
        a = xi_word(FamilyIndex(idx.n, idx.k - l), "minus").prefix(2 ** (idx.k - l))
        sa = star(a)
        size = 2 ** (idx.k - l + 2)
        if minus.prefix(size) != a + sa + sa + a:
            return False
        if plus.prefix(size) != sa + a + a + sa:
            return False
    return True


# ---------------------------------------------------------------------------
# verification battery


def self_admissible(minus: EPWord, plus: EPWord) -> bool:
    """For every m >= 1: (s^m(x-) <= x- or s^m(x-) > x+) and (s^m(x+) < x- or s^m(x+) >= x+)."""
    for w, is_minus in ((minus, True), (plus, False)):
        for m in range(1, len(w.pre) + len(w.per) + 1):
            s = shift(w, m)
            c_lo, c_hi = lex_compare(s, minus), lex_compare(s, plus)
            if is_minus:
                ok = c_lo <= 0 or c_hi > 0
            else:
                ok = c_lo < 0 or c_hi >= 0
            if not ok:
                return False
    return True


def verify_self_admissible(idx, k=None) -> bool:
    idx = _idx(idx, k)
    return self_admissible(xi_word(idx, "minus"), xi_word(idx, "plus"))


def prefix_difference_poly(idx, k=None) -> tuple[int, ...]:
    """Coefficients (constant first) of x^(2^k) * sum_{m<=2^k} (xi_m - *(xi)_m) x^-m."""
    idx = _idx(idx, k)
    size = 2 ** idx.k
    a = xi_word(idx, "minus").prefix(size)
    # term m contributes d_m x^(size - m)
    coeffs = [0] * size
    for m, bit in enumerate(a, start=1):
        coeffs[size - m] = bit - (1 - bit)
    return tuple(coeffs)


SAMPLE_POINTS = tuple(Fraction(1) + Fraction(j, 16) for j in range(1, 16))


def verify_maximal_root(idx, k=None) -> bool:
    """Three checks that beta_{n,k} is the largest real root of the kneading series.

    (a) the one-period sum of (xi- - xi+) beta^-m vanishes exactly;
    (b) P_{n,k} has no real root in (beta_{n,k}, 2);
    (c) the 2^k-prefix sum is negative at sampled rationals in (1, 2).
    """
    idx = _idx(idx, k)
    beta = family_beta(idx.n, idx.k)
    b = beta.gen
    binv = 1 / b
    minus, plus = xi_word(idx, "minus"), xi_word(idx, "plus")
    total = beta.zero
    q = beta.one
    for m in range(idx.period):
        q = q * binv
        d = minus[m] - plus[m]
        if d:
            total = total + d * q
    a_ok = total.is_zero()
    f = beta.defining.coeffs
    b_ok = count_roots(f, beta.isolating.lo, 2) == 1 and sign_at(f, 2) != 0
    poly = prefix_difference_poly(idx)
    # x^(2^k) > 0, so the sign of the scaled polynomial is the sign of the sum
    c_ok = all(sign_at(poly, x) < 0 for x in SAMPLE_POINTS)
    return a_ok and b_ok and c_ok


def verify_projection_half(idx, k=None, params: Params | None = None) -> bool:
    """Both xi words project to exactly 1/2 (at alpha_{n,k} unless params given)."""
    idx = _idx(idx, k)
    params = params or family_params(idx)
    half = Fraction(1, 2)
    return all(project(params, xi_word(idx, s)) == half for s in ("minus", "plus"))
