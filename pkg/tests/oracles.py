"""Independent reference computations used by the test-suite.

Nothing here goes through the follower automaton or the lexicographic
machinery: languages are computed from the maps themselves by intersecting
exact affine constraints on the starting point.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath

from betashift.exactnum import FieldElement
from betashift.dynamics import Params


class _Feasible:
    """The set of starting points x as an interval with open/closed ends."""

    __slots__ = ("lo", "lo_open", "hi", "hi_open")

    def __init__(self, lo, lo_open, hi, hi_open):
        self.lo, self.lo_open, self.hi, self.hi_open = lo, lo_open, hi, hi_open

    def cut_lower(self, v, strict):
        c = (v - self.lo).sign()
        if c > 0:
            return _Feasible(v, strict, self.hi, self.hi_open)
        if c == 0:
            return _Feasible(self.lo, self.lo_open or strict, self.hi, self.hi_open)
        return self

    def cut_upper(self, v, strict):
        c = (v - self.hi).sign()
        if c < 0:
            return _Feasible(self.lo, self.lo_open, v, strict)
        if c == 0:
            return _Feasible(self.lo, self.lo_open, self.hi, self.hi_open or strict)
        return self

    def empty(self):
        c = (self.hi - self.lo).sign()
        return c < 0 or (c == 0 and (self.lo_open or self.hi_open))


def brute_language(
    params: Params, m: int, variant: str, extended: bool = False, open_end: bool = False
) -> set:
    """{prefixes of length m of tau^variant(x)} for x in [0,1] (or the extended interval).

    With iterate x_i = beta^i x + c_i, the symbol at step i is 0 iff x_i <= p
    (minus) or x_i < p (plus); each symbol is an affine constraint on x.
    """
    b, a, p = params.b, params.alpha, params.p
    if extended:
        lo, hi = params.extended_domain
    else:
        lo, hi = params.beta.zero, params.beta.one
    out = set()
    minus = variant == "minus"
    # open_end drops the endpoint whose orbit the map's convention treats
    # one-sidedly: x = 1 for the plus map and x = 0 for the minus map
    start = _Feasible(lo, open_end and minus, hi, open_end and not minus)

    def rec(word, feas, scale, const):
        if feas.empty():
            return
        if len(word) == m:
            out.add(tuple(word))
            return
        # x_i = scale * x + const; constraint on x_i translated to x
        for s in (0, 1):
            if s == 0:
                # x_i <= p (minus) or x_i < p (plus)
                bound = (p - const) / scale
                f2 = feas.cut_upper(bound, strict=not minus)
            else:
                bound = (p - const) / scale
                f2 = feas.cut_lower(bound, strict=minus)
            rec(word + [s], f2, scale * b, const * b + a - s)

    rec([], start, params.beta.one, params.beta.zero)
    return out


def brute_union_language(params: Params, m: int, extended: bool = False, open_end: bool = False) -> set:
    return brute_language(params, m, "plus", extended, open_end) | brute_language(
        params, m, "minus", extended, open_end
    )


def _mp(v):
    if isinstance(v, Fraction):
        return mpmath.mpf(v.numerator) / v.denominator
    return mpmath.mpf(v)


def float_orbit(beta, alpha, x, n: int, minus: bool, dps: int = 60) -> list[int]:
    """Symbols of the map at high floating precision (ties decided with a tiny slack).

    Arguments may be floats, Fractions or decimal strings.
    """
    with mpmath.workdps(dps):
        b, a, x = _mp(beta), _mp(alpha), _mp(x)
        p = (1 - a) / b
        eps = mpmath.mpf(10) ** (-(dps - 10))
        out = []
        for _ in range(n):
            if minus:
                s = 0 if x <= p + eps else 1
            else:
                s = 0 if x < p - eps else 1
            out.append(s)
            x = b * x + a - s
        return out


def brute_pm1_search(value: float, degree: int, tol: float = 1e-9):
    """All {-1,0,1} polynomials of degree <= ``degree`` with leading coefficient 1 vanishing
    numerically at ``value`` (exhaustive; for small degrees only)."""
    hits = []
    for d in range(1, degree + 1):
        for coeffs in itertools.product((-1, 0, 1), repeat=d):
            c = list(coeffs) + [1]
            v = sum(ci * value ** i for i, ci in enumerate(c))
            if abs(v) < tol:
                hits.append(tuple(c))
    return hits


def lex_by_expansion(u, v, n: int) -> int:
    a, b = u.prefix(n), v.prefix(n)
    return (a > b) - (a < b)


def _cmp(u, v) -> int:
    """Lexicographic comparison of eventually periodic words, symbol by symbol."""
    n = len(u.pre) + len(v.pre) + math.lcm(len(u.per), len(v.per)) + 1
    for i in range(n):
        a, b = u[i], v[i]
        if a != b:
            return -1 if a < b else 1
    return 0


def _expand(w, n: int) -> str:
    return "".join(map(str, w.prefix(n)))


def literal_ep_admissible(w, tau_minus, tau_plus, space: str) -> bool:
    """Transcription of the lexicographic window conditions on every shift of w.

    ``space`` is one of "plus", "minus", "tilde_plus", "tilde_minus".
    """
    from betashift.words import shift

    lower, upper = shift(tau_plus, 1), shift(tau_minus, 1)
    ext = space.startswith("tilde")
    plus = space.endswith("plus")
    for k in range(len(w.pre) + len(w.per)):
        s = shift(w, k)
        if s[0] == 0:
            if not ext and _cmp(s, lower) < 0:
                return False
            c = _cmp(s, tau_minus)
            if c > 0 or (c == 0 and plus):
                return False
        else:
            if not ext and _cmp(s, upper) > 0:
                return False
            c = _cmp(s, tau_plus)
            if c < 0 or (c == 0 and not plus):
                return False
    return True


def ep_extension_language(tau_minus, tau_plus, m: int, space: str, extra: int | None = None) -> set:
    """Words of length m having an admissible eventually periodic extension.

    Continuations are explored depth-first with a cheap necessary test on
    finite segments; at full depth every split into preperiod/period is
    tried, shortest period first.  ``extra`` is the continuation length.
    """
    from betashift.words import EPWord, shift

    if extra is None:
        extra = 2 * (len(tau_minus.pre) + len(tau_minus.per) + len(tau_plus.pre) + len(tau_plus.per)) + 2
    n_total = m + extra
    A = _expand(shift(tau_plus, 1), n_total)
    B = _expand(tau_minus, n_total)
    C = _expand(tau_plus, n_total)
    D = _expand(shift(tau_minus, 1), n_total)
    ext = space.startswith("tilde")

    def ok_tail(s: str) -> bool:
        for i in range(len(s)):
            seg = s[i:]
            L = len(seg)
            if seg[0] == "0":
                if (not ext and seg < A[:L]) or seg > B[:L]:
                    return False
            else:
                if seg < C[:L] or (not ext and seg > D[:L]):
                    return False
        return True

    def witness(s: str) -> bool:
        if len(s) == n_total:
            bits = tuple(int(c) for c in s)
            for j in range(n_total - 1, -1, -1):
                if literal_ep_admissible(EPWord(bits[:j], bits[j:]), tau_minus, tau_plus, space):
                    return True
            return False
        for c in "01":
            t = s + c
            if ok_tail(t) and witness(t):
                return True
        return False

    out = set()

    def words(s: str):
        if len(s) == m:
            if witness(s):
                out.add(tuple(int(c) for c in s))
            return
        for c in "01":
            t = s + c
            if ok_tail(t):
                words(t)

    words("")
    return out
