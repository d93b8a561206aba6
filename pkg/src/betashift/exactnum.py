"""Exact arithmetic for real algebraic numbers and for elements of Q(beta).

Polynomials are tuples of coefficients, constant term first.  Rational
polynomials use :class:`fractions.Fraction` coefficients; :class:`IntPoly`
wraps integer ones.  A real algebraic number is a squarefree integer
polynomial together with a rational interval isolating one of its roots
(certified with a Sturm sequence).  Field elements are canonical remainders
modulo the defining polynomial; their signs are decided exactly.

No tolerance exists anywhere in this module.
"""
from __future__ import annotations

import ast
import math
import threading
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]
QPoly = tuple  # tuple[Fraction, ...], constant term first


class ExactArithmeticError(ArithmeticError):
    pass


class ContextMismatch(ExactArithmeticError):
    """Raised when combining field elements over different algebraic numbers."""


class DivisionByZero(ExactArithmeticError, ZeroDivisionError):
    """Raised when dividing by an element that is exactly zero."""


class ParseError(ValueError):
    pass


# ---------------------------------------------------------------------------
# rational polynomial helpers


def _trim(c: Iterable) -> QPoly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def qpoly(coeffs: Iterable[Rational]) -> QPoly:
    return _trim(Fraction(x) for x in coeffs)


def degree(a: QPoly) -> int:
    return len(a) - 1


def padd(a: QPoly, b: QPoly) -> QPoly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])


def pneg(a: QPoly) -> QPoly:
    return tuple(-x for x in a)


def psub(a: QPoly, b: QPoly) -> QPoly:
    return padd(a, pneg(b))


def pscale(a: QPoly, q: Rational) -> QPoly:
    if q == 0:
        return ()
    return tuple(x * q for x in a)


def pmul(a: QPoly, b: QPoly) -> QPoly:
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def pdivmod(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = c / lead
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] -= c * b[j]
    return _trim(q), _trim(r[:db])


def pmod(a: QPoly, b: QPoly) -> QPoly:
    if len(a) < len(b):
        return _trim(a)
    return pdivmod(a, b)[1]


def pmonic(a: QPoly) -> QPoly:
    if not a:
        return a
    return pscale(a, 1 / a[-1])


def pgcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic gcd over Q."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, pmod(a, b)
    return pmonic(a)


def pderiv(a: QPoly) -> QPoly:
    return _trim(i * a[i] for i in range(1, len(a)))


def peval(a: QPoly, x: Rational) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pcompose_neg(a: QPoly) -> QPoly:
    """Coefficients of a(-x)."""
    return tuple(c if i % 2 == 0 else -c for i, c in enumerate(a))


def primitive_int(a: QPoly) -> tuple[int, ...]:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    a = _trim(a)
    if not a:
        return ()
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    if ints[-1] < 0:
        g = -g
    return tuple(c // g for c in ints)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# Sturm sequences


@lru_cache(maxsize=512)
def sturm_sequence(f: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Sturm chain of a squarefree integer polynomial.

    Each remainder is rescaled by a positive constant to a primitive integer
    polynomial, which preserves all sign patterns.
    """
    f = tuple(f)
    seq = [f]
    d = primitive_int(pderiv(qpoly(f)))
    if not d:
        return tuple(seq)
    seq.append(d)
    while True:
        r = pmod(qpoly(seq[-2]), qpoly(seq[-1]))
        if not r:
            break
        # -rem, scaled by a positive factor
        r = pneg(r)
        den = 1
        for c in r:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in r]
        g = 0
        for c in ints:
            g = math.gcd(g, c)
        seq.append(tuple(c // g for c in ints))
    return tuple(seq)


def sign_at(f: Sequence[int], x: Rational) -> int:
    """Exact sign of the integer polynomial f at rational x."""
    x = Fraction(x)
    n, d = x.numerator, x.denominator
    # homogeneous Horner: d**deg * f(n/d), with d > 0
    acc = 0
    dpow = 1
    for c in reversed(f):
        acc = acc * n + c * dpow
        dpow *= d
    return _sign(acc)


def _sign_changes(values: Iterable[int]) -> int:
    last = 0
    count = 0
    for s in values:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _variations(seq, x: Fraction, drop_head_if_root: bool) -> int:
    signs = [sign_at(p, x) for p in seq]
    if drop_head_if_root and signs[0] == 0:
        signs = signs[1:]
    return _sign_changes(signs)


def count_roots(f: Sequence[int], lo: Rational, hi: Rational) -> int:
    """Number of distinct real roots of f in the open interval (lo, hi)."""
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        return 0
    sf = squarefree(tuple(f))
    if len(sf) <= 1:
        return 0
    seq = sturm_sequence(sf)
    n = _variations(seq, lo, True) - _variations(seq, hi, False)
    if sign_at(sf, hi) == 0:
        n -= 1
    return n


def squarefree(f: Sequence[int]) -> tuple[int, ...]:
    """Squarefree part f / gcd(f, f'), primitive with positive leading coefficient."""
    q = qpoly(f)
    if len(q) <= 1:
        return primitive_int(q)
    g = pgcd(q, pderiv(q))
    if len(g) > 1:
        q = pdivmod(q, g)[0]
    return primitive_int(q)


# ---------------------------------------------------------------------------
# intervals


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x: Rational) -> "RationalInterval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Rational) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other):
        if not isinstance(other, RationalInterval):
            other = RationalInterval.point(other)
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        if not isinstance(other, RationalInterval):
            other = RationalInterval.point(other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RationalInterval):
            other = Fraction(other)
            a, b = self.lo * other, self.hi * other
            return RationalInterval(min(a, b), max(a, b))
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RationalInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def __float__(self):
        return float(self.mid)


def interval_eval(a: QPoly, x: RationalInterval) -> RationalInterval:
    """Enclosure of {a(t) : t in x} by interval Horner evaluation."""
    if not a:
        return RationalInterval.point(0)
    acc = RationalInterval.point(a[-1])
    for c in reversed(a[:-1]):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# integer polynomials


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def parse(cls, text: str, var: str = "x") -> "IntPoly":
        """Parse e.g. ``"x^4-x^2-1"``; rational coefficients are cleared."""
        return cls(primitive_int(parse_qpoly(text, var)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly(tuple(i * self.coeffs[i] for i in range(1, len(self.coeffs))))

    def squarefree(self) -> "IntPoly":
        return IntPoly(squarefree(self.coeffs))

    def compose_power(self, e: int) -> "IntPoly":
        """The polynomial x -> self(x**e)."""
        out = [0] * (self.degree * e + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * e] = c
        return IntPoly(tuple(out))

    def __str__(self) -> str:
        return format_poly(self.coeffs, "x")


def format_poly(coeffs: Sequence[Rational], var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            if a == 1:
                body = mono
            elif a.denominator == 1:
                body = f"{a}*{mono}"
            else:
                body = (mono if a.numerator == 1 else f"{a.numerator}*{mono}") + f"/{a.denominator}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f"{sign}{body}"
    return out


# ---------------------------------------------------------------------------
# real algebraic numbers


class AlgebraicReal:
    """A real root of a squarefree integer polynomial, isolated by a rational interval.

    The isolating interval is open and its endpoints are never roots.  Values
    are immutable; tighter enclosures are memoised internally.
    """

    __slots__ = ("defining", "isolating", "_seq", "_lo_sign", "_cache", "_lock", "_rational")

    def __init__(self, defining, isolating):
        f = defining.coeffs if isinstance(defining, IntPoly) else tuple(defining)
        f = squarefree(f)
        if len(f) < 2:
            raise ValueError("defining polynomial must have degree >= 1")
        if isinstance(isolating, RationalInterval):
            lo, hi = isolating.lo, isolating.hi
        else:
            lo, hi = (Fraction(v) for v in isolating)
        n = count_roots(f, lo, hi)
        if n != 1:
            raise ValueError(
                f"interval ({lo}, {hi}) contains {n} roots of {format_poly(f)}, expected exactly 1"
            )
        self.defining = IntPoly(f)
        self._rational = None
        if len(f) == 2:
            self._rational = Fraction(-f[0], f[1])
        # move endpoints inward until they are not roots of f
        if sign_at(f, lo) == 0:
            lo = _nudge(f, lo, hi)
        if sign_at(f, hi) == 0:
            hi = _nudge(f, hi, lo)
        self.isolating = RationalInterval(lo, hi)
        self._seq = None
        self._lo_sign = sign_at(f, lo)
        self._cache: dict[int, RationalInterval] = {}
        self._lock = threading.Lock()

    # construction helpers -------------------------------------------------

    @classmethod
    def from_rational(cls, q: Rational) -> "AlgebraicReal":
        q = Fraction(q)
        return cls(IntPoly((-q.numerator, q.denominator)), (q - 1, q + 1))

    @property
    def rational(self) -> Fraction | None:
        """The exact value when the defining polynomial is linear."""
        return self._rational

    @property
    def degree(self) -> int:
        return self.defining.degree

    # enclosure ------------------------------------------------------------

    def interval_at(self, bits: int) -> RationalInterval:
        """An enclosure of width at most 2**-bits (closed; contains the root)."""
        if self._rational is not None:
            return RationalInterval.point(self._rational)
        target = Fraction(1, 2 ** bits)
        with self._lock:
            best = None
            for b, iv in self._cache.items():
                if iv.width <= target and (best is None or iv.width > best.width):
                    best = iv
            if best is not None:
                return best
            start = self.isolating
            for b, iv in self._cache.items():
                if iv.width < start.width:
                    start = iv
            f = self.defining.coeffs
            lo, hi = start.lo, start.hi
            s_lo = self._lo_sign
            while hi - lo > target:
                mid = (lo + hi) / 2
                s = sign_at(f, mid)
                if s == 0:
                    lo = hi = mid
                    break
                if s == s_lo:
                    lo = mid
                else:
                    hi = mid
            iv = RationalInterval(lo, hi)
            self._cache[bits] = iv
            return iv

    def refine(self, bits: int) -> "AlgebraicReal":
        """A new AlgebraicReal with a tighter open isolating interval."""
        iv = self.interval_at(bits)
        if iv.width == 0:
            w = Fraction(1, 2 ** bits)
            return AlgebraicReal(self.defining, (iv.lo - w, iv.lo + w))
        return AlgebraicReal(self.defining, (iv.lo, iv.hi))

    def __float__(self) -> float:
        return float(self.interval_at(60).mid)

    def approx(self, digits: int = 30) -> str:
        bits = int(digits * 3.33) + 8
        import mpmath

        with mpmath.workdps(digits + 5):
            iv = self.interval_at(bits)
            return mpmath.nstr(mpmath.mpf(iv.mid.numerator) / iv.mid.denominator, digits)

    # identity and comparison ----------------------------------------------

    def is_root_of(self, g: QPoly) -> bool:
        """Exactly decide g(self) == 0 for a rational polynomial g."""
        g = _trim(g)
        if not g:
            return True
        if len(g) == 1:
            return False
        if self._rational is not None:
            return peval(g, self._rational) == 0
        h = pgcd(g, qpoly(self.defining.coeffs))
        if len(h) <= 1:
            return False
        iv = self.isolating
        return count_roots(primitive_int(h), iv.lo, iv.hi) == 1

    def compare(self, other: "AlgebraicReal | Rational") -> int:
        """Exact three-way comparison with another algebraic real or a rational."""
        if not isinstance(other, AlgebraicReal):
            other = Fraction(other)
            if self._rational is not None:
                return _sign(self._rational - other)
            if self.isolating.lo >= other:
                return 1
            if self.isolating.hi <= other:
                return -1
            if sign_at(self.defining.coeffs, other) == 0:
                return 0
            bits = 8
            while True:
                iv = self.interval_at(bits)
                if iv.lo > other:
                    return 1
                if iv.hi < other:
                    return -1
                bits *= 2
        if other is self:
            return 0
        a, b = self.isolating, other.isolating
        if a.hi <= b.lo:
            return -1
        if b.hi <= a.lo:
            return 1
        # equal iff the common factor has a root in the overlap
        g = pgcd(qpoly(self.defining.coeffs), qpoly(other.defining.coeffs))
        lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
        if len(g) > 1 and count_roots(primitive_int(g), lo, hi) >= 1:
            # any root of g in the overlap is a root of both defining polynomials
            # inside both isolating intervals, hence equals both numbers
            return 0
        bits = 16
        while True:
            x, y = self.interval_at(bits), other.interval_at(bits)
            if x.hi < y.lo:
                return -1
            if y.hi < x.lo:
                return 1
            bits *= 2

    def __eq__(self, other):
        if isinstance(other, (AlgebraicReal, int, Fraction)):
            return self.compare(other) == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.defining, "alg"))

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __neg__(self) -> "AlgebraicReal":
        iv = self.isolating
        return AlgebraicReal(pcompose_neg_int(self.defining.coeffs), (-iv.hi, -iv.lo))

    def __abs__(self) -> "AlgebraicReal":
        return -self if self.compare(0) < 0 else self

    def same_number(self, other: "AlgebraicReal") -> bool:
        return other is self or (self.defining == other.defining and self.compare(other) == 0)

    def __repr__(self):
        iv = self.isolating
        return f"AlgebraicReal({self.defining}, ({iv.lo}, {iv.hi}))"

    # field elements --------------------------------------------------------

    def element(self, rep: Iterable[Rational]) -> "FieldElement":
        return FieldElement(self, qpoly(rep))

    @property
    def gen(self) -> "FieldElement":
        """The element beta itself."""
        return self.element((0, 1))

    @property
    def one(self) -> "FieldElement":
        return self.element((1,))

    @property
    def zero(self) -> "FieldElement":
        return self.element(())

    def const(self, q: Rational) -> "FieldElement":
        return self.element((q,))


def _nudge(f, end: Fraction, other: Fraction) -> Fraction:
    """Move ``end`` towards ``other`` until it is not a root and still brackets the root."""
    step = (other - end) / 2
    while True:
        cand = end + step
        a, b = (cand, other) if cand < other else (other, cand)
        if sign_at(f, cand) != 0 and count_roots(f, a, b) == 1:
            return cand
        step /= 2


def pcompose_neg_int(f: Sequence[int]) -> tuple[int, ...]:
    out = tuple(c if i % 2 == 0 else -c for i, c in enumerate(f))
    if out and out[-1] < 0:
        out = tuple(-c for c in out)
    return out


def isolate_roots(p: IntPoly | Sequence[int], rng: RationalInterval | tuple | None = None) -> list[AlgebraicReal]:
    """All distinct real roots of p in the open interval ``rng``, increasing.

    Sturm counting with rational bisection.  With ``rng=None`` a Cauchy bound
    is used.
    """
    f = squarefree(p.coeffs if isinstance(p, IntPoly) else tuple(p))
    if len(f) < 2:
        if not f:
            raise ValueError("zero polynomial has no isolated roots")
        return []
    if rng is None:
        bound = 1 + max(Fraction(abs(c), abs(f[-1])) for c in f[:-1])
        bound = Fraction(math.ceil(bound))
        lo, hi = -bound, bound
    elif isinstance(rng, RationalInterval):
        lo, hi = rng.lo, rng.hi
    else:
        lo, hi = (Fraction(v) for v in rng)
    out: list[AlgebraicReal] = []
    stack = [(lo, hi)]
    while stack:
        a, b = stack.pop()
        n = count_roots(f, a, b)
        if n == 0:
            continue
        if n == 1:
            out.append(AlgebraicReal(f, (a, b)))
            continue
        m = (a + b) / 2
        if sign_at(f, m) == 0:
            out.append(AlgebraicReal.from_rational(m) if len(f) == 2 else _rational_root(f, m, a, b))
        stack.append((m, b))
        stack.append((a, m))
    out.sort(key=lambda r: r.isolating.lo)
    return out


def _rational_root(f, m: Fraction, a: Fraction, b: Fraction) -> AlgebraicReal:
    w = min(m - a, b - m) / 2
    while count_roots(f, m - w, m + w) != 1:
        w /= 2
    return AlgebraicReal(f, (m - w, m + w))


# ---------------------------------------------------------------------------
# field elements


class FieldElement:
    """An element of Q(beta): a rational polynomial in beta of degree < deg(defining).

    Arithmetic is exact; comparisons decide the sign of the difference exactly.
    Elements are not hashable because distinct remainders can denote the same
    real number when the defining polynomial is reducible; use :attr:`rep`
    as a key only together with an exact equality check.
    """

    __slots__ = ("ctx", "rep", "_encl")

    def __init__(self, ctx: AlgebraicReal, rep: QPoly):
        self.ctx = ctx
        f = ctx.defining.coeffs
        if len(rep) >= len(f):
            rep = pmod(rep, qpoly(f))
        self.rep = rep
        self._encl = None

    __hash__ = None  # type: ignore[assignment]

    # coercion -------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and not self.ctx.same_number(other.ctx):
                raise ContextMismatch("field elements live over different algebraic numbers")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.ctx, qpoly((other,)))
        raise TypeError(f"cannot combine FieldElement with {type(other).__name__}")

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(self.ctx, padd(self.rep, o.rep))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.ctx, pneg(self.rep))

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return FieldElement(self.ctx, psub(self.rep, o.rep))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(o.rep) <= 1:
            return FieldElement(self.ctx, pscale(self.rep, o.rep[0]) if o.rep else ())
        if len(self.rep) <= 1:
            return FieldElement(self.ctx, pscale(o.rep, self.rep[0]) if self.rep else ())
        return FieldElement(self.ctx, pmul(self.rep, o.rep))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("division by zero in Q(beta)")
        if len(self.rep) == 1:
            return FieldElement(self.ctx, (1 / self.rep[0],))
        f = qpoly(self.ctx.defining.coeffs)
        g = pgcd(self.rep, f)
        if len(g) > 1:
            # reducible modulus: beta is a root of f/g, on which rep is invertible
            f = pdivmod(f, g)[0]
        u = _inverse_mod(self.rep, f)
        return FieldElement(self.ctx, u)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(o.rep) == 1:
            return FieldElement(self.ctx, pscale(self.rep, 1 / o.rep[0]))
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # sign and order -------------------------------------------------------

    def enclosure(self, bits: int = 64) -> RationalInterval:
        if len(self.rep) <= 1:
            return RationalInterval.point(self.rep[0] if self.rep else 0)
        return interval_eval(self.rep, self.ctx.interval_at(bits))

    def is_zero(self) -> bool:
        if len(self.rep) <= 1:
            return not self.rep or self.rep[0] == 0
        if self.ctx.rational is not None:
            return peval(self.rep, self.ctx.rational) == 0
        if self.enclosure(64).excludes_zero():
            return False
        return self.ctx.is_root_of(self.rep)

    def sign(self) -> int:
        """Exact sign; zero is decided by a gcd + Sturm test, nonzero by refinement."""
        if not self.rep:
            return 0
        if len(self.rep) == 1:
            return _sign(self.rep[0])
        if self.ctx.rational is not None:
            return _sign(peval(self.rep, self.ctx.rational))
        bits = 64
        tested = False
        while True:
            iv = self.enclosure(bits)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            if not tested:
                if self.ctx.is_root_of(self.rep):
                    return 0
                tested = True
            bits *= 2

    def compare(self, other) -> int:
        return (self - other).sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement(self.ctx, qpoly((other,)))
        if not isinstance(other, FieldElement):
            return NotImplemented
        o = self._coerce(other)
        if o.rep == self.rep:
            return True
        return (self - o).is_zero()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    def __float__(self):
        return float(self.enclosure(64).mid)

    def __repr__(self):
        return f"FieldElement({format_poly(self.rep, 'b')})"

    def __str__(self):
        return format_poly(self.rep, "b")


def _inverse_mod(a: QPoly, f: QPoly) -> QPoly:
    """u with u*a = 1 mod f, assuming gcd(a, f) = 1."""
    r0, r1 = f, pmod(a, f)
    s0, s1 = (), (Fraction(1),)
    while len(r1) > 1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
    if not r1:
        raise DivisionByZero("element is not invertible modulo the defining polynomial")
    return pmod(pscale(s1, 1 / r1[0]), f)


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b


def fe_sign(a: FieldElement) -> int:
    return a.sign()


def fe_compare(a: FieldElement, b) -> int:
    return a.compare(b)


class OrbitIndex:
    """Exact membership index for field elements over one context.

    Lookup first tries the remainder representation (exact when equal);
    otherwise all stored elements whose enclosures overlap are compared
    exactly, so value-equal elements with different remainders are found too.
    """

    BITS = 96

    def __init__(self, ctx: AlgebraicReal):
        self.ctx = ctx
        self._by_rep: dict[QPoly, int] = {}
        self._canonical = ctx.rational is not None
        self._los: list[Fraction] = []
        self._entries: list[tuple[Fraction, Fraction, int, FieldElement]] = []
        self._max_width = Fraction(0)

    def __len__(self):
        return len(self._by_rep)

    def find_or_add(self, x: FieldElement, index: int) -> int | None:
        """Return the stored index of an element equal to x, else store x under index."""
        hit = self._by_rep.get(x.rep)
        if hit is not None:
            return hit
        if not self._canonical:
            iv = x.enclosure(self.BITS)
            start = bisect_left(self._los, iv.lo - self._max_width)
            stop = bisect_right(self._los, iv.hi)
            for lo, hi, idx, y in self._entries[start:stop]:
                if hi >= iv.lo and lo <= iv.hi and (x - y).is_zero():
                    self._by_rep[x.rep] = idx
                    return idx
            pos = bisect_left(self._los, iv.lo)
            self._los.insert(pos, iv.lo)
            self._entries.insert(pos, (iv.lo, iv.hi, index, x))
            self._max_width = max(self._max_width, iv.width)
        self._by_rep[x.rep] = index
        return None


# ---------------------------------------------------------------------------
# text syntax


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _parse_tree(text: str):
    try:
        return ast.parse(text.strip().replace("^", "**"), mode="eval").body
    except SyntaxError as exc:
        raise ParseError(f"malformed expression: {text!r}") from exc


def _walk(node, var: str, ops):
    """Evaluate an expression tree with the supplied ring operations."""
    const, symbol, add, sub, mul, div, power, neg = ops
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)) and not isinstance(node.value, bool):
        v = node.value
        return const(Fraction(str(v)) if isinstance(v, float) else Fraction(v))
    if isinstance(node, ast.Name):
        if node.id != var:
            raise ParseError(f"unknown symbol {node.id!r} (expected {var!r})")
        return symbol()
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand, var, ops)
        return neg(v) if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = node.right
            sgn = 1
            if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                sgn, e = -1, e.operand
            if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                raise ParseError("exponents must be integer literals")
            return power(_walk(node.left, var, ops), sgn * e.value)
        a = _walk(node.left, var, ops)
        b = _walk(node.right, var, ops)
        if isinstance(node.op, ast.Add):
            return add(a, b)
        if isinstance(node.op, ast.Sub):
            return sub(a, b)
        if isinstance(node.op, ast.Mult):
            return mul(a, b)
        if isinstance(node.op, ast.Div):
            return div(a, b)
    raise ParseError(f"unsupported syntax in expression: {ast.dump(node)}")


def parse_qpoly(text: str, var: str = "x") -> QPoly:
    """Parse a polynomial with rational coefficients in ``var``."""

    def div(a, b):
        if len(b) != 1:
            raise ParseError("polynomials may only be divided by nonzero constants")
        return pscale(a, 1 / b[0])

    def power(a, e):
        if e < 0:
            raise ParseError("negative exponents are not allowed in polynomials")
        out = (Fraction(1),)
        for _ in range(e):
            out = pmul(out, a)
        return out

    ops = (lambda q: qpoly((q,)), lambda: (Fraction(0), Fraction(1)), padd, psub, pmul, div, power, pneg)
    try:
        return _walk(_parse_tree(text), var, ops)
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc


def parse_element(text: str, ctx: AlgebraicReal, var: str = "b") -> FieldElement:
    """Parse an element of Q(beta) written as an expression in ``var`` (e.g. ``"1-b/2"``)."""
    ops = (
        ctx.const,
        lambda: ctx.gen,
        lambda a, b: a + b,
        lambda a, b: a - b,
        lambda a, b: a * b,
        lambda a, b: a / b,
        lambda a, e: a ** e,
        lambda a: -a,
    )
    try:
        return _walk(_parse_tree(text), var, ops)
    except ZeroDivisionError as exc:
        raise ParseError(f"division by zero in {text!r}") from exc
