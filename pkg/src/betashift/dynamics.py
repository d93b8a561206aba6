"""Intermediate beta-transformations and their symbolic expansions.

For 1 < beta < 2 and 0 <= alpha <= 2 - beta the map x -> beta*x + alpha mod 1
has one discontinuity at p = (1 - alpha)/beta.  The two variants differ only
at p: the plus map sends p to 0, the minus map sends it to 1.  All orbit
points live in Q(beta), so periodicity of an expansion is decided exactly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exactnum import (
    AlgebraicReal,
    FieldElement,
    IntPoly,
    OrbitIndex,
    parse_element,
)
from .words import EPWord, shift

DEFAULT_MAX_ITER = 4096


class DomainError(ValueError):
    """Parameters outside the admissible region, or a point outside the map's domain."""


class OutOfDomain(DomainError):
    pass


class Variant(enum.Enum):
    PLUS = "plus"
    MINUS = "minus"

    @classmethod
    def coerce(cls, v: "Variant | str") -> "Variant":
        if isinstance(v, Variant):
            return v
        return {"+": cls.PLUS, "-": cls.MINUS}.get(v) or cls(v)


class Status(enum.Enum):
    PERIODIC = "Periodic"
    EVENTUALLY_PERIODIC = "EventuallyPeriodic"
    UNKNOWN = "UnknownAtDepth"


Scalar = Union[FieldElement, int, Fraction, str]


class Params:
    """A validated parameter pair (beta, alpha) with the discontinuity p cached."""

    __slots__ = ("beta", "alpha", "b", "p")

    def __init__(self, beta: AlgebraicReal, alpha: Scalar):
        if not isinstance(beta, AlgebraicReal):
            beta = AlgebraicReal.from_rational(beta)
        if not (beta.compare(1) > 0 and beta.compare(2) < 0):
            raise DomainError(f"beta must lie in (1, 2), got {beta.approx(12)}")
        if isinstance(alpha, str):
            alpha = parse_element(alpha, beta)
        elif not isinstance(alpha, FieldElement):
            alpha = beta.const(Fraction(alpha))
        elif alpha.ctx is not beta:
            if not beta.same_number(alpha.ctx):
                raise DomainError("alpha must be an element of Q(beta) over the same beta")
            alpha = FieldElement(beta, alpha.rep)
        b = beta.gen
        if alpha.sign() < 0 or (2 - b - alpha).sign() < 0:
            raise DomainError(f"alpha = {alpha} is outside [0, 2 - beta]")
        self.beta = beta
        self.alpha = alpha
        self.b = b
        self.p = (1 - alpha) / b

    @classmethod
    def greedy(cls, beta: AlgebraicReal) -> "Params":
        return cls(beta, 0)

    @classmethod
    def lazy(cls, beta: AlgebraicReal) -> "Params":
        return cls(beta, 2 - beta.gen)

    @classmethod
    def from_text(cls, beta_poly: str, interval: tuple, alpha_expr: str) -> "Params":
        beta = AlgebraicReal(IntPoly.parse(beta_poly), interval)
        return cls(beta, parse_element(alpha_expr, beta))

    def mirror(self) -> "Params":
        """The symmetric parameter (beta, 2 - beta - alpha)."""
        return Params(self.beta, 2 - self.b - self.alpha)

    @property
    def is_greedy(self) -> bool:
        return self.alpha.is_zero()

    @property
    def is_lazy(self) -> bool:
        return (2 - self.b - self.alpha).is_zero()

    @property
    def is_interior(self) -> bool:
        return not (self.is_greedy or self.is_lazy)

    @property
    def extended_domain(self) -> tuple[FieldElement, FieldElement]:
        """Endpoints of the extended model's interval."""
        d = self.b - 1
        return (-self.alpha / d, (1 - self.alpha) / d)

    def element(self, x: Scalar) -> FieldElement:
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, str):
            return parse_element(x, self.beta)
        return self.beta.const(Fraction(x))

    def __repr__(self):
        return f"Params(beta~{self.beta.approx(10)}, alpha={self.alpha})"


@dataclass(frozen=True)
class KneadingResult:
    """An expansion: a certified eventually periodic word, or a finite prefix.

    ``orbit_len`` counts the distinct orbit points visited and ``cycle_len``
    is the length of the orbit cycle (0 when unknown).
    """

    word: EPWord | None
    prefix: tuple[int, ...]
    status: Status
    orbit_len: int
    cycle_len: int

    @property
    def depth(self) -> int:
        return len(self.prefix)

    @property
    def is_periodic(self) -> bool:
        return self.status is Status.PERIODIC

    @property
    def known(self) -> bool:
        return self.word is not None

    def text(self) -> str:
        if self.word is not None:
            return str(self.word)
        return "".join(map(str, self.prefix)) + "..."

    def to_json(self) -> dict:
        out = {
            "word": str(self.word) if self.word is not None else None,
            "status": self.status.value,
            "orbit_len": self.orbit_len,
            "cycle_len": self.cycle_len,
        }
        if self.word is None:
            out["depth"] = len(self.prefix)
            out["prefix"] = "".join(map(str, self.prefix))
        return out


def _symbol(params: Params, x: FieldElement, variant: Variant) -> int:
    c = (x - params.p).sign()
    if variant is Variant.MINUS:
        return 0 if c <= 0 else 1
    return 0 if c < 0 else 1


def _check_unit(x: FieldElement) -> None:
    if x.sign() < 0 or (x - 1).sign() > 0:
        raise OutOfDomain(f"x = {x} is outside [0, 1]")


def step(params: Params, x: Scalar, variant: Variant | str) -> tuple[int, FieldElement]:
    """One application of the map: returns (symbol, image)."""
    variant = Variant.coerce(variant)
    x = params.element(x)
    _check_unit(x)
    s = _symbol(params, x, variant)
    return s, params.b * x + params.alpha - s


def _expand(params: Params, x: FieldElement, variant: Variant, max_iter: int) -> KneadingResult:
    ctx = params.beta
    if ctx.rational is not None:
        return _expand_rational(params, x, variant, max_iter)
    index = OrbitIndex(ctx)
    symbols: list[int] = []
    b, a, p = params.b, params.alpha, params.p
    minus = variant is Variant.MINUS
    for i in range(max_iter + 1):
        hit = index.find_or_add(x, i)
        if hit is not None:
            return _certified(symbols, hit, i)
        if i == max_iter:
            break
        c = (x - p).sign()
        s = (0 if c <= 0 else 1) if minus else (0 if c < 0 else 1)
        symbols.append(s)
        x = b * x + a - s
    return KneadingResult(None, tuple(symbols), Status.UNKNOWN, max_iter, 0)


def _expand_rational(params: Params, x: FieldElement, variant: Variant, max_iter: int) -> KneadingResult:
    # rational beta: plain Fractions are much faster than field elements
    b = params.beta.rational
    a = Fraction(params.alpha.rep[0]) if params.alpha.rep else Fraction(0)
    p = (1 - a) / b
    xv = Fraction(x.rep[0]) if x.rep else Fraction(0)
    seen: dict[Fraction, int] = {}
    symbols: list[int] = []
    minus = variant is Variant.MINUS
    for i in range(max_iter + 1):
        hit = seen.get(xv)
        if hit is not None:
            return _certified(symbols, hit, i)
        seen[xv] = i
        if i == max_iter:
            break
        s = (0 if xv <= p else 1) if minus else (0 if xv < p else 1)
        symbols.append(s)
        xv = b * xv + a - s
    return KneadingResult(None, tuple(symbols), Status.UNKNOWN, max_iter, 0)


def _certified(symbols: list[int], start: int, stop: int) -> KneadingResult:
    word = EPWord(symbols[:start], symbols[start:stop])
    status = Status.PERIODIC if word.is_periodic else Status.EVENTUALLY_PERIODIC
    return KneadingResult(word, tuple(symbols), status, stop, stop - start)


def tau_expansion(
    params: Params, x: Scalar, variant: Variant | str, max_iter: int = DEFAULT_MAX_ITER
) -> KneadingResult:
    """The plus- or minus-expansion of x in [0, 1], with exact cycle detection."""
    variant = Variant.coerce(variant)
    x = params.element(x)
    _check_unit(x)
    return _expand(params, x, variant, max_iter)


def tau_tilde_expansion(
    params: Params, x: Scalar, variant: Variant | str, max_iter: int = DEFAULT_MAX_ITER
) -> KneadingResult:
    """Expansion of x under the extended model (both branches affine, no wrap)."""
    variant = Variant.coerce(variant)
    x = params.element(x)
    lo, hi = params.extended_domain
    if (x - lo).sign() < 0 or (x - hi).sign() > 0:
        raise OutOfDomain(f"x = {x} is outside the extended domain")
    return _expand(params, x, variant, max_iter)


def kneading_pair(params: Params, max_iter: int = DEFAULT_MAX_ITER) -> tuple[KneadingResult, KneadingResult]:
    """(tau_minus(p), tau_plus(p))."""
    return (
        _expand(params, params.p, Variant.MINUS, max_iter),
        _expand(params, params.p, Variant.PLUS, max_iter),
    )


def project(params: Params, w: EPWord) -> FieldElement:
    """alpha/(1 - beta) + sum_k w_k beta^-k, summed exactly as a geometric series."""
    b = params.b
    binv = 1 / b
    total = params.alpha / (1 - b)
    scale = params.beta.one
    for s in w.pre:
        scale = scale * binv
        if s:
            total = total + scale
    head = params.beta.zero
    q = params.beta.one
    for s in w.per:
        q = q * binv
        if s:
            head = head + q
    # sum over the repeating block: head * 1/(1 - beta^-L), with beta^-L = q
    return total + scale * head / (1 - q)


def check_commutation(params: Params, w: EPWord) -> bool:
    """Does pi(sigma w) equal the map applied to pi(w), on the branch named by w_1?

    The branch must also be one the map can take at pi(w): symbol 0 needs
    x <= p and symbol 1 needs x >= p.
    """
    x = project(params, w)
    if x.sign() < 0 or (x - 1).sign() > 0:
        return False
    s = w[0]
    c = (x - params.p).sign()
    if (s == 0 and c > 0) or (s == 1 and c < 0):
        return False
    return project(params, shift(w, 1)) == params.b * x + params.alpha - s
