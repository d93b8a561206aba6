"""Pisot and Perron tests, and the search for {-1,0,1} polynomials vanishing at beta.

Real roots are handled exactly with Sturm sequences.  Non-real roots are
approximated with mpmath and enclosed in certified disks (the Smith bound),
so the Pisot and Perron verdicts are three-valued.  Both verdicts concern the
supplied polynomial, which need not be the minimal polynomial of its root.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import mpmath

from .dynamics import Params
from .exactnum import AlgebraicReal, IntPoly, isolate_roots, squarefree
from .words import EPWord

POLYNOMIAL_LEVEL = "polynomial-level"

THETA0 = IntPoly((-1, -1, 0, 1))      # x^3 - x - 1, the smallest Pisot number
THETA1 = IntPoly((-1, 0, 0, -1, 1))   # x^4 - x^3 - 1, the second smallest


class PreconditionFailed(ValueError):
    pass


class SpectralInconsistency(AssertionError):
    pass


class SpectralVerdict(enum.Enum):
    PISOT = "Pisot"
    NOT_PISOT = "NotPisot"
    PERRON = "Perron"
    NOT_PERRON = "NotPerron"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class RootEnclosure:
    """A root known to lie in the disk |z - center| <= radius (radius 0 when exact)."""

    center: complex
    radius: float
    real: bool
    modulus_lo: float
    modulus_hi: float
    exact: AlgebraicReal | None = None


@dataclass(frozen=True)
class SpectrumResult:
    verdict: SpectralVerdict
    dominant: AlgebraicReal
    others: tuple[RootEnclosure, ...]
    qualifier: str = POLYNOMIAL_LEVEL
    reasons: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "qualifier": self.qualifier,
            "dominant": self.dominant.approx(20),
            "others": [
                {
                    "center": [r.center.real, r.center.imag],
                    "radius": r.radius,
                    "modulus": [r.modulus_lo, r.modulus_hi],
                    "real": r.real,
                }
                for r in self.others
            ],
            "reasons": list(self.reasons),
        }


# ---------------------------------------------------------------------------
# root enclosures


def _smith_disks(f: tuple[int, ...], dps: int) -> list[tuple[mpmath.mpc, mpmath.mpf]] | None:
    """Approximate roots with radii; every disk holds exactly one root, or None."""
    deg = len(f) - 1
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) for c in reversed(f)]
        try:
            zs = mpmath.polyroots(coeffs, maxsteps=400, extraprec=4 * dps)
        except mpmath.libmp.NoConvergence:
            return None
        zs = [mpmath.mpc(z) for z in zs]
        lead = abs(coeffs[0])
        disks = []
        for i, z in enumerate(zs):
            den = lead
            for j, w in enumerate(zs):
                if j != i:
                    den *= abs(z - w)
            if den == 0:
                return None
            disks.append((z, deg * abs(mpmath.polyval(coeffs, z)) / den))
        for i in range(deg):
            for j in range(i + 1, deg):
                if abs(disks[i][0] - disks[j][0]) <= disks[i][1] + disks[j][1]:
                    return None
        return disks


def root_enclosures(p: IntPoly, dps: int = 60) -> list[RootEnclosure]:
    """Enclosures of all distinct roots: exact for real ones, disks for the rest."""
    f = squarefree(p.coeffs)
    reals = isolate_roots(f)
    out = []
    for r in reals:
        iv = r.interval_at(64)
        lo, hi = float(iv.lo), float(iv.hi)
        mod_lo = 0.0 if lo <= 0 <= hi else min(abs(lo), abs(hi))
        out.append(RootEnclosure(complex(float(r), 0.0), float(iv.width), True, mod_lo, max(abs(lo), abs(hi)), r))
    n_complex = len(f) - 1 - len(reals)
    if n_complex == 0:
        return out
    for extra in (0, 60, 200):
        disks = _smith_disks(f, dps + extra)
        if disks is None:
            continue
        nonreal = [(z, rad) for z, rad in disks if abs(z.imag) > rad]
        if len(nonreal) != n_complex:
            continue
        for z, rad in nonreal:
            m = abs(z)
            out.append(
                RootEnclosure(
                    complex(z), float(rad), False,
                    float(max(m - rad, 0)), float(m + rad),
                )
            )
        return out
    raise PreconditionFailed("could not separate the complex roots")


def _dominant(p: IntPoly, encl: list[RootEnclosure]) -> tuple[AlgebraicReal, list[RootEnclosure]]:
    big = [e for e in encl if e.real and e.exact.compare(1) > 0]
    if len(big) != 1:
        raise PreconditionFailed(f"{p} has {len(big)} real roots greater than 1, expected exactly one")
    return big[0].exact, [e for e in encl if e is not big[0]]


def _three_valued(p: IntPoly, limit, good: SpectralVerdict, bad: SpectralVerdict) -> SpectrumResult:
    """Compare every other root's modulus with ``limit`` (1, or the dominant root)."""
    encl = root_enclosures(p)
    beta, others = _dominant(p, encl)
    bound = beta if limit is None else AlgebraicReal.from_rational(limit)
    iv = bound.interval_at(80)
    b_lo, b_hi = float(iv.lo), float(iv.hi)
    reasons = []
    verdict = good
    lead = squarefree(p.coeffs)[-1]
    if abs(lead) != 1:
        # the root must be an algebraic integer; only degree one is decided here
        if len(squarefree(p.coeffs)) == 2:
            reasons.append(f"{beta.approx(12)} is rational but not an integer")
            return SpectrumResult(bad, beta, tuple(others), POLYNOMIAL_LEVEL, tuple(reasons))
        reasons.append("polynomial is not monic; integrality of the root is not decided")
        verdict = SpectralVerdict.INDETERMINATE
    for e in others:
        if e.real:
            r = e.exact
            # |r| < bound exactly iff -bound < r < bound
            inside = r.compare(bound) < 0 and (-r).compare(bound) < 0
            if not inside:
                reasons.append(f"real root {r.approx(12)} has modulus >= {bound.approx(12)}")
                verdict = bad
        elif e.modulus_hi < b_lo:
            continue
        elif e.modulus_lo > b_hi:
            reasons.append(f"complex root {e.center:.12g} has modulus > {bound.approx(12)}")
            verdict = bad
        elif verdict is good:
            reasons.append(f"complex root {e.center:.12g} has modulus interval straddling the bound")
            verdict = SpectralVerdict.INDETERMINATE
    return SpectrumResult(verdict, beta, tuple(others), POLYNOMIAL_LEVEL, tuple(reasons))


def pisot_check(p: IntPoly) -> SpectrumResult:
    """Pisot if every other root has modulus < 1."""
    return _three_valued(p, 1, SpectralVerdict.PISOT, SpectralVerdict.NOT_PISOT)


def perron_check(p: IntPoly) -> SpectrumResult:
    """Perron if every other root has modulus < the real root > 1."""
    return _three_valued(p, None, SpectralVerdict.PERRON, SpectralVerdict.NOT_PERRON)


# ---------------------------------------------------------------------------
# {-1,0,1} witnesses


def pm1_vanishes(beta: AlgebraicReal, coeffs) -> bool:
    return beta.element(coeffs).is_zero()


def pm1_witness_search(beta: AlgebraicReal, max_degree: int = 20) -> IntPoly | None:
    """Lowest-degree monic {-1,0,1} polynomial vanishing at beta, if its degree <= max_degree.

    Depth-first over coefficients from the top down.  A partial sum
    S = sum_{i>=j} c_i beta^i can only be cancelled if |S| <= sum_{i<j} beta^i;
    these bounds use an outward-rounded enclosure of beta.  Leaves are
    confirmed with an exact zero test in Q(beta).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be at least 1")
    iv = beta.interval_at(80)
    lo, hi = float(iv.lo), float(iv.hi)
    bf = (lo + hi) / 2
    if bf <= 0:
        raise ValueError("beta must be positive")
    for d in range(1, max_degree + 1):
        powers = [bf ** i for i in range(d + 1)]
        # relative slack covers the enclosure width and float rounding
        slack = 1e-9 * sum(powers) + (hi - lo) * d * max(powers)
        tails = [0.0] * (d + 1)
        for j in range(1, d + 1):
            tails[j] = tails[j - 1] + powers[j - 1]
        coeffs = [0] * (d + 1)
        coeffs[d] = 1

        def dfs(j: int, partial: float):
            # coefficients above index j are fixed; choose c_j
            for c in (-1, 0, 1):
                s = partial + c * powers[j]
                if abs(s) > tails[j] + slack:
                    continue
                coeffs[j] = c
                if j == 0:
                    if coeffs[0] != 0 and pm1_vanishes(beta, coeffs):
                        return IntPoly(tuple(coeffs))
                    continue
                found = dfs(j - 1, s)
                if found is not None:
                    return found
            coeffs[j] = 0
            return None

        found = dfs(d - 1, powers[d])
        if found is not None:
            return found
    return None


def kneading_polynomial(tau_minus: EPWord, tau_plus: EPWord) -> IntPoly:
    """Integer polynomial N with N(beta) = 0 whenever pi(tau_plus) = pi(tau_minus).

    With d_k = tau_plus_k - tau_minus_k, preperiod P and common period L,
    sum d_k x^-k = x^-P (x^L - 1)^-1 N(x), where
    N(x) = (x^L - 1) sum_{k<=P} d_k x^(P-k) + sum_{j=1..L} d_(P+j) x^(L-j).
    For purely periodic words N is the one-period sum, with coefficients in {-1,0,1}.
    """
    pre = max(len(tau_minus.pre), len(tau_plus.pre))
    per = math.lcm(len(tau_minus.per), len(tau_plus.per))
    d = [tau_plus[k] - tau_minus[k] for k in range(pre + per)]
    out = [0] * (pre + per + 1)
    for k in range(1, pre + 1):
        e = pre - k
        out[e + per] += d[k - 1]
        out[e] -= d[k - 1]
    for j in range(1, per + 1):
        out[per - j] += d[pre + j - 1]
    return IntPoly(tuple(out))


@dataclass(frozen=True)
class WitnessReport:
    verdict: str
    kneading_polynomial: IntPoly | None
    witness: IntPoly | None
    degree_bound: int | None


def finite_type_witness_check(params: Params, max_degree: int | None = None) -> WitnessReport:
    """Finite type forces beta to be a root of a {-1,0,1} polynomial; check this.

    When the shift is of finite type the kneading polynomial must vanish at
    beta and the witness search up to its degree must succeed; otherwise
    :class:`SpectralInconsistency` is raised.
    """
    from .shifts import KneadingSpec, Verdict, classify

    spec = KneadingSpec.from_params(params)
    c = classify(spec)
    if c.verdict is not Verdict.SFT:
        return WitnessReport(c.verdict.value, None, None, None)
    poly = kneading_polynomial(spec.tau_minus, spec.tau_plus)
    if not pm1_vanishes(params.beta, poly.coeffs):
        raise SpectralInconsistency(f"kneading polynomial {poly} does not vanish at beta")
    bound = poly.degree if max_degree is None else max(max_degree, poly.degree)
    if all(abs(c) <= 1 for c in poly.coeffs):
        witness = pm1_witness_search(params.beta, bound)
        if witness is None:
            raise SpectralInconsistency(
                f"finite type with {{-1,0,1}} kneading polynomial {poly}, but no witness up to degree {bound}"
            )
    else:
        witness = pm1_witness_search(params.beta, max_degree or 20)
    return WitnessReport(c.verdict.value, poly, witness, bound)
