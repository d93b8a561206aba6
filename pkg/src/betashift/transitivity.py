"""Regions of non-transitivity D_{k,n} in the parameter space.

For coprime 1 <= k < n the region D_{k,n} consists of the parameters with
1 < beta^n <= 2 and alpha between two explicit rational functions of beta.
Inside any such region the maps are not transitive; outside all of them they
are.  Every inequality is decided exactly in Q(beta).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .dynamics import Params
from .exactnum import AlgebraicReal, FieldElement


class InvalidRegion(ValueError):
    pass


@dataclass(frozen=True, order=True)
class RegionId:
    k: int
    n: int

    def __post_init__(self):
        if not (1 <= self.k < self.n):
            raise InvalidRegion(f"need 1 <= k < n, got k={self.k}, n={self.n}")
        if math.gcd(self.k, self.n) != 1:
            raise InvalidRegion(f"k={self.k} and n={self.n} are not coprime")

    def __str__(self) -> str:
        return f"D_{{{self.k},{self.n}}}"


@dataclass(frozen=True)
class TransitivityVerdict:
    transitive: bool
    witness: RegionId | None
    justification: str

    def to_json(self) -> dict:
        return {
            "transitive": self.transitive,
            "region": str(self.witness) if self.witness else None,
            "justification": self.justification,
        }


def w_exponents(k: int, n: int) -> list[int]:
    """Exponents e with sum_j W_j = sum beta^e, for k > 1."""
    m, s = divmod(n, k)
    if s == 0:
        raise InvalidRegion(f"n = {n} is a multiple of k = {k}")
    v = [0] + [j * k // s for j in range(1, s + 1)]  # v[j] = V_j
    h = [0] + [v[j] - v[j - 1] for j in range(1, s + 1)]
    exps = [(v[s] - i) * m + s - 1 for i in range(1, v[1] + 1)]
    for j in range(2, s + 1):
        exps += [(v[s] - v[j - 1] - i) * m + s - j for i in range(1, h[j] + 1)]
    return exps


def region_bounds(beta: AlgebraicReal, region: RegionId) -> tuple[FieldElement, FieldElement]:
    """(lower, upper) bounds on alpha for the region, as elements of Q(beta)."""
    b = beta.gen
    k, n = region.k, region.n
    geo = beta.zero
    for i in range(n):
        geo = geo + b ** i
    den = b * geo
    bn = b ** n
    if k == 1:
        lower = 1 / den
        upper = (-bn * b + bn + 2 * b - 1) / den
        return lower, upper
    w = beta.zero
    for e in w_exponents(k, n):
        w = w + b ** e
    lower = (1 + b * (w - 1)) / den
    upper = (b * w - bn * b + bn + b - 1) / den
    return lower, upper


def power_admissible(beta: AlgebraicReal, n: int) -> bool:
    """1 < beta^n <= 2."""
    bn = beta.gen ** n
    return (bn - 1).sign() > 0 and (bn - 2).sign() <= 0


def in_region(params: Params, region: RegionId) -> bool:
    if not power_admissible(params.beta, region.n):
        return False
    lower, upper = region_bounds(params.beta, region)
    return (params.alpha - lower).sign() >= 0 and (upper - params.alpha).sign() >= 0


def candidate_regions(beta: AlgebraicReal) -> list[RegionId]:
    """All regions whose power condition holds for beta, ordered by (n, k)."""
    out = []
    n = 2
    while power_admissible(beta, n):
        out += [RegionId(k, n) for k in range(1, n) if math.gcd(k, n) == 1]
        n += 1
    return out


def transitivity_verdict(params: Params) -> TransitivityVerdict:
    for region in candidate_regions(params.beta):
        if in_region(params, region):
            return TransitivityVerdict(
                False, region, f"parameters lie in {region}, where the maps are not transitive"
            )
    return TransitivityVerdict(
        True,
        None,
        "parameters lie outside every region D_{k,n} with beta^n <= 2; "
        "transitive by the completeness of the region classification",
    )
