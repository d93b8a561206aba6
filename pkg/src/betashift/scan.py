"""Grid scans of the parameter space with CSV and SVG output.

beta runs over rational cell centres in (beta_lo, beta_hi); in each column
alpha runs over the rational cell centres of (0, 2 - beta).  Each cell gets
the transitivity verdict at its centre.

For speed the region bounds are first evaluated in floating point, and only
candidates within a small margin of a region are decided exactly in Q.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import AlgebraicReal
from .transitivity import RegionId, w_exponents

# floating evaluation of the bounds is accurate to ~1e-12; anything within
# this margin of a bound is re-decided exactly
MARGIN = 1e-9


@dataclass(frozen=True)
class Cell:
    i: int
    j: int
    beta: Fraction
    alpha: Fraction
    region: RegionId | None

    @property
    def transitive(self) -> bool:
        return self.region is None


def _bounds(beta, k: int, n: int):
    """Region bounds for a beta given as float or Fraction (same formulas as transitivity)."""
    geo = sum(beta ** i for i in range(n))
    den = beta * geo
    bn = beta ** n
    if k == 1:
        return 1 / den, (-bn * beta + bn + 2 * beta - 1) / den
    w = sum(beta ** e for e in w_exponents(k, n))
    return (1 + beta * (w - 1)) / den, (beta * w - bn * beta + bn + beta - 1) / den


@lru_cache(maxsize=None)
def _exponents(k: int, n: int) -> tuple[int, ...]:
    return tuple(w_exponents(k, n))


def _max_power(beta: Fraction) -> int:
    """Largest n with beta^n <= 2 (float estimate, confirmed exactly)."""
    n = max(1, int(math.log(2) / math.log(float(beta))) - 1)
    while beta ** (n + 1) <= 2:
        n += 1
    while n > 1 and beta ** n > 2:
        n -= 1
    return n


class _Column:
    """All regions alive at one rational beta, sorted by lower bound."""

    def __init__(self, beta: Fraction):
        self.beta = beta
        bf = float(beta)
        n_max = _max_power(beta)
        pw = [1.0]
        for _ in range(n_max + 1):
            pw.append(pw[-1] * bf)
        rows = []
        for n in range(2, n_max + 1):
            den = bf * sum(pw[:n])
            bn = pw[n]
            for k in range(1, n):
                if math.gcd(k, n) != 1:
                    continue
                if k == 1:
                    lo, hi = 1 / den, (-bn * bf + bn + 2 * bf - 1) / den
                else:
                    w = sum(pw[e] for e in _exponents(k, n))
                    lo = (1 + bf * (w - 1)) / den
                    hi = (bf * w - bn * bf + bn + bf - 1) / den
                if hi >= lo - MARGIN:
                    rows.append((lo, hi, RegionId(k, n)))
        rows.sort(key=lambda r: r[0])
        self.rows = rows
        self.los = [r[0] for r in rows]
        self.max_hi = []
        m = -math.inf
        for r in rows:
            m = max(m, r[1])
            self.max_hi.append(m)
        self._exact: dict[RegionId, tuple[Fraction, Fraction]] = {}

    def exact_bounds(self, region: RegionId) -> tuple[Fraction, Fraction]:
        if region not in self._exact:
            self._exact[region] = _bounds(self.beta, region.k, region.n)
        return self._exact[region]

    def region_of(self, alpha: Fraction) -> RegionId | None:
        af = float(alpha)
        idx = bisect.bisect_right(self.los, af + MARGIN) - 1
        hits = []
        while idx >= 0 and self.max_hi[idx] >= af - MARGIN:
            lo, hi, region = self.rows[idx]
            if hi >= af - MARGIN:
                if lo + MARGIN < af < hi - MARGIN:
                    hits.append(region)
                else:
                    elo, ehi = self.exact_bounds(region)
                    if elo <= alpha <= ehi:
                        hits.append(region)
            idx -= 1
        if not hits:
            return None
        return min(hits, key=lambda r: (r.n, r.k))


def scan_grid(
    beta_range: tuple = (1, 2), beta_steps: int = 200, alpha_steps: int = 200
) -> list[Cell]:
    if beta_steps < 2 or alpha_steps < 2:
        raise ValueError("grid resolution must be at least 2 per axis")
    b_lo, b_hi = (Fraction(v) for v in beta_range)
    if not (1 <= b_lo < b_hi <= 2):
        raise ValueError("beta range must satisfy 1 <= lo < hi <= 2")
    cells = []
    for i in range(beta_steps):
        beta = b_lo + (b_hi - b_lo) * Fraction(2 * i + 1, 2 * beta_steps)
        col = _Column(beta)
        for j in range(alpha_steps):
            alpha = (2 - beta) * Fraction(2 * j + 1, 2 * alpha_steps)
            cells.append(Cell(i, j, beta, alpha, col.region_of(alpha)))
    return cells


def cell_containing(cells: list[Cell], beta, alpha, beta_range=(1, 2)) -> Cell:
    """The grid cell whose box contains the point (beta, alpha)."""
    b_lo, b_hi = (Fraction(v) for v in beta_range)
    nb = max(c.i for c in cells) + 1
    na = max(c.j for c in cells) + 1
    bf = float(beta)
    i = min(nb - 1, max(0, int((bf - float(b_lo)) / float(b_hi - b_lo) * nb)))
    col = [c for c in cells if c.i == i]
    width = 2 - float(col[0].beta)
    j = min(na - 1, max(0, int(float(alpha) / width * na)))
    return col[j]


# ---------------------------------------------------------------------------
# output


CSV_HEADER = "beta,alpha,beta_float,alpha_float,transitive,region"


def to_csv(cells: list[Cell]) -> str:
    lines = [CSV_HEADER]
    for c in cells:
        lines.append(
            f"{c.beta},{c.alpha},{float(c.beta):.10f},{float(c.alpha):.10f},"
            f"{str(c.transitive).lower()},{c.region or ''}"
        )
    return "\n".join(lines) + "\n"


def _color(region: RegionId | None) -> str:
    if region is None:
        return "#f4f1e8"
    if region.k == 1:
        # darker for larger n so nested tongues stay distinguishable
        shade = max(40, 200 - 25 * (region.n - 2))
        return f"#{shade // 4:02x}{shade // 2:02x}{shade:02x}"
    shade = max(40, 220 - 20 * (region.n - 3))
    return f"#{shade:02x}{shade // 3:02x}{shade // 4:02x}"


def to_svg(cells: list[Cell], beta_range=(1, 2), size: int = 600) -> str:
    """Flat raster: x is beta, y is alpha in [0, 1]; the line alpha = 1 - beta/2 is overlaid."""
    b_lo, b_hi = (float(v) for v in beta_range)
    nb = max(c.i for c in cells) + 1
    na = max(c.j for c in cells) + 1
    pad = 30
    w = h = size

    def px(beta: float) -> float:
        return pad + (beta - b_lo) / (b_hi - b_lo) * w

    def py(alpha: float) -> float:
        return pad + h - alpha * h

    cw = w / nb
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w + 2 * pad}" height="{h + 2 * pad}" '
        f'viewBox="0 0 {w + 2 * pad} {h + 2 * pad}">',
        f'<rect x="0" y="0" width="{w + 2 * pad}" height="{h + 2 * pad}" fill="white"/>',
    ]
    for c in cells:
        beta = float(c.beta)
        ah = (2 - beta) / na
        x = px(beta) - cw / 2
        y = py(float(c.alpha) + ah / 2)
        parts.append(
            f'<rect x="{x:.3f}" y="{y:.3f}" width="{cw:.3f}" height="{ah * h:.3f}" '
            f'fill="{_color(c.region)}" data-region="{c.region or ""}"/>'
        )
    parts.append(
        f'<line x1="{px(b_lo):.3f}" y1="{py(1 - b_lo / 2):.3f}" x2="{px(b_hi):.3f}" '
        f'y2="{py(1 - b_hi / 2):.3f}" stroke="#d62728" stroke-width="1.5"/>'
    )
    parts.append(
        f'<text x="{pad}" y="{pad + h + 20}" font-size="12" font-family="sans-serif">'
        f"beta {b_lo:g} .. {b_hi:g}; alpha 0 .. 1; shaded cells are not transitive</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def beta_value(x) -> AlgebraicReal:
    return AlgebraicReal.from_rational(Fraction(x))
