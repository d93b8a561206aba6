"""Render the non-transitivity regions of the parameter space as an SVG.

Shaded cells lie in some region D_{k,n}; the red line is alpha = 1 - beta/2,
along which the family beta_{n,k} sits.  The tongues pinch at beta = sqrt(2),
where the two bounds of D_{1,2} coincide.

Run:  python demos/parameter_map.py [output.svg]
"""
import sys
from collections import Counter

from betashift import scan
from betashift.exactnum import AlgebraicReal, IntPoly
from betashift.transitivity import RegionId, region_bounds

out = sys.argv[1] if len(sys.argv) > 1 else "parameter_map.svg"
cells = scan.scan_grid((1, 2), 200, 200)
with open(out, "w") as fh:
    fh.write(scan.to_svg(cells))
counts = Counter(str(c.region) for c in cells if c.region)
print(f"wrote {out}: {sum(counts.values())} of {len(cells)} cells not transitive")
for region, count in counts.most_common(6):
    print(f"    {region}: {count} cells")

sqrt2 = AlgebraicReal(IntPoly.parse("x^2-2"), (1, 2))
lo, hi = region_bounds(sqrt2, RegionId(1, 2))
print(f"\nat beta = sqrt(2) the D_{{1,2}} bounds coincide: {lo == hi} (alpha = {float(lo):.12f}, which is 1 - sqrt(2)/2: {lo == 1 - sqrt2.gen / 2})")
