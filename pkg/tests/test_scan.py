from fractions import Fraction

from betashift.constructions import FamilyIndex, family_params
from betashift.dynamics import Params
from betashift.scan import CSV_HEADER, cell_containing, scan_grid, to_csv, to_svg
from betashift.exactnum import AlgebraicReal
from betashift.transitivity import transitivity_verdict


def test_small_grid_shape():
    cells = scan_grid((1, 2), 2, 2)
    csv = to_csv(cells)
    lines = csv.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 5


def test_deterministic():
    a = to_csv(scan_grid((1, 2), 30, 30))
    b = to_csv(scan_grid((1, 2), 30, 30))
    assert a == b


def test_cells_agree_with_exact_verdict():
    cells = scan_grid((1, 2), 40, 40)
    for c in cells[::37]:
        v = transitivity_verdict(Params(AlgebraicReal.from_rational(c.beta), c.alpha))
        assert v.witness == c.region, c


def test_near_pinch_regions_shrink():
    # D_{1,2} has positive width below sqrt(2) and vanishes above it
    below = scan_grid((Fraction(140, 100), Fraction(141, 100)), 2, 2000)
    above = scan_grid((Fraction(142, 100), Fraction(143, 100)), 2, 2000)
    assert sum(1 for c in below if c.region and c.region.n == 2) > 0
    assert sum(1 for c in above if c.region and c.region.n == 2) == 0


def test_svg_family_points_in_nontransitive_cells():
    cells = scan_grid((1, 2), 200, 200)
    svg = to_svg(cells)
    assert svg.startswith("<svg") and "<line" in svg
    for n in (2, 3, 4):
        for k in (1, 2):
            params = family_params(FamilyIndex(n, k))
            cell = cell_containing(cells, params.beta, params.alpha)
            assert not cell.transitive, (n, k, cell)
