from fractions import Fraction

import pytest

from tropmoduli import kummer as K
from tropmoduli.cli import parse_points
from tropmoduli.curvetrees import PRESETS, CoincidentPoints


def fiber(name_or_points):
    pts = parse_points(PRESETS[name_or_points]) if isinstance(name_or_points, str) else name_or_points
    return K.kummer_fiber(pts)


def counts(s):
    return s.total, s.n_unbounded, s.n_bounded


def test_newton_polytope():
    pts = K.kummer_points()
    assert len(pts) == 11
    # the chart x00 = 1 turns the Newton polytope into a tetrahedron
    assert len(K.polytope_facets(pts)) == 4


def test_snowflake_fiber():
    vals, s = fiber("snowflake")
    assert counts(s) == (30, 24, 6)
    assert K.corner_locus_check(s, samples=20) == 0


def test_trivial_lifts_have_no_bounded_cells():
    s = K.fiber_from_lifts([0] * 11)
    assert s.n_bounded == 0
    # a single cell: the 2-cells are dual to the six tetrahedron edges
    assert s.n_unbounded == 6


def test_cherry_relabel_symmetry():
    pts = parse_points(PRESETS["snowflake"])
    swapped = [pts[1], pts[0], pts[3], pts[2], pts[5], pts[4]]
    assert counts(fiber(swapped)[1]) == counts(fiber(pts)[1])


def test_caterpillar_bounded_cell_is_flat_octagon():
    _, s = fiber("caterpillar")
    assert (s.n_unbounded, s.n_bounded) == (24, 1)
    k = s.bounded.index(True)
    verts = K.dual_cell_vertices(s, k)
    assert len(verts) == 8
    assert K._affine_rank(verts) == 2
    assert K.corner_locus_check(s, samples=20) == 0


def test_zero_coefficient():
    # (x3-x4)(x5-x6) = 2 (x3-x5)(x4-x6) kills s01
    pts = [5, 7, 0, 1, 2, Fraction(2, 3)]
    with pytest.raises(K.ZeroCoefficient):
        K.kummer_coefficients(pts)


def test_coincident_points():
    with pytest.raises(CoincidentPoints):
        K.kummer_coefficients([0, 1, 2, 3, 3, 4])


def test_json_output():
    import json

    _, s = fiber("snowflake")
    d = json.loads(s.to_json())
    assert d["cells"] == 30 and len(d["boundedCellPolygons"]) == 6
    assert d["lifts"] == ["6", "1", "3", "2", "0"]
