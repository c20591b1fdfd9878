"""Tropical Kummer surfaces over points of tree space.

The Kummer quartic has eleven monomials; in the chart that divides by
x00^4 each becomes a lattice point of Z^3 (exponents of x01, x10, x11).
Its coefficients r, s01, s10, s11, t come from the Segre coordinates by a
fixed linear substitution.  The tropical surface in TP^3 is dual to the
regular subdivision induced by the coefficient valuations (min convention:
lower faces), so its 2-cells correspond to the edges of that subdivision
and a 2-cell is bounded exactly when its edge is interior to the Newton
tetrahedron.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .curvetrees import CoincidentPoints, _as_val, segre_matchings
from .exactnum import INF, ValScalar, valuation


class ZeroCoefficient(ValueError):
    pass


# coefficient index for each monomial (exponents of x00, x01, x10, x11)
KUMMER_MONOMIALS: List[Tuple[Tuple[int, int, int, int], str]] = [
    ((4, 0, 0, 0), "r"), ((0, 4, 0, 0), "r"), ((0, 0, 4, 0), "r"), ((0, 0, 0, 4), "r"),
    ((2, 2, 0, 0), "s01"), ((0, 0, 2, 2), "s01"),
    ((2, 0, 2, 0), "s10"), ((0, 2, 0, 2), "s10"),
    ((2, 0, 0, 2), "s11"), ((0, 2, 2, 0), "s11"),
    ((1, 1, 1, 1), "t"),
]
COEFFICIENTS = ("r", "s01", "s10", "s11", "t")


def kummer_points() -> List[Tuple[int, int, int]]:
    """Monomials in the chart x00 = 1: drop the x00 exponent."""
    return [e[1:] for e, _ in KUMMER_MONOMIALS]


def segre_values(points: Sequence) -> List[ValScalar]:
    pts = [_as_val(p) for p in points]
    if len(pts) != 6:
        raise ValueError("six marked points are required")
    out = []
    for match in segre_matchings():
        prod = ValScalar.const(1)
        for i, j in match:
            d = pts[i - 1] - pts[j - 1]
            if d.is_zero():
                raise CoincidentPoints(f"points {i} and {j} coincide")
            prod = prod * d
        out.append(prod)
    return out


def rst_from_m(m: Sequence[ValScalar]) -> Dict[str, ValScalar]:
    """The substitution from m-coordinates to (r, s01, s10, s11, t)."""
    return {
        "r": m[0],
        "s01": 2 * m[0] - 4 * m[1],
        "s10": 2 * m[0] - 4 * m[3],
        "s11": 4 * m[4] - 2 * m[0] - 4 * m[7],
        "t": 8 * (m[1] + m[3] - m[0] - m[4] - m[7]),
    }


def kummer_coefficients(points: Sequence) -> Dict[str, int]:
    coeffs = rst_from_m(segre_values(points))
    out = {}
    for name in COEFFICIENTS:
        v = valuation(coeffs[name])
        if v is INF:
            raise ZeroCoefficient(f"coefficient {name} vanishes at this configuration")
        out[name] = v
    return out


def lifts_from_coefficients(vals: Dict[str, int]) -> List[Fraction]:
    return [Fraction(vals[c]) for _, c in KUMMER_MONOMIALS]


# ---------------------------------------------------------------------------
# exact lower hulls and regular subdivisions


def _det3(a, b, c) -> Fraction:
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
            + a[2] * (b[0] * c[1] - b[1] * c[0]))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _plane(p, q, r):
    """Normal n and offset so that n . x = offset on the plane through p, q, r."""
    u, v = _sub(q, p), _sub(r, p)
    n = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    return n, sum(a * b for a, b in zip(n, p))


def _affine_rank(pts) -> int:
    if not pts:
        return -1
    vecs = [_sub(p, pts[0]) for p in pts[1:]]
    return _frac_rank(vecs) if vecs else 0


def _frac_rank(vecs) -> int:
    rows = [[Fraction(x) for x in v] for v in vecs]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def polytope_facets(points: Sequence[Tuple[int, int, int]], idx: Sequence[int] | None = None):
    """Facets of a full-dimensional 3-polytope as (normal, offset, members).

    The normal points inward: n . x >= offset on the polytope.
    """
    if idx is None:
        idx = list(range(len(points)))
    facets = {}
    for i, j, k in itertools.combinations(idx, 3):
        n, off = _plane(points[i], points[j], points[k])
        if n == (0, 0, 0):
            continue
        vals = [sum(a * b for a, b in zip(n, points[m])) - off for m in idx]
        if all(v >= 0 for v in vals):
            pass
        elif all(v <= 0 for v in vals):
            n, off = tuple(-a for a in n), -off
            vals = [-v for v in vals]
        else:
            continue
        members = frozenset(m for m, v in zip(idx, vals) if v == 0)
        facets[members] = (n, off, members)
    return list(facets.values())


def regular_subdivision(points: Sequence[Tuple[int, int, int]], lifts: Sequence) -> List[frozenset]:
    """Maximal cells of the regular subdivision (lower faces of the lift).

    Brute force over affinely independent 4-subsets: the affine function
    through four lifted points is a lower supporting function when every
    other lifted point lies on or above it.  Cells are the index sets of
    points on the supporting hyperplane.
    """
    lifts = [Fraction(x) for x in lifts]
    n = len(points)
    cells = set()
    for quad in itertools.combinations(range(n), 4):
        P = [points[i] for i in quad]
        base = P[0]
        M = [_sub(p, base) for p in P[1:]]
        det = _det3(*M)
        if det == 0:
            continue
        # h(x) = lift(base) + g . (x - base); solve g from the three others
        rhs = [lifts[i] - lifts[quad[0]] for i in quad[1:]]
        g = _cramer(M, rhs, det)
        ok = True
        on = []
        for m in range(n):
            h = lifts[quad[0]] + sum(gi * (xi - bi) for gi, xi, bi in zip(g, points[m], base))
            if lifts[m] < h:
                ok = False
                break
            if lifts[m] == h:
                on.append(m)
        if ok:
            cells.add(frozenset(on))
    return sorted(cells, key=lambda c: sorted(c))


def _cramer(M, rhs, det):
    out = []
    for col in range(3):
        A = [list(row) for row in M]
        for r in range(3):
            A[r][col] = rhs[r]
        out.append(Fraction(_det3(*A)) / det)
    return out


def _cell_edges(points, cell) -> List[Tuple[int, int]]:
    """Edges (pairs of endpoints) of one 3-dimensional cell."""
    cell = sorted(cell)
    facets = polytope_facets(points, cell)
    edges = set()
    for p, q in itertools.combinations(cell, 2):
        common = [f[2] for f in facets if p in f[2] and q in f[2]]
        if len(common) < 2:
            continue
        inter = frozenset.intersection(*common)
        pts = [points[i] for i in inter]
        if _affine_rank(pts) != 1:
            continue
        # endpoints of the collinear set
        d = _sub(points[q], points[p])
        key = lambda i: sum(a * b for a, b in zip(_sub(points[i], points[p]), d))  # noqa: E731
        ends = (min(inter, key=key), max(inter, key=key))
        edges.add(tuple(sorted(ends)))
    return sorted(edges)


@dataclass
class DualSurface:
    edges: List[Tuple[int, int]]
    bounded: List[bool]
    cells: List[frozenset]
    lifts: List[Fraction]

    @property
    def total(self) -> int:
        return len(self.edges)

    @property
    def n_bounded(self) -> int:
        return sum(self.bounded)

    @property
    def n_unbounded(self) -> int:
        return self.total - self.n_bounded

    def coefficient_lifts(self) -> List[Fraction]:
        """The five values (r, s01, s10, s11, t) behind the eleven lifts."""
        first = {}
        for (_, c), x in zip(KUMMER_MONOMIALS, self.lifts):
            first.setdefault(c, x)
        return [first[c] for c in COEFFICIENTS]

    def to_json(self, coefficient_lifts: Sequence | None = None) -> str:
        pts = kummer_points()
        return json.dumps({
            "lifts": [str(x) for x in (coefficient_lifts if coefficient_lifts is not None
                                       else self.coefficient_lifts())],
            "cells": self.total,
            "bounded": self.n_bounded,
            "unbounded": self.n_unbounded,
            "boundedCellPolygons": [
                [[str(c) for c in v] for v in dual_cell_vertices(self, k)]
                for k, b in enumerate(self.bounded) if b
            ],
            "edges": [[list(pts[a]), list(pts[b])] for a, b in self.edges],
        })


def dual_two_cells(points: Sequence[Tuple[int, int, int]], cells: List[frozenset],
                   lifts: Sequence) -> DualSurface:
    edges = set()
    for c in cells:
        edges.update(_cell_edges(points, c))
    boundary = polytope_facets(points)
    edges = sorted(edges)
    bounded = []
    for a, b in edges:
        on_boundary = any(a in f[2] and b in f[2] for f in boundary)
        bounded.append(not on_boundary)
    return DualSurface(edges, bounded, cells, [Fraction(x) for x in lifts])


def dual_vertex(points, lifts, cell) -> Tuple[Fraction, ...]:
    """The point w where every monomial of the cell attains the minimum.

    Solves lift_i + <a_i, w> = const over the cell.
    """
    idx = sorted(cell)
    # pick an affinely independent quadruple
    for quad in itertools.combinations(idx, 4):
        M = [_sub(points[i], points[quad[0]]) for i in quad[1:]]
        det = _det3(*M)
        if det:
            rhs = [Fraction(lifts[quad[0]]) - Fraction(lifts[i]) for i in quad[1:]]
            return tuple(_cramer(M, rhs, det))
    raise ValueError("cell is not full-dimensional")


def dual_cell_vertices(surface: DualSurface, k: int) -> List[Tuple[Fraction, ...]]:
    a, b = surface.edges[k]
    pts = kummer_points()
    verts = []
    for c in surface.cells:
        if a in c and b in c and _segment_in_cell(pts, c, a, b):
            verts.append(dual_vertex(pts, surface.lifts, c))
    return sorted(set(verts))


def _segment_in_cell(points, cell, a, b) -> bool:
    return (a, b) in _cell_edges(points, cell) or (b, a) in _cell_edges(points, cell)


def dual_cell_rays(points, a: int, b: int) -> List[Tuple[int, int, int]]:
    """Recession directions of the 2-cell dual to a boundary edge.

    These are the inner normals of the Newton polytope facets through the
    edge (the tropical surface uses the min convention).
    """
    return [f[0] for f in polytope_facets(points) if a in f[2] and b in f[2]]


def tropical_terms(points, lifts, w) -> List[Fraction]:
    return [Fraction(l) + sum(Fraction(x) * y for x, y in zip(p, w)) for p, l in zip(points, lifts)]


def corner_locus_check(surface: DualSurface, samples: int = 100, seed: int = 0) -> int:
    """Random points on every 2-cell; count those where the minimum of the
    tropical polynomial is attained fewer than twice (0 means pass)."""
    rng = random.Random(seed)
    pts = kummer_points()
    failures = 0
    for k, (a, b) in enumerate(surface.edges):
        verts = dual_cell_vertices(surface, k)
        rays = [] if surface.bounded[k] else dual_cell_rays(pts, a, b)
        for _ in range(samples):
            lam = [Fraction(rng.randint(1, 50)) for _ in verts]
            tot = sum(lam)
            w = [sum(l * v[i] for l, v in zip(lam, verts)) / tot for i in range(3)]
            for r in rays:
                mu = Fraction(rng.randint(0, 20), rng.randint(1, 5))
                w = [x + mu * y for x, y in zip(w, r)]
            terms = tropical_terms(pts, surface.lifts, w)
            m = min(terms)
            if sum(1 for x in terms if x == m) < 2:
                failures += 1
    return failures


def kummer_fiber(points: Sequence) -> Tuple[Dict[str, int], DualSurface]:
    vals = kummer_coefficients(points)
    lifts = lifts_from_coefficients(vals)
    pts = kummer_points()
    cells = regular_subdivision(pts, lifts)
    return vals, dual_two_cells(pts, cells, lifts)


def fiber_from_lifts(lifts: Sequence) -> DualSurface:
    pts = kummer_points()
    return dual_two_cells(pts, regular_subdivision(pts, lifts), lifts)
