"""
Six points on a line, trees, and genus-two curves
=================================================

Six marked points over the Laurent field give a metric tree through the
negated valuations of their pairwise differences.  The tree in turn names a
stable tropical curve of genus two, and the Segre coordinates of the points
give the Kummer surface whose tropical fiber we can draw.

Run with ``python3 demos/six_points.py``.
"""

import random

from tropmoduli import curvetrees as C
from tropmoduli import kummer as K
from tropmoduli.cli import parse_points

# %%
# Parse the two trivalent presets.  ``t`` is the uniformizer, ``w`` a cube
# root of unity.
for name in ("snowflake", "caterpillar"):
    pts = parse_points(C.PRESETS[name])
    nu = C.nu_from_points(pts)
    tree = C.tree_from_nu(nu)
    curve = C.genus2_from_tree(tree)
    print(name)
    print("  splits  ", {str(s): str(w) for s, w in tree.weights.items()})
    print("  curve   ", C.CURVE_NAMES[curve.type], [str(x) for x in curve.lengths])
    print("  cone    ", C.BURKHARDT_CONE[curve.type])

# %%
# Cherries double, 3|3 splits halve.  The same weights come back from the
# fifteen Segre coordinates alone.
pts = parse_points(C.PRESETS["snowflake"])
m = C.m_valuations(pts)
print("val(m) =", m)
print("edges from m:", C.snowflake_edges_from_m(m))

# %%
# Random trees of every combinatorial type, realized by points and
# recovered exactly.
rng = random.Random(1)
for label in range(1, 8):
    tree = C.random_tree(label, rng)
    back = C.tree_from_nu(C.nu_from_points(C.configuration_for_tree(tree, rng)))
    print(label, C.CURVE_NAMES[label], back.weights == tree.weights)

# %%
# Four points: the quartet edge against the valuation of the j-invariant.
for lam in ("t", "t^3", "1 + 2*t^2", "5"):
    ell, valj = C.genus1_from_lambda(parse_points(lam)[0])
    print(f"lambda = {lam:10} edge {ell}  val(j) {valj}")

# %%
# The tropical Kummer surface over each configuration.
for name in ("snowflake", "caterpillar"):
    vals, surface = K.kummer_fiber(parse_points(C.PRESETS[name]))
    print(name, vals, "two-cells", surface.total,
          "unbounded", surface.n_unbounded, "bounded", surface.n_bounded)
    for k, bounded in enumerate(surface.bounded):
        if bounded:
            print("   bounded cell with", len(K.dual_cell_vertices(surface, k)), "vertices")
