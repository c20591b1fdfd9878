"""
The tropical Burkhardt quartic
==============================

The 40 reflection hyperplanes of G32 cut out a Bergman fan; the 40
Burkhardt monomials map it onto the tropical Burkhardt quartic.  This walk
through takes about half a minute.
"""

from collections import Counter

from tropmoduli import pushforward as P
from tropmoduli.matroidfan import bergman_complex, matroid, moebius_number

# %%
# The source: nested sets of irreducible flats of the G32 matroid.
nc = bergman_complex("G32")
print("Berg(G32) f-vector", nc.f_vector())
print("Moebius number", moebius_number(matroid("G32")))
print("source cone classes", P.g32_source_classes(nc))

# %%
# Push forward and label the image rays by type.
pf = P.pushed("burkhardt")
labels = P.label_types(pf)
print("trop(B) f-vector", pf.image.f_vector())
print("cone types", dict(P.type_counts(pf, labels)))
print("balancing failures", len(P.balancing_failures(pf.image)))

# %%
# How many source cones fold onto each image cone.
folds = Counter(("".join(sorted(labels[i] for i in k)), len(v)) for k, v in pf.covering.items())
for (kind, degree), n in sorted(folds.items()):
    print(f"  {kind:4} {n:4d} cones, {degree}:1")

# %%
# The 45 rays of type b have support on 16 of the 40 coordinates; those are
# the zero sets of the singular points.
print("b-ray supports", len(P.b_ray_supports()))

# %%
# Valuations of actual points: start from special points of the
# arrangement, perturb by powers of t, and locate val(m) in the fan.
print(P.conjecture_side_report(count=10, seed=2))
