"""
The Segre cubic and the Igusa quartic
=====================================

Both are images of the space of six points on a line.  Tropically they
share the same fan, the space of phylogenetic trees on six leaves, and
differ only in multiplicity.
"""

from tropmoduli import identities as I
from tropmoduli import pushforward as P
from tropmoduli.curvetrees import treespace_complex
from tropmoduli.matroidfan import bergman_fan

# %%
print("Berg(M0N(6))", bergman_fan("M0N(6)").f_vector())

splits, faces = treespace_complex(6)
print("tree space", len(splits), len(faces[2]), len(faces[3]))

# %%
for name in ("segre", "igusa"):
    pf = P.pushed(name)
    mult = {pf.image.multiplicity(c) for c in pf.image.maximal}
    print(name, pf.image.f_vector(), "multiplicities", mult)

# %%
# The two exponent matrices have the same kernel.
print(I.kernel_comparison())

# %%
# Exact identities: the Segre relations at rational points, and the
# icosahedral discriminant over Q(zeta5).
for rep in (I.check_segre_igusa(trials=5), I.check_icosahedral_discriminant()):
    print(rep.name, "passed" if rep.passed else "FAILED", rep.witness)
