"""Which triples of unipotent characters of GL_3(F_q) contain the trivial one?

Each unipotent type is a partition of 3.  For every ordered triple we print
the multiplicity polynomial and the root class of the attached quiver.  Only
four triples survive: the Steinberg triple, whose quiver is the affine E6
diagram with its null root, and the three placements of (2,1) next to two
Steinbergs, which give a real root of E6.
"""

from itertools import product

from tensormult import MultiType, TypeT, build_quiver, classify_root, d_omega, h_omega
from tensormult.partitions import partitions

rows = []
for lams in product(partitions(3), repeat=3):
    mt = MultiType(tuple(TypeT.of((1, la)) for la in lams), g=0)
    qv, v = build_quiver(mt)
    rows.append((lams, h_omega(mt), classify_root(qv, v).value, d_omega(qv, v)))

print(f"{'triple':<30} {'H(q)':<6} {'root class':<10} d")
for lams, h, rc, d in rows:
    if not h.is_zero():
        print(f"{str(lams):<30} {str(h):<6} {rc:<10} {d}")
print(f"\n{sum(1 for r in rows if r[1].is_zero())} of {len(rows)} triples have multiplicity 0,")
print("and every one of them has a dimension vector that is not a root.")

three = MultiType((TypeT.of((1, (3,))),) * 3, 0)
qv, v = build_quiver(three)
print("\nSteinberg triple: legs", v.legs, "centre", v.center, "Cartan matrix")
print(qv.cartan())
