"""Genus, degree and root class across all multitypes of a given size.

For g = 0 the multiplicity can vanish; once g >= 1 the central vertex
carries loops and every dimension vector becomes an imaginary root, so the
multiplicity never vanishes and its degree grows with g.
"""

from collections import Counter

from tensormult import build_quiver, classify_root, d_omega, h_omega
from tensormult.types import multitypes

for g in (0, 1, 2):
    tally = Counter()
    degrees = []
    for mt in multitypes(3, 3, g, ordered=False):
        qv, v = build_quiver(mt)
        h = h_omega(mt)
        rc = classify_root(qv, v).value
        tally[rc, h.is_zero()] += 1
        if not h.is_zero():
            assert 2 * h.degree == d_omega(qv, v)
            degrees.append(h.degree)
    summary = ", ".join(f"{rc}{' (H=0)' if z else ''}: {c}" for (rc, z), c in sorted(tally.items()))
    print(f"n=3, k=3, g={g}:  {summary};  degrees {min(degrees)}..{max(degrees)}")

mt = next(m for m in multitypes(3, 3, 2, ordered=False) if str(m).endswith("1:[3] ; 1:[3] ; 1:[3]"))
print(f"\nexample at g=2: {mt}\n  H(q) = {h_omega(mt)}")
