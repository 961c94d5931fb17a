"""Check the formula against honest character sums for GL_2(F_q).

For a multitype with n = 2 we pick a generic tuple of irreducible
characters from the classical table, sum Lambda * X_1 * ... * X_k over
conjugacy classes in exact cyclotomic arithmetic, and compare with H(q)
evaluated at q.  Note the four cuspidal case: H = q - 4 is negative at
q = 3, which is fine because no generic 4-tuple of cuspidals exists there.
"""

from tensormult.oracle import build_table_gl2, oracle_vs_formula
from tensormult.types import h_omega, parse_multitype

table = build_table_gl2(5)
print(f"GL_2(F_5): {len(table.classes)} classes, order {table.group_order}")
for kind in ("linear", "steinberg", "principal", "cuspidal"):
    chars = [c for c in table.characters if c.kind == kind]
    print(f"  {kind:<10} {len(chars):>2} characters of degree {chars[0].degree}")

cases = [
    "g=0; 1:[2] ; 1:[2] ; 1:[2]",
    "g=0; 2:[1] ; 2:[1] ; 2:[1] ; 2:[1]",
    "g=0; 1:[1],1:[1] ; 1:[1],1:[1] ; 1:[2] ; 2:[1]",
    "g=1; 2:[1] ; 2:[1]",
    "g=2; 1:[2] ; 1:[1,1]",
]
print()
for text in cases:
    mt = parse_multitype(text)
    h = h_omega(mt)
    for q in (5, 7):
        rep = oracle_vs_formula(mt, q, every_tuple=(mt.k <= 3))
        status = "ok" if rep["match"] else "MISMATCH"
        print(f"{text:<48} H = {str(h):<22} q={q}: {rep['formula']:>6} vs {rep['oracle']:>6}  {status}")
