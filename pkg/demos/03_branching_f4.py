"""
Restricting F4 to Spin(9)
=========================

Removing the last node of the F4 diagram (mark 2) leaves the compact roots
of Spin(9).  Restricting the 26-dimensional representation shows the
trivial representation, the spin representation and the vector.
"""

from symspec.branching import borel_de_siebenthal, node_marks, restrict_decompose, verify_isotropy_in_Vbeta
from symspec.roots import build_root_system, from_fundamental_weight_coords

def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


f4 = build_root_system("F4")
print("marks of the highest root:", node_marks(f4))

pair = borel_de_siebenthal(f4, 4, label="F4:spin9")
print(pair)
print("dim G/K =", pair.dim)
print("K simple roots:", ", ".join(show(t) for t in pair.K_simple_roots))

dec = restrict_decompose(pair, from_fundamental_weight_coords(f4, [0, 0, 0, 1]))
for k, m in dec.constituents:
    print("  B4 label", list(k.labels), "multiplicity", m)
print("total dimension", dec.dimension())

check = verify_isotropy_in_Vbeta(pair)
print("isotropy weight", ", ".join(show(r) for r in check.isotropy), "occurs in Res V(beta):", check.ok, "word", check.word)
