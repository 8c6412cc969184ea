"""
Root systems and the Killing normalization
==========================================

A tour of :mod:`symspec.roots`.  Everything is an exact Fraction.
"""

from fractions import Fraction

from symspec.roots import (
    SHORT,
    build_root_system,
    casimir,
    dominant_representative,
    highest_root,
    inner,
    reflect,
    weyl_orbit,
)

def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


# B3 in the orthogonal coordinates x1, x2, x3
b3 = build_root_system("B", 3)
print(b3, "has", len(b3.roots), "roots")
print("simple roots:", ", ".join(show(a) for a in b3.simple_roots))
print("Cartan matrix:", b3.cartan_matrix)

# the scale of the Killing form is fixed by <delta, delta> = dim / 24
print("killing scale of B3:", b3.killing_scale)  # 1/10
print("<delta, delta> =", inner(b3, b3.delta, b3.delta), "= dim/24 =", Fraction(b3.dim, 24))

# the highest long root always has Casimir eigenvalue 1
for name in ("A4", "C3", "G2", "F4", "E8"):
    rs = build_root_system(name)
    print(f"{name:3} casimir(theta) = {casimir(rs, highest_root(rs))}")

# F4: one reflection carries the spin weight to the highest short root
f4 = build_root_system("F4")
a4 = f4.simple_roots[3]
spin = tuple(Fraction(1, 2) for _ in range(4))
print("sigma_4 (1/2,1/2,1/2,1/2) =", show(reflect(f4, a4, spin)))
print("highest short root of F4:", show(highest_root(f4, SHORT)))
print("its casimir:", casimir(f4, highest_root(f4, SHORT)))  # 2/3

# orbits and dominant representatives
g2 = build_root_system("G2")
print("G2 orbit of a short root has", len(weyl_orbit(g2, g2.simple_roots[0])), "elements")
rep, word = dominant_representative(b3, (-1, 0, 0))
print("dominant representative of -x1 in B3:", show(rep), "via word", word)
