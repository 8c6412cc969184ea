"""
Weight multiplicities by Freudenthal's recursion
================================================
"""

from symspec.roots import build_root_system, casimir, from_fundamental_weight_coords, highest_root
from symspec.weights import dimension, dominant_weights_below, verify_gordon_brown, weight_system

def show(v):
    return "(" + ", ".join(str(c) for c in v) + ")"


g2 = build_root_system("G2")
adj = weight_system(g2, highest_root(g2))

# only dominant weights are stored, together with their orbit sizes
for mu, m in adj.dominant.items():
    print(show(g2.labels(mu)), "mult", m, "orbit", adj.orbit_sizes[mu])
print("dimension", adj.dimension)

# expand the full weight diagram on demand
entries = adj.entries()
print(len(entries), "distinct weights; zero weight multiplicity", entries[(0, 0, 0)])

# the 26-dimensional representation of F4
f4 = build_root_system("F4")
v = from_fundamental_weight_coords(f4, [0, 0, 0, 1])
print("F4 [0,0,0,1]:", dimension(f4, v), "=", weight_system(f4, v).dimension)

# Gordon Brown: twice the sum of the squared lengths of positive roots is the rank
for name in ("A1", "B5", "E7"):
    report = verify_gordon_brown(build_root_system(name))
    print(name, report.lhs, "==", report.rhs, report.ok)

# dominant weights of B3 up to Casimir value 1, in increasing order
b3 = build_root_system("B3")
for w in dominant_weights_below(b3, 1):
    print("B3", show(b3.labels(w)), casimir(b3, w))
