"""
Functions versus 1-forms
========================

The first eigenvalue on functions is the smallest Casimir value of a
spherical representation.  It never lies below the first eigenvalue on
1-forms, and the two agree for Hermitian spaces and for short isotropy
weight.
"""

import time

from symspec.catalog import instantiate, list_spaces
from symspec.roots import fundamental_weight_coords
from symspec.spectrum import classify_lambda_mu

t0 = time.perf_counter()
for entry in list_spaces():
    pair = instantiate(entry.label)
    rep = classify_lambda_mu(pair)
    w = fundamental_weight_coords(pair.G, rep.lambda_witness)
    print(f"{entry.label:16} mu={str(rep.mu):5} lambda={str(rep.lam):6} {rep.relation:15} witness {list(w)}")
    for note in rep.notes:
        print("    note:", note)
print(f"{time.perf_counter() - t0:.1f}s")
