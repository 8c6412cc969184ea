"""
First eigenvalue on 1-forms for the sixteen families
====================================================
"""

from symspec.catalog import first_eigenvalue_one_forms, instantiate, isotropy_length_class, list_spaces, matched_beta

for entry in list_spaces():
    pair = instantiate(entry.label)
    mu = first_eigenvalue_one_forms(pair)
    beta, word = matched_beta(pair)
    print(f"{entry.display_name(**pair.params):24} {isotropy_length_class(pair):5} mu = {str(mu):4}"
          f" expected {entry.formula}  word {word}")

# the short-root families across parameters
for p in range(1, 5):
    print("S^%d:" % (2 * p), first_eigenvalue_one_forms(instantiate("B:grassmannian", p=p, q=0)))
for p, q in [(1, 1), (1, 2), (2, 2), (2, 3)]:
    print(f"Sp({p + q})/Sp({p})xSp({q}):", first_eigenvalue_one_forms(instantiate("C:quaternionic", p=p, q=q)))
