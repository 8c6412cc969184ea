"""First eigenvalue of the Laplacian on functions, via spherical representations.

The function spectrum consists of the Casimir eigenvalues of the
``G``-irreducibles whose restriction to ``K`` contains the trivial
representation.  The search scans dominant weights in increasing Casimir
order below an escalating cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .branching import SymmetricPair, contains_trivial
from .catalog import CATALOG, EQUAL, GREATER, first_eigenvalue_one_forms, isotropy_length_class
from .roots import SHORT, WeightVec, casimir
from .weights import dominant_weights_below

DEFAULT_MAX_CUTOFF = Fraction(4)


class SearchExhausted(RuntimeError):
    """No spherical representation with Casimir eigenvalue below the cutoff."""

    def __init__(self, pair, cutoff):
        super().__init__(f"no spherical representation of {pair!r} with casimir <= {cutoff}")
        self.pair = pair
        self.cutoff = cutoff


def cutoff_schedule(start, max_cutoff=DEFAULT_MAX_CUTOFF) -> list[Fraction]:
    start, max_cutoff = Fraction(start), Fraction(max_cutoff)
    if start <= 0:
        start = min(Fraction(1), max_cutoff)
    out = []
    c = min(start, max_cutoff)
    while c < max_cutoff:
        out.append(c)
        c *= 2
    out.append(max_cutoff)
    return out


def first_function_eigenvalue(pair: SymmetricPair, max_cutoff=DEFAULT_MAX_CUTOFF) -> tuple[Fraction, WeightVec]:
    """Smallest nonzero Casimir eigenvalue of a spherical representation, and its weight."""
    mu = first_eigenvalue_one_forms(pair)
    max_cutoff = Fraction(max_cutoff)
    if max_cutoff < mu:
        raise ValueError(f"cutoff {max_cutoff} is below the 1-form eigenvalue {mu}")
    G = pair.G
    tested = set()
    for cutoff in cutoff_schedule(mu, max_cutoff):
        for gamma in dominant_weights_below(G, cutoff):
            if gamma in tested or not any(gamma):
                continue
            tested.add(gamma)
            if contains_trivial(pair, gamma):
                return casimir(G, gamma), gamma
    raise SearchExhausted(pair, max_cutoff)


@dataclass(frozen=True)
class SpectrumReport:
    label: str
    params: dict
    mu: Fraction  # first eigenvalue on 1-forms
    lam: Fraction  # first nonzero eigenvalue on functions
    lambda_witness: WeightVec
    relation: str
    expected_relation: str
    agrees: bool
    notes: tuple = ()


def expected_relation(pair: SymmetricPair) -> str:
    """lambda = mu for Hermitian spaces and for short isotropy weight, else lambda > mu."""
    if pair.label in CATALOG:
        return CATALOG[pair.label].expected_relation(**pair.params)
    return EQUAL if pair.is_hermitian or isotropy_length_class(pair) == SHORT else GREATER


def classify_lambda_mu(pair: SymmetricPair, max_cutoff=DEFAULT_MAX_CUTOFF) -> SpectrumReport:
    mu = first_eigenvalue_one_forms(pair)
    lam, witness = first_function_eigenvalue(pair, max_cutoff)
    if lam < mu:
        raise RuntimeError(f"{pair!r}: function eigenvalue {lam} below 1-form eigenvalue {mu}")
    relation = EQUAL if lam == mu else GREATER
    expected = expected_relation(pair)
    notes = CATALOG[pair.label].notes if pair.label in CATALOG else ()
    return SpectrumReport(pair.label, dict(pair.params), mu, lam, witness, relation, expected, relation == expected, notes)
