from fractions import Fraction as F

import pytest

from symspec.branching import contains_trivial
from symspec.catalog import EQUAL, GREATER, first_eigenvalue_one_forms, instantiate, list_spaces
from symspec.roots import casimir, highest_root, unit, vec
from symspec.spectrum import (
    SearchExhausted,
    classify_lambda_mu,
    cutoff_schedule,
    expected_relation,
    first_function_eigenvalue,
)

DEFAULTS = [(entry.label, entry.defaults) for entry in list_spaces()]


def test_cutoff_schedule():
    assert cutoff_schedule(F(3, 5)) == [F(3, 5), F(6, 5), F(12, 5), 4]
    assert cutoff_schedule(1, 4) == [1, 2, 4]
    assert cutoff_schedule(4, 4) == [4]
    assert cutoff_schedule(0, 2) == [1, 2]


def test_even_sphere():
    pair = instantiate("B:grassmannian", p=2, q=0)
    lam, witness = first_function_eigenvalue(pair)
    assert lam == F(2, 3) and witness == unit(1, 2)


def test_quaternionic_projective_line():
    pair = instantiate("C:quaternionic", p=1, q=1)
    lam, witness = first_function_eigenvalue(pair)
    assert lam == F(2, 3) and witness == vec([1, 1])


def test_g2_function_eigenvalue_exceeds_one():
    lam, witness = first_function_eigenvalue(instantiate("G2:so4"))
    assert lam > 1
    assert lam == F(7, 6)


def test_classification_examples():
    rep = classify_lambda_mu(instantiate("C:lagrangian", n=2))
    assert rep.relation == EQUAL and rep.agrees
    rep = classify_lambda_mu(instantiate("F4:spin9"))
    assert rep.relation == EQUAL and rep.lam == F(2, 3)
    rep = classify_lambda_mu(instantiate("E8:so16"))
    assert rep.relation == GREATER and rep.agrees


def test_exhausted_search_is_explicit():
    pair = instantiate("G2:so4")
    with pytest.raises(SearchExhausted) as info:
        first_function_eigenvalue(pair, max_cutoff=F(11, 10))
    assert info.value.cutoff == F(11, 10)
    with pytest.raises(ValueError):
        first_function_eigenvalue(pair, max_cutoff=F(1, 2))


def test_raising_the_cutoff_does_not_change_lambda():
    pair = instantiate("D:grassmannian", p=2, q=3)
    a = first_function_eigenvalue(pair, max_cutoff=2)
    b = first_function_eigenvalue(pair, max_cutoff=8)
    assert a == b


@pytest.mark.parametrize("label,params", DEFAULTS, ids=[l for l, _ in DEFAULTS])
def test_reports_at_default_params(label, params):
    pair = instantiate(label, **params)
    rep = classify_lambda_mu(pair)
    assert rep.lam >= rep.mu
    assert contains_trivial(pair, rep.lambda_witness)
    assert casimir(pair.G, rep.lambda_witness) == rep.lam
    assert rep.agrees
    assert rep.expected_relation == expected_relation(pair)
    if rep.relation == EQUAL:
        assert rep.lam == first_eigenvalue_one_forms(pair)
    # the adjoint representation is spherical exactly for Hermitian spaces
    assert contains_trivial(pair, highest_root(pair.G)) == pair.is_hermitian
