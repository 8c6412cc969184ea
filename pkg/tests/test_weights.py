from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import CARTAN, KostantOracle
from symspec.roots import (
    LONG,
    build_root_system,
    casimir,
    dominant_representative,
    from_fundamental_weight_coords,
    highest_root,
    vec,
    zero,
)
from symspec.weights import (
    RootDatum,
    dimension,
    dominant_weights_below,
    multiplicity,
    verify_gordon_brown,
    weight_system,
)


@pytest.mark.parametrize("name", ["A2", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_adjoint_zero_weight_has_multiplicity_rank(name):
    rs = build_root_system(name)
    ws = weight_system(rs, highest_root(rs, LONG))
    assert ws.multiplicity(zero(rs.ambient_dim)) == rs.rank
    assert all(ws.multiplicity(r) == 1 for r in rs.roots)
    assert ws.dimension == rs.dim


@pytest.mark.parametrize("m", range(0, 7))
def test_a1_strings(m):
    rs = build_root_system("A1")
    lam = from_fundamental_weight_coords(rs, [m])
    entries = weight_system(rs, lam).entries()
    assert sorted(rs.labels(w)[0] for w in entries) == list(range(-m, m + 1, 2))
    assert set(entries.values()) == {1}


def test_g2_adjoint():
    rs = build_root_system("G2")
    entries = weight_system(rs, highest_root(rs)).entries()
    assert len(entries) == 13
    assert sum(entries.values()) == 14
    assert entries[zero(3)] == 2
    assert sorted(m for w, m in entries.items() if any(w)) == [1] * 12


def test_dimension_examples():
    f4 = build_root_system("F4")
    assert dimension(f4, zero(4)) == 1
    assert dimension(f4, vec([1, 0, 0, 0])) == 26
    assert weight_system(f4, vec([1, 0, 0, 0])).dimension == 26
    assert dimension(f4, highest_root(f4)) == 52 == f4.rank + len(f4.roots)


def test_multiplicity_examples():
    rs = build_root_system("A2")
    theta = highest_root(rs)
    assert multiplicity(rs, theta, zero(3)) == 2
    assert multiplicity(rs, theta, theta) == 1
    assert multiplicity(rs, theta, vec([5, -5, 0])) == 0
    # non-lattice point
    assert multiplicity(rs, theta, vec([F(1, 3), F(1, 3), F(-2, 3)])) == 0


def test_non_dominant_rejected():
    rs = build_root_system("B2")
    for f in (weight_system, dimension):
        with pytest.raises(ValueError):
            f(rs, vec([-1, 0]))


@pytest.mark.parametrize("name", ["A1", "A4", "B5", "C6", "D7", "E7", "E8", "F4", "G2"])
def test_gordon_brown(name):
    report = verify_gordon_brown(build_root_system(name))
    assert report.ok and report.lhs == report.rhs


def test_gordon_brown_a1_and_f4_values():
    a1 = build_root_system("A1")
    assert a1.killing_scale == F(1, 4)
    assert verify_gordon_brown(a1).lhs == 1
    assert verify_gordon_brown(build_root_system("F4")).lhs == 4


def test_dominant_weights_below_examples():
    assert dominant_weights_below(build_root_system("B3"), 0) == [zero(3)]
    a1 = build_root_system("A1")
    got = dominant_weights_below(a1, 1)
    assert [a1.labels(w)[0] for w in got] == [0, 1, 2]
    assert [casimir(a1, w) for w in got] == [0, F(3, 8), 1]
    f4 = build_root_system("F4")
    assert dominant_weights_below(f4, 1) == [zero(4), vec([1, 0, 0, 0]), highest_root(f4)]
    with pytest.raises(ValueError):
        dominant_weights_below(a1, -1)


@pytest.mark.parametrize("name,cutoff", [("A2", 3), ("B3", 2), ("G2", 3), ("C3", 2)])
def test_dominant_weights_below_is_complete(name, cutoff):
    rs = build_root_system(name)
    got = dominant_weights_below(rs, cutoff)
    # brute force over a box that is large enough for these cutoffs
    from itertools import product

    box = [
        from_fundamental_weight_coords(rs, c)
        for c in product(range(12), repeat=rs.rank)
    ]
    expected = sorted((w for w in box if casimir(rs, w) <= cutoff), key=lambda w: casimir(rs, w))
    assert set(got) == set(expected)
    assert [casimir(rs, w) for w in got] == sorted(casimir(rs, w) for w in got)


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_freudenthal_matches_kostant(name):
    rs = build_root_system(name)
    oracle = KostantOracle(CARTAN[name])
    assert rs.cartan_matrix == CARTAN[name]
    for lam in dominant_weights_below(rs, 2):
        ws = weight_system(rs, lam)
        got = {tuple(int(c) for c in rs.labels(w)): m for w, m in ws.dominant.items()}
        assert got == oracle.dominant_weights(tuple(int(c) for c in rs.labels(lam)))


def test_root_datum_orbit_sizes():
    rs = build_root_system("B3")
    d = RootDatum.of(rs)
    assert d.order == 48
    assert d.orbit_size((0, 0, 0)) == 1
    assert d.orbit_size((1, 0, 0)) == 6
    assert d.orbit_size((1, 1, 1)) == 48


@st.composite
def small_weight(draw):
    name = draw(st.sampled_from(["A2", "A3", "B2", "B3", "C3", "G2"]))
    rs = build_root_system(name)
    coords = draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank))
    return rs, from_fundamental_weight_coords(rs, coords)


@settings(max_examples=30, deadline=None)
@given(small_weight())
def test_weight_system_invariants(rw):
    rs, lam = rw
    ws = weight_system(rs, lam)
    assert sum(ws.entries().values()) == dimension(rs, lam) == ws.dimension
    for mu, m in ws.entries().items():
        assert ws.multiplicity(dominant_representative(rs, mu)[0]) == m
        diff = rs.root_coefficients(tuple(a - b for a, b in zip(lam, mu)))
        assert all(c.denominator == 1 and c >= 0 for c in diff)
    top = casimir(rs, lam)
    for mu in ws.dominant:
        if mu != ws.highest:
            assert casimir(rs, mu) < top
