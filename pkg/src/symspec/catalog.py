"""The irreducible compact simply-connected inner symmetric spaces of type I.

Every family is built by removing one node of the Dynkin diagram of ``G``
(see :func:`symspec.branching.borel_de_siebenthal`).  For the classical
families the removed node is ``p`` (real and quaternionic Grassmannians,
``SU(p+q)``) or the last node (``Sp(n)/U(n)``, ``SO(2n)/U(n)``).  Removed
nodes for the exceptional families, in Bourbaki numbering:

==============  =====  ==========
label           node   mark
==============  =====  ==========
G2:so4          2      2
F4:sp3sp1       1      2
F4:spin9        4      2
E6:so10so2      1      1
E6:su6su2       2      2
E7:e6so2        7      1
E7:su8          2      2
E7:so12su2      1      2
E8:so16         1      2
E8:e7su2        8      2
==============  =====  ==========

Only root data are modeled; quotients such as ``SU(8)/{+-I}`` or the spin
action of ``SO'(16)`` do not change any eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .branching import (
    SymmetricPair,
    borel_de_siebenthal,
    isotropy_alpha,
    isotropy_highest_weights,
    matched_weyl_word,
)
from .roots import LONG, SHORT, _build, build_root_system, casimir, length_class

EQUAL, GREATER = "equal", "lambda_greater"


@dataclass(frozen=True)
class CatalogEntry:
    """One row of the classification table."""

    label: str
    name: str  # printable G/K, with parameters as letters
    param_names: tuple
    defaults: dict
    constraint: str
    root_lengths: int
    _valid: Callable = field(repr=False)
    _group: Callable = field(repr=False)  # params -> (family, rank, node)
    _length: Callable = field(repr=False)  # params -> long/short
    _eigen: Callable = field(repr=False)  # params -> Fraction
    formula: str = "1"
    hermitian: Callable = field(default=lambda **_: False, repr=False)
    notes: tuple = ()
    sweep: Callable = field(default=lambda: [{}], repr=False)
    _display: Callable | None = field(default=None, repr=False)

    def check_params(self, params: dict) -> dict:
        extra = set(params) - set(self.param_names)
        if extra:
            raise ValueError(f"{self.label}: unknown parameters {sorted(extra)}")
        p = {**self.defaults, **params}
        missing = [k for k in self.param_names if k not in p]
        if missing:
            raise ValueError(f"{self.label}: missing parameters {missing}")
        if not all(isinstance(p[k], int) for k in self.param_names) or not self._valid(**p):
            raise ValueError(f"{self.label}: parameters {p} violate {self.constraint}")
        return {k: p[k] for k in self.param_names}

    def expected_length_class(self, **params) -> str:
        return self._length(**self.check_params(params))

    def expected_eigenvalue(self, **params) -> Fraction:
        return Fraction(self._eigen(**self.check_params(params)))

    def expected_relation(self, **params) -> str:
        p = self.check_params(params)
        return EQUAL if self.hermitian(**p) or self._length(**p) == SHORT else GREATER

    def display_name(self, **params) -> str:
        p = self.check_params(params)
        return self._display(**p) if self._display else self.name


def _fixed(label, name, family, node, lengths, length=LONG, eigen=1, formula="1", hermitian=False, notes=()):
    return CatalogEntry(
        label=label,
        name=name,
        param_names=(),
        defaults={},
        constraint="no parameters",
        root_lengths=lengths,
        _valid=lambda: True,
        _group=lambda: (family, None, node),
        _length=lambda: length,
        _eigen=lambda: eigen,
        formula=formula,
        hermitian=lambda: hermitian,
        notes=notes,
    )


def _pq_sweep(valid, pmax=4, qmax=4, qmin=0):
    return lambda: [{"p": p, "q": q} for p in range(1, pmax + 1) for q in range(qmin, qmax + 1) if valid(p=p, q=q)]


_SO_N2_NOTE = (
    "discrepancy: the lambda = mu list names SO(p+2)/SO(n)xSO(2); taken to mean "
    "SO(n+2)/SO(n)xSO(2), this family at p = 1"
)
_F4_NOTE = (
    "discrepancy: the lambda = mu list names F4/Sp(3).Sp(1) as a short-root case; the "
    "eigenvalue table has Spin(9) short and Sp(3).Sp(1) long, and the catalog follows the table"
)

_a_valid = lambda p, q: 1 <= p <= q
_b_valid = lambda p, q: p >= 1 and q >= 0
_c_valid = lambda p, q: 1 <= p <= q
_d_valid = lambda p, q: 1 <= p <= q and p + q >= 3

_ENTRIES = [
    CatalogEntry(
        "A:grassmannian", "SU(p+q)/S(U(p)xU(q))", ("p", "q"), {"p": 2, "q": 3}, "1 <= p <= q", 1,
        _a_valid, lambda p, q: ("A", p + q - 1, p), lambda p, q: LONG, lambda p, q: 1,
        hermitian=lambda p, q: True, sweep=_pq_sweep(_a_valid),
        _display=lambda p, q: f"SU({p + q})/S(U({p})xU({q}))",
    ),
    CatalogEntry(
        "B:grassmannian", "SO(2p+2q+1)/SO(2p)xSO(2q+1)", ("p", "q"), {"p": 3, "q": 0},
        "p >= 1, q >= 0", 2,
        _b_valid, lambda p, q: ("B", p + q, p),
        # B1 has a single root length, which counts as long
        lambda p, q: SHORT if q == 0 and p > 1 else LONG,
        lambda p, q: Fraction(p, 2 * p - 1) if q == 0 else 1,
        formula="p/(2p-1) if q=0, else 1",
        hermitian=lambda p, q: p == 1, notes=(_SO_N2_NOTE,), sweep=_pq_sweep(_b_valid),
        _display=lambda p, q: f"SO({2 * p + 2 * q + 1})/SO({2 * p})xSO({2 * q + 1})",
    ),
    CatalogEntry(
        "C:quaternionic", "Sp(p+q)/Sp(p)xSp(q)", ("p", "q"), {"p": 1, "q": 2}, "1 <= p <= q", 2,
        _c_valid, lambda p, q: ("C", p + q, p), lambda p, q: SHORT,
        lambda p, q: Fraction(p + q, p + q + 1), formula="(p+q)/(p+q+1)", sweep=_pq_sweep(_c_valid),
        _display=lambda p, q: f"Sp({p + q})/Sp({p})xSp({q})",
    ),
    CatalogEntry(
        "C:lagrangian", "Sp(n)/U(n)", ("n",), {"n": 3}, "n >= 2", 2,
        lambda n: n >= 2, lambda n: ("C", n, n), lambda n: LONG, lambda n: 1,
        hermitian=lambda n: True, sweep=lambda: [{"n": n} for n in range(2, 6)],
        _display=lambda n: f"Sp({n})/U({n})",
    ),
    CatalogEntry(
        "D:grassmannian", "SO(2p+2q)/SO(2p)xSO(2q)", ("p", "q"), {"p": 2, "q": 3},
        "1 <= p <= q, p + q >= 3", 1,
        _d_valid, lambda p, q: ("D", p + q, p), lambda p, q: LONG, lambda p, q: 1,
        hermitian=lambda p, q: p == 1, notes=(_SO_N2_NOTE,), sweep=_pq_sweep(_d_valid),
        _display=lambda p, q: f"SO({2 * p + 2 * q})/SO({2 * p})xSO({2 * q})",
    ),
    CatalogEntry(
        "D:complex", "SO(2n)/U(n)", ("n",), {"n": 4}, "n > 2", 1,
        lambda n: n > 2, lambda n: ("D", n, n), lambda n: LONG, lambda n: 1,
        hermitian=lambda n: True, sweep=lambda: [{"n": n} for n in range(3, 6)],
        _display=lambda n: f"SO({2 * n})/U({n})",
    ),
    _fixed("G2:so4", "G2/SO(4)", "G2", 2, 2),
    _fixed("F4:sp3sp1", "F4/Sp(3).Sp(1)", "F4", 1, 2, notes=(_F4_NOTE,)),
    _fixed("F4:spin9", "F4/Spin(9)", "F4", 4, 2, length=SHORT, eigen=Fraction(2, 3), formula="2/3", notes=(_F4_NOTE,)),
    _fixed("E6:so10so2", "E6/SO(10).SO(2)", "E6", 1, 1, hermitian=True),
    _fixed("E6:su6su2", "E6/SU(6).SU(2)", "E6", 2, 1),
    _fixed("E7:e6so2", "E7/E6.SO(2)", "E7", 7, 1, hermitian=True),
    _fixed("E7:su8", "E7/(SU(8)/{+-I})", "E7", 2, 1),
    _fixed("E7:so12su2", "E7/SO'(12).SU(2)", "E7", 1, 1),
    _fixed("E8:so16", "E8/SO'(16)", "E8", 1, 1),
    _fixed("E8:e7su2", "E8/E7.SU(2)", "E8", 8, 1),
]

CATALOG = {e.label: e for e in _ENTRIES}


def list_spaces() -> list[CatalogEntry]:
    return list(_ENTRIES)


def get_entry(label: str) -> CatalogEntry:
    try:
        return CATALOG[label]
    except KeyError:
        raise ValueError(f"unknown space {label!r}; known: {', '.join(CATALOG)}") from None


_PAIR_CACHE: dict = {}


def instantiate(label: str, **params) -> SymmetricPair:
    """Build the symmetric pair for one catalog row."""
    entry = get_entry(label)
    p = entry.check_params(params)
    key = (label, tuple(sorted(p.items())))
    if key not in _PAIR_CACHE:
        family, rank, node = entry._group(**p)
        # B1 (the 2-sphere) is below the usual rank range of type B
        rs = _build("B", 1) if (family, rank) == ("B", 1) else build_root_system(family, rank)
        _PAIR_CACHE[key] = borel_de_siebenthal(rs, node, label=label, params=p)
    return _PAIR_CACHE[key]


def matched_beta(pair: SymmetricPair):
    """Highest root of the isotropy class and a Weyl word carrying alpha to it."""
    return matched_weyl_word(pair)


def isotropy_length_class(pair: SymmetricPair) -> str:
    return length_class(pair.G, isotropy_alpha(pair))


def first_eigenvalue_one_forms(pair: SymmetricPair) -> Fraction:
    """First eigenvalue of the Laplacian on 1-forms: casimir of the matched root."""
    beta, _ = matched_beta(pair)
    return casimir(pair.G, beta)


__all__ = [
    "CATALOG",
    "CatalogEntry",
    "EQUAL",
    "GREATER",
    "first_eigenvalue_one_forms",
    "get_entry",
    "instantiate",
    "isotropy_highest_weights",
    "isotropy_length_class",
    "list_spaces",
    "matched_beta",
]
