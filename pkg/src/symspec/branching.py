"""Equal-rank subgroups, symmetric pairs and restriction of representations.

A subgroup ``K`` of maximal rank shares the maximal torus of ``G``, so a
``G``-module restricts weight by weight; its ``K``-decomposition is read off
by peeling ``K``-highest weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .roots import (
    LONG,
    RootSystem,
    WeightVec,
    WeylWord,
    _require_dominant_integral,
    add,
    apply_word,
    cartan_components,
    dot,
    highest_root,
    length_class,
    rational_nullspace,
    scale,
    type_name,
    vec,
    zero,
)
from .weights import RootDatum


class SymmetricPair:
    """``G/K`` with ``K`` given by its (closed, equal-rank) set of compact roots.

    Attributes: ``G``, ``compact_roots``, ``noncompact_roots``,
    ``compact_positive``, ``noncompact_positive``, ``K_simple_roots`` (Bourbaki
    order within each simple factor), ``K_components`` (e.g. ``["D2", "B1"]``
    style names), ``central_directions``, ``label``, ``params``.
    """

    def __init__(self, G: RootSystem, compact_roots: Sequence[WeightVec], label: str = "", params: dict | None = None):
        self.G = G
        self.label = label
        self.params = dict(params or {})
        compact = {G.check(r) for r in compact_roots}
        bad = [r for r in compact if r not in G.root_set]
        if bad:
            raise ValueError(f"not roots of {G.name}: {bad[:3]}")
        if any(tuple(-c for c in r) not in compact for r in compact):
            raise ValueError("compact roots must be closed under negation")
        self.compact_roots = tuple(sorted(compact))
        self.noncompact_roots = tuple(r for r in G.roots if r not in compact)
        self.compact_positive = tuple(r for r in G.positive_roots if r in compact)
        self.noncompact_positive = tuple(r for r in G.positive_roots if r not in compact)
        self._check_closure(compact)

        pos = set(self.compact_positive)
        simple = [r for r in self.compact_positive if not any(add(r, tuple(-c for c in s)) in pos for s in pos)]
        order = {r: i for i, r in enumerate(sorted(simple, reverse=True))}
        cart = [[int(2 * dot(a, b) / dot(b, b)) for b in simple] for a in simple]
        comps = cartan_components(cart, key=lambda i: order[simple[i]])
        self.K_components = tuple(type_name(c) for c in comps)
        self.K_simple_roots = tuple(simple[i] for c in comps for i in c[2])
        self.K_delta = scale(Fraction(1, 2), _vsum(self.compact_positive, G.ambient_dim))

        # central directions: span of the roots, orthogonal to every compact root
        rows = [[dot(w, t) for w in G.fundamental_weights] for t in self.K_simple_roots]
        self.central_directions = tuple(
            G.from_labels(c) for c in rational_nullspace(rows, G.rank)
        ) if len(self.K_simple_roots) < G.rank else ()
        self.datum = RootDatum(G, self.K_simple_roots, self.compact_positive)

    def _check_closure(self, compact):
        G = self.G
        for i, a in enumerate(G.roots):
            for b in G.roots[i + 1:]:
                s = add(a, b)
                if s not in G.root_set:
                    continue
                if (a in compact) == (b in compact) and s not in compact:
                    kind = "compact" if a in compact else "symmetric-pair"
                    raise ValueError(f"{kind} closure fails: {a} + {b}")
                if (a in compact) != (b in compact) and s in compact:
                    raise ValueError(f"compact/noncompact sum {a} + {b} is compact")

    @property
    def is_hermitian(self) -> bool:
        return bool(self.central_directions)

    @property
    def dim(self) -> int:
        return len(self.noncompact_roots)

    @property
    def K_name(self) -> str:
        parts = list(self.K_components) + ["T1"] * len(self.central_directions)
        return "x".join(parts) if parts else "T0"

    def __repr__(self) -> str:
        p = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"SymmetricPair({self.label or self.G.name}{'(' + p + ')' if p else ''}: {self.G.name}/{self.K_name})"

    def k_label(self, mu: WeightVec) -> "KIrrepLabel":
        mu = self.G.check(mu)
        labels = tuple(int(2 * dot(mu, t) / dot(t, t)) for t in self.K_simple_roots)
        central = tuple(dot(mu, z) for z in self.central_directions)
        return KIrrepLabel(mu, labels, central)


def _vsum(vs, n):
    out = zero(n)
    for v in vs:
        out = add(out, v)
    return out


@dataclass(frozen=True)
class KIrrepLabel:
    """Irreducible ``K``-module: highest weight, its ``K`` fundamental
    coordinates, and its values on the central directions."""

    highest: WeightVec
    labels: tuple
    central: tuple

    @property
    def is_trivial(self) -> bool:
        return not any(self.highest)


def borel_de_siebenthal(rs: RootSystem, removed_node: int, label: str = "", params: dict | None = None) -> SymmetricPair:
    """Equal-rank symmetric pair obtained by removing a node of mark 1 or 2.

    A root is compact when its coefficient on the removed simple root is
    even.  Mark 1 gives the Levi subgroup (K with a one-dimensional
    center); mark 2 gives the semisimple subgroup read off from the
    extended Dynkin diagram.
    """
    if not 1 <= removed_node <= rs.rank:
        raise ValueError(f"node must be in 1..{rs.rank}")
    marks = node_marks(rs)
    m = marks[removed_node - 1]
    if m > 2:
        raise ValueError(f"node {removed_node} of {rs.name} has mark {m}; no involution for marks >= 3")
    k = removed_node - 1
    compact = [r for r in rs.roots if rs.root_coefficients(r)[k] % 2 == 0]
    return SymmetricPair(rs, compact, label=label, params=params)


def node_marks(rs: RootSystem) -> tuple[int, ...]:
    """Coefficients of the highest root on the simple roots."""
    return tuple(int(c) for c in rs.root_coefficients(highest_root(rs, LONG)))


# --------------------------------------------------------------------------
# restriction

@dataclass(frozen=True)
class Decomposition:
    pair: SymmetricPair
    highest: WeightVec
    constituents: tuple  # ((KIrrepLabel, multiplicity), ...) in extraction order

    def as_dict(self) -> dict:
        return dict(self.constituents)

    def multiplicity(self, kappa) -> int:
        if not isinstance(kappa, KIrrepLabel):
            kappa = self.pair.k_label(vec(kappa))
        return self.as_dict().get(kappa, 0)

    def dimension(self) -> int:
        d = self.pair.datum
        return sum(m * d.dimension(d._lab(k.highest)) for k, m in self.constituents)


def restricted_k_dominant(pair: SymmetricPair, lam: WeightVec) -> dict:
    """G-weights of V(lam) that are K-dominant, with multiplicities (labels)."""
    from .weights import RootDatum as _RD

    G = pair.G
    gd = _RD.of(G)
    kd = pair.datum
    out = {}
    for w, m in gd.freudenthal(gd._lab(lam)).items():
        for x in gd.orbit(w):
            if kd.is_dominant(x):
                out[x] = m
    return out


def restrict_decompose(pair: SymmetricPair, lam: WeightVec) -> Decomposition:
    """Decompose the restriction to ``K`` of the ``G``-irreducible ``V(lam)``."""
    G = pair.G
    lam = _require_dominant_integral(G, lam)
    cached = _DECOMP_CACHE.get((id(pair), lam))
    if cached is not None and cached.pair is pair:
        return cached
    kd = pair.datum
    remaining = restricted_k_dominant(pair, lam)
    order = sorted(remaining, key=lambda x: (-kd.norm(x), tuple(-c for c in G.from_labels(x))))
    found = []
    for x in order:
        m = remaining[x]
        if m == 0:
            continue
        if m < 0:
            raise RuntimeError(f"negative multiplicity {m} at {x} while restricting {lam}")
        found.append((pair.k_label(G.from_labels(x)), m))
        for y, my in kd.freudenthal(x).items():
            if y not in remaining:
                raise RuntimeError(f"K-weight {y} of constituent {x} missing from restriction of {lam}")
            remaining[y] -= m * my
    result = Decomposition(pair, lam, tuple(found))
    _DECOMP_CACHE[(id(pair), lam)] = result
    return result


_DECOMP_CACHE: dict = {}


def mult_in_restriction(pair: SymmetricPair, lam: WeightVec, kappa) -> int:
    """Multiplicity of the K-irreducible ``kappa`` (label or highest weight)."""
    return restrict_decompose(pair, lam).multiplicity(kappa)


def contains_trivial(pair: SymmetricPair, lam: WeightVec) -> bool:
    return mult_in_restriction(pair, lam, zero(pair.G.ambient_dim)) > 0


# --------------------------------------------------------------------------
# isotropy representation

def isotropy_highest_weights(pair: SymmetricPair) -> list[tuple[WeightVec, str]]:
    """K-highest weights of the complexified tangent space, with length class.

    These are the noncompact roots that are K-dominant and cannot be raised
    by a simple compact root.
    """
    G = pair.G
    out = []
    for r in pair.noncompact_roots:
        if all(dot(r, t) >= 0 for t in pair.K_simple_roots) and all(
            add(r, t) not in G.root_set for t in pair.K_simple_roots
        ):
            out.append((r, length_class(G, r)))
    return sorted(out, reverse=True)


def isotropy_alpha(pair: SymmetricPair) -> WeightVec:
    """Highest weight of the isotropy representation among positive roots."""
    pos = set(pair.noncompact_positive)
    (alpha,) = [r for r, _ in isotropy_highest_weights(pair) if r in pos]
    return alpha


def matched_weyl_word(pair: SymmetricPair, alpha: WeightVec | None = None) -> tuple[WeightVec, WeylWord]:
    """A Weyl word ``w`` with ``w alpha = beta`` and ``w`` of every simple compact root positive.

    ``beta`` is the highest root of the length class of ``alpha``.  The word
    is the chamber walk that makes ``alpha + e delta_K + e^2 delta_G``
    dominant for infinitesimal ``e > 0``: comparisons are lexicographic on
    the three pairings, so no numerical ``e`` is needed.
    """
    G = pair.G
    alpha = isotropy_alpha(pair) if alpha is None else alpha
    beta = highest_root(G, length_class(G, alpha))
    a, dk, dg = alpha, pair.K_delta, G.delta
    word = []
    while True:
        for i, s in enumerate(G.simple_roots):
            key = (G.pairing(a, i), G.pairing(dk, i), G.pairing(dg, i))
            if key < (0, 0, 0):
                a, dk, dg = (_refl(s, v) for v in (a, dk, dg))
                word.append(i + 1)
                break
        else:
            break
    word = tuple(word)
    if not check_matched_word(pair, alpha, beta, word):
        raise RuntimeError(f"no Weyl element found carrying {alpha} to {beta} for {pair!r}")
    return beta, word


def check_matched_word(pair: SymmetricPair, alpha, beta, word) -> bool:
    G = pair.G
    if apply_word(G, word, alpha) != beta:
        return False
    pos = set(G.positive_roots)
    return all(apply_word(G, word, t) in pos for t in pair.K_simple_roots)


def _refl(a, v):
    c = 2 * dot(v, a) / dot(a, a)
    return tuple(x - c * y for x, y in zip(v, a)) if c else v


@dataclass(frozen=True)
class IsotropyCheck:
    ok: bool
    beta: WeightVec
    length_class: str
    word: WeylWord
    isotropy: tuple  # K-highest weights of the tangent space
    constituents: tuple  # K-highest weights in Res V(beta)
    missing: tuple


def verify_isotropy_in_Vbeta(pair: SymmetricPair) -> IsotropyCheck:
    """Check that the isotropy representation occurs in Res V(beta)."""
    alpha = isotropy_alpha(pair)
    beta, word = matched_weyl_word(pair, alpha)
    iso = tuple(r for r, _ in isotropy_highest_weights(pair))
    dec = restrict_decompose(pair, beta)
    highs = tuple(k.highest for k, _ in dec.constituents)
    missing = tuple(r for r in iso if r not in highs)
    return IsotropyCheck(not missing, beta, length_class(pair.G, alpha), word, iso, highs, missing)
