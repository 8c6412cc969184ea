"""Weight systems of irreducible representations.

Multiplicities come from Freudenthal's recursion, run on integer Dynkin
labels relative to the fundamental weights of the ambient simple group.
The same engine serves equal-rank subgroups: a :class:`RootDatum` is any
root subsystem of ``G`` (possibly reductive) described by its simple roots,
coroots and positive roots in those labels.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Sequence

from .roots import (
    RootSystem,
    WeightVec,
    _require_dominant_integral,
    cartan_components,
    casimir,
    dot,
    weyl_group_order,
)

Labels = tuple  # tuple[int, ...]


def _ladd(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _lsub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _ldot(x, y):
    return sum(a * b for a, b in zip(x, y))


class RootDatum:
    """A root subsystem of ``rs`` acting on the weight lattice of ``rs``.

    Weights are integer label tuples ``(<v, a_1^vee>, ..., <v, a_n^vee>)``
    for the simple roots ``a_i`` of ``rs``.  ``simple_roots`` and
    ``positive_roots`` are given in orthogonal coordinates.
    """

    def __init__(self, rs: RootSystem, simple_roots: Sequence[WeightVec], positive_roots: Sequence[WeightVec]):
        self.rs = rs
        self.simple_vectors = tuple(simple_roots)
        self.simple = tuple(self._lab(a) for a in simple_roots)
        # <v, t^vee> = sum_j v_j <w_j, t^vee>
        self.coroots = tuple(
            tuple(int(2 * dot(w, t) / dot(t, t)) for w in rs.fundamental_weights) for t in simple_roots
        )
        self.positive = tuple(self._lab(a) for a in positive_roots)
        n = rs.rank
        gram = [[dot(rs.fundamental_weights[i], rs.fundamental_weights[j]) for j in range(n)] for i in range(n)]
        self.D = reduce(lcm, (g.denominator for row in gram for g in row), 1)
        self.form = tuple(tuple(int(g * self.D) for g in row) for row in gram)
        self.positive_form = tuple(self._form_vec(a) for a in self.positive)
        self.two_delta = reduce(_ladd, self.positive, (0,) * n)
        self.two_delta_form = self._form_vec(self.two_delta)
        self.cartan = tuple(tuple(_ldot(self.coroots[j], self.simple[i]) for j in range(len(self.simple))) for i in range(len(self.simple)))
        self.order = _weyl_order(self.cartan)

    def _lab(self, v: WeightVec) -> Labels:
        return tuple(int(p) for p in self.rs.labels(v))

    def _form_vec(self, a: Labels) -> Labels:
        return tuple(_ldot(row, a) for row in self.form)

    @classmethod
    def of(cls, rs: RootSystem) -> "RootDatum":
        cached = _DATUM_CACHE.get(rs)
        if cached is None:
            cached = _DATUM_CACHE[rs] = cls(rs, rs.simple_roots, rs.positive_roots)
        return cached

    def ip(self, x: Labels, y: Labels) -> int:
        """``D * (x, y)`` in the Euclidean form of the realization."""
        return _ldot(x, self._form_vec(y))

    def pairings(self, x: Labels) -> tuple:
        return tuple(_ldot(c, x) for c in self.coroots)

    def is_dominant(self, x: Labels) -> bool:
        return all(_ldot(c, x) >= 0 for c in self.coroots)

    def dominant(self, x: Labels) -> Labels:
        while True:
            for c, a in zip(self.coroots, self.simple):
                p = _ldot(c, x)
                if p < 0:
                    x = tuple(xi - p * ai for xi, ai in zip(x, a))
                    break
            else:
                return x

    def orbit(self, x: Labels) -> set:
        seen = {x}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for c, a in zip(self.coroots, self.simple):
                p = _ldot(c, v)
                if p:
                    w = tuple(vi - p * ai for vi, ai in zip(v, a))
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
        return seen

    def orbit_size(self, x: Labels) -> int:
        """|W| / |Stab(x)| for dominant ``x``."""
        fixed = [i for i, p in enumerate(self.pairings(x)) if p == 0]
        sub = [[self.cartan[i][j] for j in fixed] for i in fixed]
        return self.order // _weyl_order(sub)

    def norm(self, x: Labels) -> int:
        """``D * (x, x + 2 delta)``; orders dominant weights of one module."""
        return self.ip(x, x) + _ldot(x, self.two_delta_form)

    def dominant_weights(self, lam: Labels) -> list:
        """Dominant weights of the irreducible module of highest weight ``lam``."""
        seen = {lam}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            for a in self.positive:
                w = _lsub(v, a)
                if w not in seen and self.is_dominant(w):
                    seen.add(w)
                    queue.append(w)
        return sorted(seen, key=lambda x: (-self.norm(x), tuple(-c for c in x)))

    def freudenthal(self, lam: Labels) -> dict:
        """Multiplicities of the dominant weights of ``V(lam)``."""
        if not self.is_dominant(lam):
            raise ValueError(f"{lam} is not dominant")
        dom = self.dominant_weights(lam)
        present = set(dom)
        top = self.norm(lam)
        mult = {lam: 1}
        rep_cache: dict = {}
        for mu in dom[1:]:
            total = 0
            for a, fa in zip(self.positive, self.positive_form):
                x = _ladd(mu, a)
                while True:
                    d = rep_cache.get(x)
                    if d is None:
                        d = rep_cache[x] = self.dominant(x)
                    if d not in present:
                        break
                    total += mult[d] * _ldot(x, fa)
                    x = _ladd(x, a)
            den = top - self.norm(mu)
            if den <= 0:
                raise RuntimeError(f"Freudenthal denominator {den} at {mu} for highest weight {lam}")
            m, rem = divmod(2 * total, den)
            if rem or m <= 0:
                raise RuntimeError(f"non-integral multiplicity {Fraction(2 * total, den)} at {mu}")
            mult[mu] = m
        return mult

    def dimension(self, lam: Labels) -> int:
        lam2 = _ladd(_ladd(lam, lam), self.two_delta)
        num = den = 1
        for fa in self.positive_form:
            num *= _ldot(lam2, fa)
            den *= _ldot(self.two_delta, fa)
        q = Fraction(num, den)
        assert q.denominator == 1
        return int(q)


_DATUM_CACHE: dict = {}


def _weyl_order(cartan) -> int:
    out = 1
    for t, r, _ in cartan_components(cartan):
        out *= weyl_group_order(t, r)
    return out


@dataclass(eq=False)
class WeightSystem:
    """Weights of one irreducible module, stored on dominant representatives.

    ``dominant`` maps each dominant weight to its multiplicity and
    ``orbit_sizes`` to the size of its Weyl orbit; :meth:`entries` expands
    the full weight map on demand.
    """

    rs: RootSystem
    highest: WeightVec
    dominant: dict
    orbit_sizes: dict
    _entries: dict | None = field(default=None, repr=False)

    @property
    def dimension(self) -> int:
        return sum(m * self.orbit_sizes[w] for w, m in self.dominant.items())

    def entries(self) -> dict:
        if self._entries is None:
            datum = RootDatum.of(self.rs)
            out = {}
            for w, m in self.dominant.items():
                for x in datum.orbit(datum._lab(w)):
                    out[self.rs.from_labels(x)] = m
            self._entries = dict(sorted(out.items()))
        return self._entries

    def multiplicity(self, mu: WeightVec) -> int:
        labels = self.rs.labels(self.rs.check(mu))
        if any(p.denominator != 1 for p in labels):
            return 0
        datum = RootDatum.of(self.rs)
        d = datum.dominant(tuple(int(p) for p in labels))
        return self.dominant.get(self.rs.from_labels(d), 0)


def weight_system(rs: RootSystem, lam: WeightVec) -> WeightSystem:
    """Weight system of the irreducible module with highest weight ``lam``."""
    lam = _require_dominant_integral(rs, lam)
    datum = RootDatum.of(rs)
    mult = datum.freudenthal(datum._lab(lam))
    dominant = {rs.from_labels(x): m for x, m in mult.items()}
    sizes = {rs.from_labels(x): datum.orbit_size(x) for x in mult}
    return WeightSystem(rs, lam, dominant, sizes)


def dimension(rs: RootSystem, lam: WeightVec) -> int:
    """Weyl dimension formula."""
    lam = _require_dominant_integral(rs, lam)
    datum = RootDatum.of(rs)
    return datum.dimension(datum._lab(lam))


def multiplicity(rs: RootSystem, lam: WeightVec, mu: WeightVec) -> int:
    return weight_system(rs, lam).multiplicity(mu)


@dataclass(frozen=True)
class GordonBrownReport:
    system: str
    lhs: Fraction  # 2 * sum over positive roots of <t, t>
    rhs: int  # rank
    ok: bool


def verify_gordon_brown(rs: RootSystem) -> GordonBrownReport:
    lhs = 2 * rs.killing_scale * sum((dot(t, t) for t in rs.positive_roots), Fraction(0))
    return GordonBrownReport(rs.name, lhs, rs.rank, lhs == rs.rank)


def dominant_weights_below(rs: RootSystem, cutoff) -> list[WeightVec]:
    """All dominant integral weights with Casimir eigenvalue at most ``cutoff``.

    Sorted by Casimir eigenvalue, ties by descending fundamental coordinates.
    The Casimir eigenvalue is increasing in every fundamental coordinate,
    which bounds the scan.
    """
    cutoff = Fraction(cutoff)
    if cutoff < 0:
        raise ValueError("cutoff must be nonnegative")
    datum = RootDatum.of(rs)
    bound = cutoff / rs.killing_scale * datum.D  # compare on D * (x, x + 2 delta)
    n = rs.rank
    found = []

    def scan(i, x):
        if i == n:
            found.append(x)
            return
        x = list(x)
        while datum.norm(tuple(x)) <= bound:
            scan(i + 1, tuple(x))
            x[i] += 1

    scan(0, (0,) * n)
    found.sort(key=lambda x: (datum.norm(x), tuple(-c for c in x)))
    return [rs.from_labels(x) for x in found]


def casimir_of_labels(rs: RootSystem, labels: Sequence[int]) -> Fraction:
    return casimir(rs, rs.from_labels(labels))
