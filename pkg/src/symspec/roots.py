"""Root systems of the simple Lie algebras in explicit orthogonal coordinates.

Weights are tuples of :class:`fractions.Fraction` (``WeightVec``).  The
realizations are the Bourbaki ones; for B, C, F4 and G2 they coincide with
the coordinates commonly used for symmetric spaces (``x_1, ..., x_n``
orthonormal up to the Killing scale).

Conventions
-----------
* Simple roots and fundamental weights are numbered as in Bourbaki.
* ``cartan_matrix[i][j] = 2 (a_i, a_j) / (a_j, a_j)``.
* A Weyl word ``(i1, i2, ..., ik)`` acts on a weight by applying ``s_i1``
  first, then ``s_i2``, and so on (1-based simple-root indices).
* The weight space is the real span of the roots.  For A, G2, E6 and E7 it
  is a proper subspace of the ambient coordinates; vectors are projected
  onto it before pairing.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

import sympy

Rat = Fraction
WeightVec = tuple  # tuple[Fraction, ...]
WeylWord = tuple  # tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
LONG, SHORT = "long", "short"

_HALF = Fraction(1, 2)


def vec(coords: Iterable) -> WeightVec:
    """Coerce ints, strings like ``"1/2"`` or Fractions to a WeightVec."""
    return tuple(Fraction(c) for c in coords)


def unit(i: int, n: int, scale=1) -> WeightVec:
    """``scale * e_i`` in ``n`` coordinates, ``i`` 1-based."""
    return tuple(Fraction(scale) if k == i - 1 else Fraction(0) for k in range(n))


def add(x: WeightVec, y: WeightVec) -> WeightVec:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: WeightVec, y: WeightVec) -> WeightVec:
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: WeightVec) -> WeightVec:
    return tuple(c * a for a in x)


def dot(x: WeightVec, y: WeightVec) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def zero(n: int) -> WeightVec:
    return (Fraction(0),) * n


def rational_inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    m = sympy.Matrix([[sympy.Rational(str(Fraction(a))) for a in r] for r in rows]).inv()
    return [[Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols)] for i in range(m.rows)]


def rational_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{c : rows @ c = 0}``, each vector scaled to coprime integers."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m = sympy.Matrix([[sympy.Rational(str(Fraction(a))) for a in r] for r in rows])
    basis = []
    for v in m.nullspace():
        den = sympy.ilcm(*[x.q for x in v]) if len(v) else 1
        ints = [int(x * den) for x in v]
        g = sympy.igcd(*ints) or 1
        ints = [x // int(g) for x in ints]
        # canonical sign: first nonzero entry positive
        lead = next(x for x in ints if x)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append([Fraction(x) for x in ints])
    return basis


# --------------------------------------------------------------------------
# Dynkin diagram identification

_EXCEPTIONAL_WEYL_ORDER = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}


def weyl_group_order(type_name: str, rank: int) -> int:
    if type_name == "A":
        return factorial(rank + 1)
    if type_name in ("B", "C"):
        return 2**rank * factorial(rank)
    if type_name == "D":
        return 2 ** (rank - 1) * factorial(rank)
    return _EXCEPTIONAL_WEYL_ORDER[type_name]


def cartan_components(cartan: Sequence[Sequence[int]], key=None) -> list[tuple[str, int, list[int]]]:
    """Split a Cartan matrix into irreducible components.

    Returns ``(type, rank, nodes)`` triples with ``nodes`` listed in Bourbaki
    order.  ``type`` is one of ``A B C D E6 E7 E8 F4 G2`` (B2 is reported as
    ``B`` with the long root first; D3 is reported as ``A3``).  ``key`` breaks
    symmetric orientation choices (A_n ends, D4 legs, E6 arms); smaller key
    comes first.  Components are sorted by the key of their first node.
    """
    n = len(cartan)
    key = key or (lambda i: i)
    adj = {i: [j for j in range(n) if j != i and cartan[i][j] != 0] for i in range(n)}
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(_identify(sorted(comp), cartan, adj, key))
    comps.sort(key=lambda c: key(c[2][0]))
    return comps


def _arm(adj, frm: int, start: int) -> list[int]:
    path, prev, cur = [start], frm, start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _identify(nodes, cartan, adj, key):
    r = len(nodes)
    if r == 1:
        return ("A", 1, nodes)
    bond = {(i, j): cartan[i][j] * cartan[j][i] for i in nodes for j in adj[i]}
    longer = lambda i, j: abs(cartan[i][j]) > 1  # a_i longer than a_j
    if any(b == 3 for b in bond.values()):
        i, j = nodes
        return ("G2", 2, [j, i] if longer(i, j) else [i, j])
    branch = [i for i in nodes if len(adj[i]) == 3]
    if branch:
        b = branch[0]
        arms = sorted((_arm(adj, b, s) for s in adj[b]), key=lambda a: (len(a), key(a[-1])))
        lens = tuple(len(a) for a in arms)
        if lens[:2] == (1, 1):
            long_arm = arms[2]
            # D_n: 1 - 2 - ... - (n-2) = b, then the two short legs
            if lens == (1, 1, 1):
                legs = sorted([a[0] for a in arms], key=key)
                return ("D", 4, [legs[0], b, legs[1], legs[2]])
            return ("D", r, list(reversed(long_arm)) + [b, arms[0][0], arms[1][0]])
        name = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[lens]
        two, a3, a5 = arms[0], arms[1], arms[2]
        # Bourbaki: 1 - 3 - 4 - 5 - 6 ..., with 2 attached to 4
        order = [a3[1], two[0], a3[0], b] + a5
        return (name, r, order)
    ends = [i for i in nodes if len(adj[i]) == 1]
    path = _arm(adj, -1, min(ends, key=key))
    doubles = [k for k in range(r - 1) if bond[(path[k], path[k + 1])] == 2]
    if not doubles:
        return ("A", r, path)
    k = doubles[0]
    if r == 2:
        i, j = path
        return ("B", 2, [i, j] if longer(i, j) else [j, i])
    if r == 4 and k == 1:
        if longer(path[2], path[1]):
            path = path[::-1]
        return ("F4", 4, path)
    if k == 0:
        path = path[::-1]
    last, prev = path[-1], path[-2]
    return ("B" if longer(prev, last) else "C", r, path)


def type_name(comp: tuple[str, int, list[int]]) -> str:
    t, r, _ = comp
    return t if t[0] in "EFG" else f"{t}{r}"


# --------------------------------------------------------------------------
# Realizations

def _e8_simple() -> list[WeightVec]:
    h = _HALF
    a1 = vec([h, -h, -h, -h, -h, -h, -h, h])
    a2 = add(unit(1, 8), unit(2, 8))
    rest = [sub(unit(k, 8), unit(k - 1, 8)) for k in range(2, 8)]
    return [a1, a2] + rest


def _simple_roots(family: str, rank: int) -> list[WeightVec]:
    if family == "A":
        n = rank + 1
        return [sub(unit(i, n), unit(i + 1, n)) for i in range(1, rank + 1)]
    if family in ("B", "C", "D"):
        chain = [sub(unit(i, rank), unit(i + 1, rank)) for i in range(1, rank)]
        if family == "B":
            return chain + [unit(rank, rank)]
        if family == "C":
            return chain + [unit(rank, rank, 2)]
        return chain + [add(unit(rank - 1, rank), unit(rank, rank))]
    if family == "G2":
        return [vec([1, -1, 0]), vec([-2, 1, 1])]
    if family == "F4":
        return [vec([0, 1, -1, 0]), vec([0, 0, 1, -1]), vec([0, 0, 0, 1]), vec([_HALF, -_HALF, -_HALF, -_HALF])]
    if family in ("E6", "E7", "E8"):
        return _e8_simple()[:rank]
    raise ValueError(f"unknown family {family!r}")


_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def positive_root_count(family: str, rank: int) -> int:
    """Classical count of positive roots."""
    n = rank
    return {
        "A": n * (n + 1) // 2,
        "B": n * n,
        "C": n * n,
        "D": n * (n - 1),
        "E6": 36,
        "E7": 63,
        "E8": 120,
        "F4": 24,
        "G2": 6,
    }[family]


class RootSystem:
    """A simple root system with its Bourbaki basis.

    Immutable after construction.  Attributes:

    family, rank, ambient_dim
    simple_roots       list of WeightVec, Bourbaki order
    roots              all roots, sorted
    positive_roots     sorted by height, then coordinates
    cartan_matrix      tuple of tuples of int
    fundamental_weights
    delta              half-sum of the positive roots
    killing_scale      c with <x, y> = c (x, y)
    """

    def __init__(self, family: str, rank: int):
        self.family = family
        self.rank = rank
        self.name = family if family in _FIXED_RANK else f"{family}{rank}"
        self.simple_roots = tuple(_simple_roots(family, rank))
        self.ambient_dim = len(self.simple_roots[0])
        s = self.simple_roots
        self.cartan_matrix = tuple(
            tuple(int(2 * dot(s[i], s[j]) / dot(s[j], s[j])) for j in range(rank)) for i in range(rank)
        )
        inv = rational_inverse(self.cartan_matrix)
        self.fundamental_weights = tuple(
            tuple(sum((inv[i][j] * s[j][k] for j in range(rank)), Fraction(0)) for k in range(self.ambient_dim))
            for i in range(rank)
        )
        self._coweight = tuple(scale(2 / dot(a, a), w) for a, w in zip(s, self.fundamental_weights))
        self._coroots = tuple(scale(2 / dot(a, a), a) for a in s)
        self.roots = tuple(sorted(_closure(s, s)))
        self.root_set = frozenset(self.roots)
        pos = [r for r in self.roots if all(c >= 0 for c in self.root_coefficients(r))]
        self.positive_roots = tuple(sorted(pos, key=lambda r: (sum(self.root_coefficients(r)), r)))
        self.delta = scale(_HALF, _vsum(self.positive_roots, self.ambient_dim))
        self.dim = rank + len(self.roots)
        self.killing_scale = compute_killing_scale(self)
        self.lengths = tuple(sorted({dot(r, r) for r in self.roots}))

    def __repr__(self) -> str:
        return f"RootSystem({self.name!r})"

    # Low-level helpers; all in Euclidean terms of the realization.

    def pairing(self, v: WeightVec, i: int) -> Fraction:
        """``<v, a_i^vee>`` for the 0-based simple root ``i``."""
        return dot(v, self._coroots[i])

    def labels(self, v: WeightVec) -> tuple:
        """Pairings with all simple coroots (Dynkin labels), as Fractions."""
        return tuple(dot(v, c) for c in self._coroots)

    def root_coefficients(self, v: WeightVec) -> tuple:
        return tuple(dot(v, c) for c in self._coweight)

    def from_labels(self, labels: Sequence) -> WeightVec:
        out = zero(self.ambient_dim)
        for a, w in zip(labels, self.fundamental_weights):
            if a:
                out = add(out, scale(Fraction(a), w))
        return out

    def project(self, v: WeightVec) -> WeightVec:
        """Orthogonal projection onto the span of the roots."""
        if self.ambient_dim == self.rank:
            return tuple(v)
        return self.from_labels(self.labels(v))

    def is_dominant(self, v: WeightVec) -> bool:
        return all(p >= 0 for p in self.labels(v))

    def is_integral(self, v: WeightVec) -> bool:
        return all(p.denominator == 1 for p in self.labels(v))

    def check(self, v: WeightVec) -> WeightVec:
        v = tuple(Fraction(c) for c in v)
        if len(v) != self.ambient_dim:
            raise ValueError(f"{self.name}: expected {self.ambient_dim} coordinates, got {len(v)}")
        return v


def _vsum(vs: Iterable[WeightVec], n: int) -> WeightVec:
    out = zero(n)
    for v in vs:
        out = add(out, v)
    return out


def _reflect(a: WeightVec, v: WeightVec) -> WeightVec:
    c = 2 * dot(v, a) / dot(a, a)
    return sub(v, scale(c, a)) if c else v


def _closure(gens: Sequence[WeightVec], seeds: Iterable[WeightVec]) -> set:
    seen = set(seeds)
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for a in gens:
            w = _reflect(a, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@lru_cache(maxsize=None)
def _build(family: str, rank: int) -> RootSystem:
    return RootSystem(family, rank)


def build_root_system(family: str, rank: int | None = None) -> RootSystem:
    """Root system of type ``(family, rank)``, e.g. ``("B", 3)`` or ``("F4",)``.

    ``family`` may also carry the rank (``"B3"``, ``"E8"``).  Results are cached.
    """
    family = family.strip().upper()
    if family[:1] in "ABCD" and len(family) > 1:
        family, rank = family[0], int(family[1:])
    if family in ("E", "F", "G") and rank is not None:
        family = f"{family}{rank}"
    if family in _FIXED_RANK:
        if rank is not None and rank != _FIXED_RANK[family]:
            raise ValueError(f"{family} has rank {_FIXED_RANK[family]}, not {rank}")
        return _build(family, _FIXED_RANK[family])
    if family not in _MIN_RANK:
        raise ValueError(f"unknown root system family {family!r}; expected one of {', '.join(FAMILIES)}")
    if rank is None or rank < _MIN_RANK[family]:
        raise ValueError(f"type {family} needs rank >= {_MIN_RANK[family]}, got {rank}")
    return _build(family, rank)


def parse_type(name: str) -> RootSystem:
    return build_root_system(name)


# --------------------------------------------------------------------------
# Operations

def half_sum_positive(rs: RootSystem) -> WeightVec:
    return rs.delta


def compute_killing_scale(rs: RootSystem) -> Fraction:
    """Scale of the sign-changed Killing form, from <delta, delta> = dim/24."""
    return Fraction(rs.rank + len(rs.roots), 24) / dot(rs.delta, rs.delta)


def inner(rs: RootSystem, x: WeightVec, y: WeightVec) -> Fraction:
    """Killing-normalized scalar product of two weights."""
    x, y = rs.check(x), rs.check(y)
    return rs.killing_scale * dot(rs.project(x), y)


def highest_root(rs: RootSystem, length_class: str = LONG) -> WeightVec:
    if length_class not in (LONG, SHORT):
        raise ValueError(f"length class must be 'long' or 'short', got {length_class!r}")
    if length_class == SHORT and len(rs.lengths) == 1:
        raise ValueError(f"{rs.name} is simply laced; all roots count as long")
    target = rs.lengths[-1] if length_class == LONG else rs.lengths[0]
    (beta,) = [r for r in rs.roots if dot(r, r) == target and rs.is_dominant(r)]
    return beta


def length_class(rs: RootSystem, root: WeightVec) -> str:
    return LONG if dot(root, root) == rs.lengths[-1] else SHORT


def reflect(rs: RootSystem, root: WeightVec, v: WeightVec) -> WeightVec:
    """Reflection of ``v`` in the hyperplane orthogonal to ``root``."""
    root = rs.check(root)
    if root not in rs.root_set:
        raise ValueError(f"{root} is not a root of {rs.name}")
    return _reflect(root, rs.check(v))


def apply_word(rs: RootSystem, word: WeylWord, v: WeightVec) -> WeightVec:
    v = rs.check(v)
    for i in word:
        v = _reflect(rs.simple_roots[i - 1], v)
    return v


def weyl_orbit(rs: RootSystem, v: WeightVec) -> list[WeightVec]:
    """Orbit of ``v`` under the Weyl group, sorted lexicographically."""
    return sorted(_closure(rs.simple_roots, [rs.check(v)]))


def dominant_representative(rs: RootSystem, v: WeightVec) -> tuple[WeightVec, WeylWord]:
    """Dominant element of the orbit of ``v`` and a word carrying ``v`` to it."""
    v = rs.check(v)
    word = []
    while True:
        for i in range(rs.rank):
            if rs.pairing(v, i) < 0:
                v = _reflect(rs.simple_roots[i], v)
                word.append(i + 1)
                break
        else:
            return v, tuple(word)


def _require_dominant_integral(rs: RootSystem, lam: WeightVec) -> WeightVec:
    lam = rs.check(lam)
    labels = rs.labels(lam)
    if any(p.denominator != 1 for p in labels):
        raise ValueError(f"{lam} is not an integral weight of {rs.name}")
    if any(p < 0 for p in labels):
        raise ValueError(f"{lam} is not dominant for {rs.name}")
    return rs.project(lam)


def casimir(rs: RootSystem, lam: WeightVec) -> Fraction:
    """Casimir eigenvalue <lam + 2 delta, lam> of the irreducible of highest weight lam."""
    lam = _require_dominant_integral(rs, lam)
    return rs.killing_scale * dot(add(lam, scale(2, rs.delta)), lam)


def fundamental_weight_coords(rs: RootSystem, v: WeightVec) -> tuple[int, ...]:
    """Coordinates of an integral weight in the fundamental-weight basis."""
    labels = rs.labels(rs.check(v))
    if any(p.denominator != 1 for p in labels):
        raise ValueError(f"{tuple(v)} is not an integral weight of {rs.name}")
    return tuple(int(p) for p in labels)


def from_fundamental_weight_coords(rs: RootSystem, coords: Sequence[int]) -> WeightVec:
    if len(coords) != rs.rank:
        raise ValueError(f"{rs.name}: expected {rs.rank} fundamental coordinates, got {len(coords)}")
    return rs.from_labels([Fraction(c) for c in coords])
