"""Brute-force reference computations used only by the test suite.

Nothing here imports from ``symspec``: root data are rebuilt from a Cartan
matrix, and multiplicities come from Kostant's partition function with
Weyl alternation,

    mult_lam(mu) = sum_w sgn(w) P(w(lam + delta) - (mu + delta)).

All weights are integer label vectors (pairings with simple coroots).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

# Bourbaki numbering, C[i][j] = <a_i, a_j^vee>
CARTAN = {
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),
    "G2": ((2, -1), (-3, 2)),
}


def _solve(C, x):
    """Simple-root coordinates k with labels(sum k_i a_i) = x."""
    n = len(C)
    # x_j = sum_i k_i C[i][j]:  solve C^T k = x
    m = [[Fraction(C[i][j]) for i in range(n)] + [Fraction(x[j])] for j in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return tuple(m[i][n] / m[i][i] for i in range(n))


class KostantOracle:
    def __init__(self, cartan):
        self.C = tuple(tuple(r) for r in cartan)
        self.n = len(self.C)
        self.positive = self._positive_roots()

    def _positive_roots(self):
        C, n = self.C, self.n
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        roots, layer = set(simple), list(simple)
        while layer:
            nxt = []
            for b in layer:
                for i in range(n):
                    pair = sum(b[j] * C[j][i] for j in range(n))
                    p = 0
                    down = list(b)
                    while True:
                        down[i] -= 1
                        if tuple(down) in roots:
                            p += 1
                        else:
                            break
                    if p - pair > 0:
                        up = tuple(b[j] + (j == i) for j in range(n))
                        if up not in roots:
                            roots.add(up)
                            nxt.append(up)
            layer = nxt
        return sorted(roots)

    def reflect(self, i, x):
        return tuple(x[j] - x[i] * self.C[i][j] for j in range(self.n))

    def act(self, x):
        """All (w x, sgn w); w is read off the orbit of rho by replaying words."""
        out = []
        rho = (1,) * self.n
        seen = {rho: (x, 1)}
        layer = [rho]
        while layer:
            nxt = []
            for v in layer:
                img, s = seen[v]
                for i in range(self.n):
                    w = self.reflect(i, v)
                    if w not in seen:
                        seen[w] = (self.reflect(i, img), -s)
                        nxt.append(w)
            layer = nxt
        return list(seen.values())

    @lru_cache(maxsize=None)
    def partitions(self, k, upto=None):
        """Number of ways to write k as a sum of positive roots (index < upto)."""
        if upto is None:
            upto = len(self.positive)
        if any(c < 0 for c in k):
            return 0
        if not any(k):
            return 1
        if upto == 0:
            return 0
        a = self.positive[upto - 1]
        total, rest = 0, k
        while all(c >= 0 for c in rest):
            total += self.partitions(rest, upto - 1)
            rest = tuple(r - s for r, s in zip(rest, a))
        return total

    def P(self, labels):
        k = _solve(self.C, labels)
        if any(c.denominator != 1 for c in k):
            return 0
        return self.partitions(tuple(int(c) for c in k))

    def multiplicity(self, lam, mu):
        top = tuple(a + 1 for a in lam)
        shifted = tuple(m + 1 for m in mu)
        return sum(s * self.P(tuple(a - b for a, b in zip(w, shifted))) for w, s in self.act(top))

    def dominant_weights(self, lam):
        """Dominant mu of the form lam minus a nonnegative root combination, with mult > 0."""
        bound = _solve(self.C, lam)
        out = {}
        ranges = [range(int(b) + 1) for b in bound]
        for k in product(*ranges):
            mu = tuple(lam[j] - sum(k[i] * self.C[i][j] for i in range(self.n)) for j in range(self.n))
            if all(c >= 0 for c in mu):
                m = self.multiplicity(lam, mu)
                if m:
                    out[mu] = m
        return out
