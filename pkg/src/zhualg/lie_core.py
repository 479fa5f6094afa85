"""Simple Lie algebras of types A-G: roots, Weyl dimension formula, level-k weights.

Node numbering follows Bourbaki (the same as LiE):

* A_r: chain 1-2-...-r
* B_r: chain, node r short;  C_r: chain, node r long
* D_r: chain 1-...-(r-2), with r-1 and r both attached to r-2
* E_6/7/8: chain 1-3-4-5-...-r with node 2 attached to node 4
* F_4: 1-2 long, 3-4 short;  G_2: node 1 short, node 2 long

Long roots have squared length 2.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod


class LieError(ValueError):
    pass


class NegativeLabel(LieError):
    pass


def _chain(r: int, edges: list[tuple[int, int]], lengths: list[Fraction], edge_ip=None):
    form = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        form[i][i] = lengths[i]
    for i, j in edges:
        v = (edge_ip or {}).get((i, j), Fraction(-1))
        form[i][j] = form[j][i] = v
    return form


def _inner_product_matrix(family: str, r: int) -> list[list[Fraction]]:
    """Symmetric matrix (alpha_i, alpha_j) of simple roots, long roots normalised to 2."""
    two, one = Fraction(2), Fraction(1)
    path = [(i, i + 1) for i in range(r - 1)]
    if family == "A" and r >= 1:
        return _chain(r, path, [two] * r)
    if family == "B" and r >= 2:
        return _chain(r, path, [two] * (r - 1) + [one])
    if family == "C" and r >= 2:
        half = Fraction(-1, 2)
        ip = {(i, i + 1): half for i in range(r - 2)}
        return _chain(r, path, [one] * (r - 1) + [two], ip)
    if family == "D" and r >= 3:
        edges = [(i, i + 1) for i in range(r - 2)] + [(r - 3, r - 1)]
        return _chain(r, edges, [two] * r)
    if family == "E" and r in (6, 7, 8):
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, r - 1)]
        return _chain(r, edges, [two] * r)
    if family == "F" and r == 4:
        return _chain(4, path, [two, two, one, one], {(2, 3): Fraction(-1, 2)})
    if family == "G" and r == 2:
        return _chain(2, path, [Fraction(2, 3), two])
    raise LieError(f"no simple Lie algebra of type {family}{r}")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    form: tuple[tuple[Fraction, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def cartan(self) -> list[list[int]]:
        """a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)."""
        f = self.form
        return [[int(2 * f[i][j] / f[i][i]) for j in range(self.rank)] for i in range(self.rank)]

    @property
    def theta(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)

    @property
    def rho(self) -> tuple[int, ...]:
        return (1,) * self.rank

    @property
    def comarks(self) -> tuple[int, ...]:
        # theta^vee = theta since theta is long; alpha_i^vee = 2 alpha_i / |alpha_i|^2
        out = []
        for c, i in zip(self.theta, range(self.rank)):
            a = Fraction(c) * self.form[i][i] / 2
            assert a.denominator == 1
            out.append(int(a))
        return tuple(out)

    def root_norm(self, root) -> Fraction:
        f = self.form
        return sum(root[i] * f[i][j] * root[j] for i in range(self.rank) for j in range(self.rank))

    def weight_root_pairing(self, labels, root) -> Fraction:
        """(lambda, alpha) for Dynkin labels lambda and alpha in simple-root coordinates."""
        return sum(Fraction(root[i]) * labels[i] * self.form[i][i] / 2 for i in range(self.rank))


def _positive_roots(form) -> list[tuple[int, ...]]:
    r = len(form)

    def ip(a, b):
        return sum(a[i] * form[i][j] * b[j] for i in range(r) for j in range(r))

    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # p = how far the alpha_i-string extends downward from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                q = p - 2 * ip(beta, simple[i]) / form[i][i]
                if q >= 1:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda a: (sum(a), a))


_SPEC = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@lru_cache(maxsize=None)
def root_system(spec: str) -> RootSystem:
    """Root system from a type string such as "A2", "E8", "G2"."""
    m = _SPEC.match(spec)
    if not m:
        raise LieError(f"cannot parse algebra spec {spec!r}")
    family, r = m.group(1).upper(), int(m.group(2))
    form = _inner_product_matrix(family, r)
    roots = _positive_roots(form)
    return RootSystem(family, r, tuple(tuple(row) for row in form), tuple(roots))


def cartan_matrix(spec: str) -> list[list[int]]:
    return root_system(spec).cartan


def weyl_dim(R: RootSystem, labels) -> int:
    """Dimension of the irreducible module with highest weight ``labels``."""
    labels = tuple(labels)
    if len(labels) != R.rank:
        raise LieError(f"{R.name} needs {R.rank} Dynkin labels, got {len(labels)}")
    if any(v < 0 for v in labels):
        raise NegativeLabel(f"labels {labels} are not dominant")
    shifted = [v + 1 for v in labels]
    num = prod(R.weight_root_pairing(shifted, a) for a in R.positive_roots)
    den = prod(R.weight_root_pairing(R.rho, a) for a in R.positive_roots)
    d = Fraction(num) / den
    assert d.denominator == 1
    return int(d)


def level_weights(R: RootSystem, k: int) -> list[tuple[int, ...]]:
    """Dominant weights with sum_i comark_i * lambda_i <= k, lexicographic order."""
    if k < 0:
        raise LieError("level must be non-negative")
    marks = R.comarks
    out = []
    for labels in itertools.product(*(range(k // a + 1) for a in marks)):
        if sum(a * l for a, l in zip(marks, labels)) <= k:
            out.append(labels)
    return out
