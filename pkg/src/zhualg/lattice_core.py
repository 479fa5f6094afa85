"""Even positive-definite integral lattices given by Gram matrices.

Vectors are integer coordinate vectors in the lattice basis; dual vectors are
rational coordinate vectors in the same basis.  Every reported number is
exact.  Float arithmetic only prunes the enumeration tree and every candidate
it returns is re-checked with integers.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .linalg import determinant, hermite_normal_form, inverse, ldl, leading_minors


class LatticeError(ValueError):
    pass


class NotSymmetric(LatticeError):
    pass


class NotEven(LatticeError):
    pass


class NotPositiveDefinite(LatticeError):
    pass


class RankZero(LatticeError):
    pass


ENUM_CAP = 5_000_000


@dataclass(frozen=True, eq=False)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    name: str | None = None

    @property
    def rank(self) -> int:
        return len(self.gram)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        return f"Lattice({self.name or '?'}, rank={self.rank})"

    @cached_property
    def gram_array(self) -> np.ndarray:
        return np.array(self.gram, dtype=np.int64).reshape(self.rank, self.rank)

    @cached_property
    def det(self) -> int:
        return determinant(self.gram)

    @cached_property
    def _ldl(self) -> tuple[np.ndarray, np.ndarray]:
        L, D = ldl(self.gram)
        mu = np.array([[float(v) for v in row] for row in L]).reshape(self.rank, self.rank)
        return mu, np.array([float(d) for d in D])

    @cached_property
    def ldl_diag(self) -> tuple[Fraction, ...]:
        return tuple(ldl(self.gram)[1])

    def norm(self, v: Sequence) -> int | Fraction:
        """v . v for integer or rational coordinates."""
        g = self.gram
        n = self.rank
        return sum(v[i] * g[i][j] * v[j] for i in range(n) for j in range(n))

    def pair(self, u: Sequence, v: Sequence) -> int | Fraction:
        g = self.gram
        n = self.rank
        return sum(u[i] * g[i][j] * v[j] for i in range(n) for j in range(n))

    def to_json(self) -> dict:
        return {"name": self.name, "gram": [list(r) for r in self.gram]}


def make_lattice(gram: Iterable[Iterable[int]], name: str | None = None) -> Lattice:
    """Validate a Gram matrix and wrap it as a Lattice."""
    rows = [list(r) for r in gram]
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise LatticeError(f"row {i} has length {len(r)}, expected {n}")
        for j, v in enumerate(r):
            if int(v) != v:
                raise LatticeError(f"entry ({i},{j}) = {v!r} is not an integer")
    rows = [[int(v) for v in r] for r in rows]
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetric(f"gram[{i}][{j}] = {rows[i][j]} != gram[{j}][{i}] = {rows[j][i]}")
    for i in range(n):
        if rows[i][i] % 2:
            raise NotEven(f"diagonal entry {i} is odd ({rows[i][i]})")
    for k, m in enumerate(leading_minors(rows), start=1):
        if m <= 0:
            raise NotPositiveDefinite(f"leading principal minor of order {k} is {m}")
    return Lattice(tuple(tuple(r) for r in rows), name)


def load_lattice(path: str | Path) -> Lattice:
    data = json.loads(Path(path).read_text())
    name = data.get("name") or Path(path).stem
    return make_lattice(data["gram"], name)


def _require_rank(L: Lattice) -> None:
    if L.rank == 0:
        raise RankZero(f"{L!r} has rank 0")


def _ball(L: Lattice, bound, center=None) -> np.ndarray:
    """Integer points x with (x - center).G.(x - center) <= bound, float-pruned."""
    mu, diag = L._ldl
    c = np.zeros(L.rank) if center is None else np.array([float(v) for v in center])
    slack = 1e-7 * (1.0 + abs(float(bound)))
    return _accel.enumerate_ball(mu, diag, c, float(bound) + slack, ENUM_CAP)


def enumerate_vectors(L: Lattice, bound: int) -> list[tuple[int, ...]]:
    """Every v in L with v.v <= bound, lexicographically sorted."""
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if L.rank == 0:
        return [()]
    pts = _ball(L, bound)
    g = L.gram_array
    norms = np.einsum("ij,jk,ik->i", pts, g, pts)
    keep = pts[norms <= bound]
    return sorted(tuple(int(v) for v in row) for row in keep)


def vectors_with_norms(L: Lattice, bound: int) -> tuple[np.ndarray, np.ndarray]:
    """Array form of enumerate_vectors plus exact norms (same order)."""
    vecs = np.array(enumerate_vectors(L, bound), dtype=np.int64).reshape(-1, L.rank)
    norms = np.einsum("ij,jk,ik->i", vecs, L.gram_array, vecs)
    return vecs, norms


@dataclass(frozen=True)
class LatticeSummary:
    mu: int
    M: int
    det: int


def summary(L: Lattice) -> LatticeSummary:
    _require_rank(L)
    # the smallest diagonal entry bounds the minimum from above
    bound = min(L.gram[i][i] for i in range(L.rank))
    _, norms = vectors_with_norms(L, bound)
    nz = norms[norms > 0]
    mu = int(nz.min())
    return LatticeSummary(mu=mu, M=int((nz == mu).sum()), det=L.det)


@dataclass(frozen=True)
class DiscriminantCoset:
    """A class of L*/L with its minimal norm and count of minimal vectors."""

    representative: tuple[Fraction, ...]
    min_norm: Fraction
    count: int
    label: tuple[int, ...] = field(default=())


def _dual_reps(L: Lattice) -> tuple[list[list[int]], list[tuple[int, ...]]]:
    """HNF of gram plus canonical reps of Z^n / gram Z^n (dual-basis coordinates)."""
    H = hermite_normal_form(L.gram)
    ranges = [range(H[i][i]) for i in range(L.rank)]
    return H, list(itertools.product(*ranges))


def reduce_dual(H: list[list[int]], x: Sequence[int]) -> tuple[int, ...]:
    """Canonical representative of x modulo the column lattice of H."""
    x = list(x)
    for i in range(len(H)):
        q = x[i] // H[i][i]
        if q:
            for r in range(i, len(H)):
                x[r] -= q * H[r][i]
    return tuple(x)


def coset_minimum(L: Lattice, t: Sequence[Fraction]) -> tuple[Fraction, int]:
    """Minimal norm and number of minimal vectors in the shifted lattice t + L."""
    # nearest-rounding point gives an upper bound on the minimum
    r = [-round(v) for v in t]
    start = L.norm([ti + ri for ti, ri in zip(t, r)])
    pts = _ball(L, start, center=[-v for v in t])
    D = L.det
    T = np.array([int(v * D) for v in t], dtype=object)
    if pts.shape[0] == 0:
        raise RuntimeError("coset search lost the rounding point")
    # exact: object-dtype integers, scaled by det so every coordinate is integral
    W = pts.astype(object) * D + T
    norms = np.einsum("ij,jk,ik->i", W, np.array(L.gram, dtype=object), W)
    best = min(norms)
    count = int(sum(1 for v in norms if v == best))
    return Fraction(best, D * D), count


def discriminant_cosets(L: Lattice) -> list[DiscriminantCoset]:
    """One entry per class of L*/L, in canonical label order."""
    if L.rank == 0:
        return [DiscriminantCoset((), Fraction(0), 1, ())]
    _, reps = _dual_reps(L)
    ginv = inverse(L.gram)
    out = []
    for x in reps:
        t = tuple(sum(ginv[i][j] * x[j] for j in range(L.rank)) for i in range(L.rank))
        m, c = coset_minimum(L, t)
        out.append(DiscriminantCoset(t, m, c, x))
    return out


def direct_sum(L1: Lattice, L2: Lattice) -> Lattice:
    n1, n2 = L1.rank, L2.rank
    gram = [[0] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            gram[i][j] = L1.gram[i][j]
    for i in range(n2):
        for j in range(n2):
            gram[n1 + i][n1 + j] = L2.gram[i][j]
    if n1 == 0:
        name = L2.name
    elif n2 == 0:
        name = L1.name
    else:
        name = f"{L1.name or '?'}+{L2.name or '?'}"
    return Lattice(tuple(tuple(r) for r in gram), name)


def covering_radius_bound(L: Lattice) -> Fraction:
    """Upper bound (1/4) sum |b_i*|^2 on the squared covering radius."""
    _require_rank(L)
    return sum(L.ldl_diag, Fraction(0)) / 4


def closest_point_distance(L: Lattice, x: Sequence[Fraction]) -> Fraction:
    """Exact squared distance from a rational point to the nearest lattice point."""
    return coset_minimum(L, tuple(Fraction(v) for v in x))[0]
