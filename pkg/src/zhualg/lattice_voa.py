"""Zhu's algebra and the C2-algebra of a lattice VOA.

For alpha in the set S_L of small vectors, the C2-algebra contributes the
graded quotient

    Q[x_1..x_n] / ( (gamma . x)^{d_gamma(alpha)} : gamma in L, gamma != 0 ),
    d_gamma(alpha) = max(0, 1 + gamma.gamma - |gamma.alpha|),

where gamma . x = sum_i gamma_i x_i and x_i stands for beta_i(-1).  The
quotient is finite dimensional and is computed degree by degree: I_m is
spanned by x_i * I_{m-1} together with the generators of degree m.
"""
from __future__ import annotations

import json
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb, factorial
from typing import Literal, Sequence

import numpy as np

from . import _accel
from .lattice_core import (
    Lattice,
    RankZero,
    covering_radius_bound,
    discriminant_cosets,
    summary,
    vectors_with_norms,
)
from .linalg import bareiss_pivots, modular_rank

log = logging.getLogger(__name__)


class NotSmall(ValueError):
    pass


class ResourceLimit(RuntimeError):
    pass


@dataclass(frozen=True)
class ResourceCaps:
    max_degree: int = 32
    max_monomials: int = 200_000
    max_gamma_norm: int = 64
    # "exact": Bareiss over Z; "modular": rank at two primes, which must agree
    rank_method: Literal["modular", "exact"] = "exact"
    threads: int = 1

    def __post_init__(self):
        if min(self.max_degree, self.max_monomials, self.max_gamma_norm, self.threads) < 1:
            raise ValueError("resource caps must be positive")
        if self.rank_method not in ("modular", "exact"):
            raise ValueError(f"unknown rank method {self.rank_method!r}")


DEFAULT_CAPS = ResourceCaps()


@dataclass(frozen=True)
class SmallVectorSet:
    lattice: Lattice
    vectors: tuple[tuple[int, ...], ...]
    norms: tuple[int, ...]
    verified_bound: int

    def __len__(self) -> int:
        return len(self.vectors)


@dataclass(frozen=True)
class GradedDimension:
    dims: tuple[int, ...]
    base_grade: Fraction = Fraction(0)

    @property
    def total(self) -> int:
        return sum(self.dims)

    @property
    def l0_grades(self) -> tuple[Fraction, ...]:
        return tuple(self.base_grade + m for m in range(len(self.dims)))


def exponent(gamma_norm: int, pairing: int) -> int:
    """d_gamma(alpha) = max(0, 1 + gamma.gamma - |gamma.alpha|)."""
    return max(0, 1 + gamma_norm - abs(pairing))


# --- small vectors -----------------------------------------------------------


def small_vectors(L: Lattice) -> SmallVectorSet:
    """All alpha in L with gamma.gamma >= gamma.alpha for every gamma in L.

    alpha is small iff alpha/2 lies in the Voronoi cell of 0, so
    alpha.alpha <= 4 rho^2 <= 4 * covering_radius_bound(L).
    """
    if L.rank == 0:
        return SmallVectorSet(L, ((),), (0,), 0)
    R4 = 4 * covering_radius_bound(L)
    bound = math.floor(R4)
    bound -= bound % 2
    vecs, norms = vectors_with_norms(L, bound)
    mask = _accel.small_mask(vecs, norms, vecs, norms, L.gram_array)
    keep = vecs[mask]
    return SmallVectorSet(
        L,
        tuple(tuple(int(v) for v in row) for row in keep),
        tuple(int(v) for v in norms[mask]),
        bound,
    )


def is_small(L: Lattice, alpha: Sequence[int]) -> bool:
    a = np.array(alpha, dtype=np.int64).reshape(1, -1)
    na = np.array([int(L.norm(alpha))], dtype=np.int64)
    vecs, norms = vectors_with_norms(L, max(int(na[0]) - 2, 0))
    return bool(_accel.small_mask(a, na, vecs, norms, L.gram_array)[0])


# --- graded quotient by powers of linear forms --------------------------------


@lru_cache(maxsize=None)
def _monomials(n: int, m: int) -> tuple[np.ndarray, dict]:
    """Exponent vectors of degree m in n variables (sorted) and their index map."""
    exps = []
    for combo in combinations_with_replacement(range(n), m):
        e = [0] * n
        for i in combo:
            e[i] += 1
        exps.append(tuple(e))
    exps.sort(reverse=True)
    arr = np.array(exps, dtype=np.int64).reshape(len(exps), n)
    return arr, {e: k for k, e in enumerate(exps)}


@lru_cache(maxsize=None)
def _shift_table(n: int, m: int) -> np.ndarray:
    """table[j, i] = index in degree m of (monomial j of degree m-1) * x_i."""
    prev, _ = _monomials(n, m - 1)
    _, idx = _monomials(n, m)
    table = np.empty((prev.shape[0], n), dtype=np.int64)
    for j, e in enumerate(prev):
        for i in range(n):
            f = list(e)
            f[i] += 1
            table[j, i] = idx[tuple(f)]
    return table


@lru_cache(maxsize=None)
def _multinomials(n: int, d: int) -> tuple[int, ...]:
    exps, _ = _monomials(n, d)
    out = []
    for e in exps:
        c = factorial(d)
        for v in e:
            c //= factorial(int(v))
        out.append(c)
    return tuple(out)


def power_of_linear_form(coeffs: Sequence[int], d: int) -> list[int]:
    """Coefficients of (sum_i c_i x_i)^d in the degree-d monomial basis."""
    n = len(coeffs)
    exps, _ = _monomials(n, d)
    out = []
    for mult, e in zip(_multinomials(n, d), exps):
        term = mult
        for c, k in zip(coeffs, e):
            if k:
                term *= c ** int(k)
        out.append(term)
    return out


def _independent_rows(rows: list[list[int]], ncols: int, method: str, prime: int | None):
    """Indices of a maximal independent subset of rows."""
    if not rows:
        return []
    if method == "exact":
        return bareiss_pivots(rows)
    mat = np.array(rows, dtype=object).reshape(len(rows), ncols)
    mat = np.mod(mat, prime).astype(np.int64)
    _, piv = modular_rank(mat, prime)
    return list(piv)


def quotient_dims(
    n: int,
    generators: Sequence[tuple[Sequence[int], int]],
    max_degree: int,
    caps: ResourceCaps = DEFAULT_CAPS,
    method: str | None = None,
    prime: int = _accel.PRIME_A,
) -> list[int] | None:
    """Hilbert function of Q[x_1..x_n] / ((c . x)^d : (c, d) in generators).

    Returns [h_0, ..., h_top] with h_{top+1} = 0, or None when the quotient is
    still nonzero in degree ``max_degree``.
    """
    method = method or caps.rank_method
    by_degree: dict[int, list] = {}
    for c, d in generators:
        if d <= max_degree:
            by_degree.setdefault(d, []).append(tuple(c))
    if 0 in by_degree:
        return []
    dims = [1]
    basis: list[list[int]] = []  # rows of I_{m-1}
    for m in range(1, max_degree + 1):
        exps, _ = _monomials(n, m)
        ncols = exps.shape[0]
        if ncols > caps.max_monomials:
            raise ResourceLimit(f"{ncols} monomials in degree {m} exceeds cap {caps.max_monomials}")
        rows: list[list[int]] = []
        if basis:
            table = _shift_table(n, m)
            for b in basis:
                for i in range(n):
                    r = [0] * ncols
                    for j, v in enumerate(b):
                        if v:
                            r[table[j, i]] = v
                    rows.append(r)
        for c in by_degree.get(m, ()):
            rows.append(power_of_linear_form(c, m))
        if method == "modular":
            rows = [[v % prime for v in r] for r in rows]
        piv = _independent_rows(rows, ncols, method, prime)
        h = ncols - len(piv)
        if h == 0:
            return dims
        dims.append(h)
        basis = [rows[k] for k in piv]
    return None


def _generators_for(alpha: np.ndarray, alpha_norm: int, vecs: np.ndarray, norms: np.ndarray, gram: np.ndarray, max_d: int):
    """(primitive direction, exponent) pairs from nonzero gammas, one per direction."""
    pair = vecs @ (gram @ alpha)
    d = np.maximum(0, 1 + norms - np.abs(pair))
    best: dict[tuple[int, ...], int] = {}
    for row, dv, nv in zip(vecs, d, norms):
        if nv == 0 or dv > max_d:
            continue
        g = math.gcd(*(int(v) for v in row))
        key = tuple(int(v) // g for v in row)
        # pick a sign: first nonzero coordinate positive
        s = next(v for v in key if v)
        if s < 0:
            key = tuple(-v for v in key)
        if key not in best or dv < best[key]:
            best[key] = int(dv)
    return sorted(best.items())


def _certified(B: int, alpha_norm: int, top: int) -> bool:
    """True if every gamma with gamma.gamma > B has exponent > top.

    For gamma.gamma = t, the exponent is at least f(t) = 1 + t - sqrt(t a)
    (Cauchy-Schwarz), which increases for t >= a/4.
    """
    t0 = B + 2
    if 4 * t0 < alpha_norm:
        return False
    s = 1 + t0 - top
    return s > 0 and s * s > t0 * alpha_norm


class _GammaPool:
    """Lattice vectors enumerated up to a growing norm bound."""

    def __init__(self, L: Lattice):
        self.L = L
        self.bound = -1
        self.vecs = np.zeros((0, L.rank), dtype=np.int64)
        self.norms = np.zeros(0, dtype=np.int64)

    def upto(self, B: int) -> tuple[np.ndarray, np.ndarray]:
        if B > self.bound:
            try:
                self.vecs, self.norms = vectors_with_norms(self.L, B)
            except ValueError as e:
                raise ResourceLimit(f"enumerating gammas of norm <= {B}: {e}") from None
            self.bound = B
        sel = self.norms <= B
        return self.vecs[sel], self.norms[sel]


def _graded_dims(L: Lattice, alpha, pool: _GammaPool, mu: int, caps: ResourceCaps, method: str, prime: int) -> list[int]:
    alpha = np.array(alpha, dtype=np.int64)
    a = int(alpha @ L.gram_array @ alpha)
    B = max(mu, 2)
    while True:
        if B > caps.max_gamma_norm:
            raise ResourceLimit(f"generator norm bound {B} exceeds cap {caps.max_gamma_norm} for alpha={alpha.tolist()}")
        vecs, norms = pool.upto(B)
        gens = _generators_for(alpha, a, vecs, norms, L.gram_array, caps.max_degree)
        dims = quotient_dims(L.rank, gens, caps.max_degree, caps, method, prime)
        if dims is None:
            if _certified(B, a, caps.max_degree):
                # no omitted generator has degree <= max_degree; more gammas cannot help
                raise ResourceLimit(
                    f"quotient still nonzero in degree {caps.max_degree} (cap) for alpha={alpha.tolist()}"
                )
            B += 2
            continue
        top = len(dims) - 1
        if _certified(B, a, top):
            return dims
        B += 2


def _check_small(L: Lattice, alpha) -> None:
    if len(alpha) != L.rank:
        raise ValueError(f"alpha has {len(alpha)} coordinates, lattice rank is {L.rank}")
    if not is_small(L, alpha):
        raise NotSmall(f"alpha={tuple(alpha)} is not in S_L")


def graded_quotient_dims(L: Lattice, alpha: Sequence[int], caps: ResourceCaps = DEFAULT_CAPS) -> GradedDimension:
    """Dimensions, by number of beta(-1) oscillators, of the alpha-sector of A_[2](V_L)."""
    alpha = tuple(int(v) for v in alpha)
    _check_small(L, alpha)
    if L.rank == 0:
        return GradedDimension((1,))
    mu = summary(L).mu
    pool = _GammaPool(L)
    dims = _dims_checked(L, alpha, pool, mu, caps)
    return GradedDimension(tuple(dims), Fraction(int(L.norm(alpha)), 2))


def _dims_checked(L, alpha, pool, mu, caps):
    if caps.rank_method == "exact":
        return _graded_dims(L, alpha, pool, mu, caps, "exact", 0)
    d1 = _graded_dims(L, alpha, pool, mu, caps, "modular", _accel.PRIME_A)
    d2 = _graded_dims(L, alpha, pool, mu, caps, "modular", _accel.PRIME_B)
    if d1 != d2:
        log.warning("modular ranks disagree for alpha=%s; falling back to exact", alpha)
        return _graded_dims(L, alpha, pool, mu, caps, "exact", 0)
    return d1


@dataclass
class C2Result:
    lattice: Lattice
    total: int
    per_alpha: list[tuple[tuple[int, ...], tuple[int, ...]]]
    small_vector_count: int


def c2_dim_lattice(L: Lattice, caps: ResourceCaps = DEFAULT_CAPS) -> C2Result:
    """dim A_[2](V_L) as a sum over alpha in S_L; alpha and -alpha share work."""
    S = small_vectors(L)
    if L.rank == 0:
        return C2Result(L, 1, [((), (1,))], 1)
    mu = summary(L).mu
    pool = _GammaPool(L)
    # warm the pool once so threads only read it
    pool.upto(max(mu, 2) + 4)
    reps = sorted({max(v, tuple(-x for x in v)) for v in S.vectors})

    def work(alpha):
        return alpha, tuple(_dims_checked(L, alpha, pool, mu, caps))

    if caps.threads > 1:
        with ThreadPoolExecutor(caps.threads) as ex:
            results = dict(ex.map(work, reps))
    else:
        results = dict(map(work, reps))
    per_alpha = []
    for v in S.vectors:
        key = max(v, tuple(-x for x in v))
        per_alpha.append((v, results[key]))
    total = sum(sum(d) for _, d in per_alpha)
    return C2Result(L, total, per_alpha, len(S))


def c2_by_l0_grade(res: C2Result) -> list[int]:
    """Regroup the per-alpha dims by L_0 grade m + alpha.alpha/2."""
    L = res.lattice
    out: dict[int, int] = {}
    for alpha, dims in res.per_alpha:
        base = int(L.norm(alpha)) // 2
        for m, d in enumerate(dims):
            out[base + m] = out.get(base + m, 0) + d
    top = max(out)
    return [out.get(g, 0) for g in range(top + 1)]


# --- Zhu algebra, bound, verdict ------------------------------------------------


def zhu_dim_lattice(L: Lattice) -> int:
    """Sum over L*/L of the squared number of minimal vectors per coset."""
    return sum(c.count ** 2 for c in discriminant_cosets(L))


def c2_lower_bound(L: Lattice) -> int:
    if L.rank == 0:
        raise RankZero("lower bound needs rank >= 1")
    s = summary(L)
    n = L.rank
    val = sum(comb(n + m - 1, m) for m in range(s.mu + 2)) + (Fraction(n) - Fraction(1, 2)) * s.M
    assert val.denominator == 1, "M must be even"
    return int(val)


@dataclass
class Verdict:
    lattice: str
    verdict: Literal["Anomalous", "NonAnomalous", "Unknown"]
    zhu_dim: int
    c2_lower_bound: int
    c2_dim: int | None = None
    small_vector_count: int | None = None
    per_alpha: list[dict] = field(default_factory=list)
    diagnostics: str | None = None

    def to_json(self) -> dict:
        out = {
            "lattice": self.lattice,
            "zhu_dim": self.zhu_dim,
            "c2_dim": self.c2_dim,
            "c2_lower_bound": self.c2_lower_bound,
            "small_vector_count": self.small_vector_count,
            "per_alpha": self.per_alpha,
            "verdict": self.verdict,
        }
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        return out


def anomaly_verdict(L: Lattice, effort: Literal["full", "bound_only"] = "full", caps: ResourceCaps = DEFAULT_CAPS) -> Verdict:
    zhu = zhu_dim_lattice(L)
    bound = c2_lower_bound(L)
    name = L.name or "?"
    if effort == "bound_only":
        v = "Anomalous" if bound > zhu else "Unknown"
        return Verdict(name, v, zhu, bound)
    if effort != "full":
        raise ValueError(f"unknown effort {effort!r}")
    try:
        res = c2_dim_lattice(L, caps)
    except ResourceLimit as e:
        v = "Anomalous" if bound > zhu else "Unknown"
        return Verdict(name, v, zhu, bound, diagnostics=f"ResourceLimit: {e}")
    per = [{"alpha": list(a), "dims": list(d)} for a, d in res.per_alpha]
    if res.total < zhu:
        # impossible if A_[2] surjects onto A; surface rather than hide
        raise AssertionError(f"c2 {res.total} < zhu {zhu} for {name}")
    v = "NonAnomalous" if res.total == zhu else "Anomalous"
    return Verdict(name, v, zhu, bound, res.total, res.small_vector_count, per)


def report_json(v: Verdict) -> str:
    return json.dumps(v.to_json(), sort_keys=False)
