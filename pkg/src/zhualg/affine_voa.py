"""Affine VOAs V_{g,k}: Zhu algebra dimension, the sl(N) grade-by-grade C2
conjecture, and the t-refined sl(2) character with its C2 extraction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import qseries
from .lie_core import RootSystem, level_weights, root_system, weyl_dim
from .qseries import TruncatedSeries


class ConjectureViolation(AssertionError):
    """The conjectured grade decomposition gave a negative or mismatched dimension."""

    def __init__(self, message: str, evidence: dict):
        super().__init__(message)
        self.evidence = evidence


def affine_zhu_dim(R: RootSystem | str, k: int) -> int:
    """sum over level-k integrable weights of dim L(lambda)^2."""
    if isinstance(R, str):
        R = root_system(R)
    if k < 1:
        raise ValueError("level must be >= 1")
    return sum(weyl_dim(R, w) ** 2 for w in level_weights(R, k))


# --- sl(N) conjecture ---------------------------------------------------------


def n_ality(mu: tuple[int, ...]) -> int:
    return sum(i * m for i, m in enumerate(mu, start=1))


@dataclass
class GradedModuleList:
    grade: int
    plus: list[tuple[tuple[int, ...], int]] = field(default_factory=list)
    minus: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return sum(d * d for _, d in self.plus) - sum(d * d for _, d in self.minus)


def slN_c2_grade(N: int, k: int, m: int) -> GradedModuleList:
    """Conjectured sl(N)-module content of A_[2](V_{sl(N),k}) at grade m.

    ``plus`` / ``minus`` list (Dynkin labels, dim L(mu)); each weight
    contributes L(mu) (x) L(mu)^* of dimension dim^2.
    """
    if N < 2 or k < 1 or m < 0:
        raise ValueError("need N >= 2, k >= 1, m >= 0")
    R = root_system(f"A{N - 1}")
    plus, minus = [], []
    for mu in level_weights(R, k):
        mu0 = k - sum(mu)
        t = n_ality(mu)
        if mu0 >= 0 and (t - m) % N == 0 and t <= m and N * mu0 + t >= m:
            plus.append((mu, weyl_dim(R, mu)))
        if mu0 >= 1 and (t - m + 1) % N == 0 and t <= m - 1 and N * mu0 + t >= m:
            minus.append((mu, weyl_dim(R, mu)))
    return GradedModuleList(m, plus, minus)


@dataclass
class SlNConjectureResult:
    N: int
    k: int
    per_grade: list[int]
    total: int
    zhu_dim: int
    matches_zhu: bool

    def to_json(self) -> dict:
        return {
            "algebra": f"A{self.N - 1}",
            "level": self.k,
            "zhu_dim": self.zhu_dim,
            "c2_conjecture": {"per_grade": self.per_grade, "total": self.total, "matches_zhu": self.matches_zhu},
        }


def slN_c2_total(N: int, k: int, check: bool = True, extra_grades: int = 3) -> SlNConjectureResult:
    """Sum the conjectured grades 0..Nk and compare with the Zhu algebra dimension.

    With ``check`` set, a negative grade, a nonvanishing grade beyond Nk, or a
    mismatch with Zhu raises ConjectureViolation carrying the evidence.
    """
    per = [slN_c2_grade(N, k, m).dim for m in range(N * k + 1)]
    beyond = [slN_c2_grade(N, k, m).dim for m in range(N * k + 1, N * k + 1 + extra_grades)]
    zhu = affine_zhu_dim(f"A{N - 1}", k)
    total = sum(per)
    res = SlNConjectureResult(N, k, per, total, zhu, total == zhu)
    if check:
        evidence = {"N": N, "k": k, "per_grade": per, "beyond": beyond, "zhu": zhu}
        neg = [m for m, d in enumerate(per) if d < 0]
        if neg:
            raise ConjectureViolation(f"negative dimension at grade(s) {neg}", evidence)
        if any(beyond):
            raise ConjectureViolation("nonzero dimension beyond grade Nk", evidence)
        if total != zhu:
            raise ConjectureViolation(f"total {total} != zhu {zhu}", evidence)
    return res


# --- sl(2): refined character and closed form ---------------------------------


def sl2_matrices(k: int) -> tuple[list[list[int]], list[list[int]]]:
    A = [[min(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]
    B = [[max(i + j - k, 0) for j in range(1, k + 1)] for i in range(1, k + 1)]
    return A, B


def _quad(M, u, v) -> int:
    return sum(u[i] * M[i][j] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j])


def _weighted(n) -> int:
    return sum(i * v for i, v in enumerate(n, start=1))


def _tuples_with_energy(k: int, Q: int, energy):
    """Triples (e, h, f) in (Z>=0^k)^3 whose quadratic exponent is <= Q.

    Every entry of A and B is non-negative and A_ii >= 1, so the exponent is
    monotone in each coordinate and bounded below by the sum of entries;
    the search is a depth-first walk with that pruning.
    """
    size = 3 * k
    x = [0] * size
    out = []

    def rec(pos: int):
        if pos == size:
            out.append(tuple(x))
            return
        while True:
            if energy(x) > Q:
                x[pos] = 0
                return
            rec(pos + 1)
            x[pos] += 1

    rec(0)
    return out


def sl2_refined_character(k: int, Q: int) -> TruncatedSeries:
    """Fermionic sum for the (q, z, t) character of V_{sl(2),k}, truncated at q^Q.

    t counts creation operators (weighted |n| = sum_i i n_i per species) and
    z^2 tracks one unit of sl(2) weight carried by e.
    """
    if k < 1 or Q < 0:
        raise ValueError("need k >= 1, Q >= 0")
    A, B = sl2_matrices(k)

    def energy(x):
        e, h, f = x[:k], x[k:2 * k], x[2 * k:]
        return _quad(A, e, e) + _quad(A, h, h) + _quad(A, f, f) + _quad(B, e, h) + _quad(B, h, f)

    inv = {}

    def inv_poch(n):
        if n not in inv:
            inv[n] = qseries.inv_pochhammer_coeffs(n, Q)
        return inv[n]

    acc: dict[tuple[int, int], dict[int, int]] = {}
    for x in _tuples_with_energy(k, Q, energy):
        e, h, f = x[:k], x[k:2 * k], x[2 * k:]
        q0 = energy(x)
        tdeg = _weighted(e) + _weighted(h) + _weighted(f)
        zexp = 2 * (_weighted(e) - _weighted(f))
        # product of 1/(q)_{n_i} over all 3k entries
        series = [1] + [0] * Q
        for n in x:
            if n:
                c = inv_poch(n)
                series = [sum(series[a] * c[s - a] for a in range(s + 1)) for s in range(Q + 1)]
        for s in range(Q - q0 + 1):
            if series[s]:
                poly = acc.setdefault((q0 + s, tdeg), {})
                poly[zexp] = poly.get(zexp, 0) + series[s]
    return TruncatedSeries(Q, acc)


def sl2_char(a: int) -> dict[int, int]:
    """chi_{L(a)}(z) = z^a + z^{a-2} + ... + z^{-a}."""
    return {a - 2 * j: 1 for j in range(a + 1)}


def sl2_c2_closed_form(k: int, m: int) -> dict[int, int]:
    """Alternating sum of chi_{L(a)}(z)^2 giving grade m of the sl(2) C2-algebra."""
    if m < 0:
        raise ValueError("grade must be >= 0")
    if m > 2 * k:
        return {}
    out: dict[int, int] = {}
    for a in range(min(m, 2 * k - m) + 1):
        sign = (-1) ** (m + a)
        for e, c in qseries.zpoly_mul(sl2_char(a), sl2_char(a)).items():
            out[e] = out.get(e, 0) + sign * c
    return {e: c for e, c in out.items() if c}


@dataclass
class Sl2C2Extraction:
    k: int
    per_grade: list[int]
    polys: list[dict[int, int]]

    @property
    def total(self) -> int:
        return sum(self.per_grade)


def sl2_c2_from_character(k: int, Q: int | None = None) -> Sl2C2Extraction:
    """Grade-equals-degree part of the refined character, grade by grade."""
    Q = 2 * k if Q is None else Q
    if Q < 2 * k:
        raise ValueError("truncation must be at least 2k")
    ch = sl2_refined_character(k, Q)
    part = qseries.extract(ch, lambda qp, td: qp == td)
    polys = [part.coeff(m, m) for m in range(Q + 1)]
    return Sl2C2Extraction(k, [qseries.zpoly_at_one(p) for p in polys], polys)


def sl2_symmetric_power_dim(m: int) -> int:
    """dim Sym^m of the adjoint of sl(2)."""
    return comb(m + 2, 2)
