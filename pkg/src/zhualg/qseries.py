"""Truncated q-series with Laurent-polynomial-in-z coefficients and a t-degree.

A series is a map (q_power, t_degree) -> {z_exponent: integer}.  Terms with
q_power above the truncation order are dropped; zero coefficients are never
stored.
"""
from __future__ import annotations

from collections import defaultdict
from typing import Callable, Mapping

ZPoly = Mapping[int, int]


class TruncationMismatch(ValueError):
    pass


def _clean(poly: Mapping[int, int]) -> dict[int, int]:
    return {e: c for e, c in poly.items() if c}


def zpoly_mul(a: ZPoly, b: ZPoly) -> dict[int, int]:
    out: dict[int, int] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] += ca * cb
    return _clean(out)


def zpoly_at_one(p: ZPoly) -> int:
    return sum(p.values())


class TruncatedSeries:
    __slots__ = ("order", "_terms")

    def __init__(self, order: int, terms: Mapping[tuple[int, int], ZPoly] | None = None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        self.order = order
        clean = {}
        for (qp, td), poly in (terms or {}).items():
            if qp > order:
                continue
            p = _clean(poly)
            if p:
                clean[(qp, td)] = p
        self._terms = clean

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls(order, {(0, 0): {0: 1}})

    @classmethod
    def monomial(cls, order: int, q: int = 0, t: int = 0, z: int = 0, coeff: int = 1) -> "TruncatedSeries":
        return cls(order, {(q, t): {z: coeff}})

    @property
    def terms(self) -> dict[tuple[int, int], dict[int, int]]:
        return {k: dict(v) for k, v in self._terms.items()}

    def coeff(self, q: int, t: int) -> dict[int, int]:
        return dict(self._terms.get((q, t), {}))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self.order == other.order and self._terms == other._terms

    def __repr__(self) -> str:
        parts = [f"q^{q} t^{t} {dict(sorted(p.items()))}" for (q, t), p in sorted(self._terms.items())]
        return f"TruncatedSeries(order={self.order}: " + " + ".join(parts) + ")"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        if self.order != other.order:
            raise TruncationMismatch(f"{self.order} != {other.order}")
        out = {k: dict(v) for k, v in self._terms.items()}
        for k, poly in other._terms.items():
            tgt = out.setdefault(k, {})
            for e, c in poly.items():
                tgt[e] = tgt.get(e, 0) + c
        return TruncatedSeries(self.order, out)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def scale(self, q: int = 0, t: int = 0, z: int = 0, coeff: int = 1) -> "TruncatedSeries":
        """Multiply by coeff * q^q t^t z^z."""
        out = {}
        for (qp, td), poly in self._terms.items():
            if qp + q <= self.order:
                out[(qp + q, td + t)] = {e + z: c * coeff for e, c in poly.items()}
        return TruncatedSeries(self.order, out)

    def at_t1_z1(self) -> list[int]:
        """Integer q-series coefficients [a_0..a_order] after t = z = 1."""
        out = [0] * (self.order + 1)
        for (qp, _), poly in self._terms.items():
            out[qp] += zpoly_at_one(poly)
        return out

    def specialize_z1(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, {k: {0: zpoly_at_one(p)} for k, p in self._terms.items()})


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    if a.order != b.order:
        raise TruncationMismatch(f"{a.order} != {b.order}")
    Q = a.order
    acc: dict[tuple[int, int], dict[int, int]] = {}
    for (qa, ta), pa in a._terms.items():
        for (qb, tb), pb in b._terms.items():
            q = qa + qb
            if q > Q:
                continue
            tgt = acc.setdefault((q, ta + tb), defaultdict(int))
            for ea, ca in pa.items():
                for eb, cb in pb.items():
                    tgt[ea + eb] += ca * cb
    return TruncatedSeries(Q, acc)


def pochhammer(n: int, Q: int) -> TruncatedSeries:
    """(q)_n = prod_{j=1}^n (1 - q^j), truncated at q^Q."""
    out = TruncatedSeries.one(Q)
    for j in range(1, n + 1):
        out = mul(out, TruncatedSeries(Q, {(0, 0): {0: 1}, (j, 0): {0: -1}}))
    return out


def inv_pochhammer_coeffs(n: int, Q: int) -> list[int]:
    """Coefficients of 1/(q)_n: partitions into parts of size <= n."""
    c = [1] + [0] * Q
    for part in range(1, n + 1):
        for k in range(part, Q + 1):
            c[k] += c[k - part]
    return c


def inv_pochhammer(n: int, Q: int) -> TruncatedSeries:
    if n < 0:
        raise ValueError("n must be >= 0")
    c = inv_pochhammer_coeffs(n, Q)
    return TruncatedSeries(Q, {(k, 0): {0: v} for k, v in enumerate(c)})


def extract(series: TruncatedSeries, predicate: Callable[[int, int], bool]) -> TruncatedSeries:
    """Keep the terms whose (q_power, t_degree) satisfy the predicate."""
    return TruncatedSeries(series.order, {k: p for k, p in series._terms.items() if predicate(*k)})
