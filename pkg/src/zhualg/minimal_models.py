"""Virasoro minimal models V_{p,q}."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class NotCoprime(ValueError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class MinimalModel:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise OutOfRange(f"p, q must be >= 2 (got {self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise NotCoprime(f"gcd({self.p}, {self.q}) = {gcd(self.p, self.q)}")

    @property
    def module_count(self) -> int:
        return (self.p - 1) * (self.q - 1) // 2


def minimal_dims(p: int, q: int) -> tuple[int, int]:
    """(dim A, dim A_[2]); both equal the number of irreducible modules.

    Every irreducible module has a one-dimensional top space, and A_[2] is
    spanned by L_{-2}^i|0> for i below the degree of the singular vector.
    """
    n = MinimalModel(p, q).module_count
    return n, n
