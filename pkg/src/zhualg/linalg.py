"""Exact integer/rational linear algebra helpers."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from . import _accel

Matrix = Sequence[Sequence[int]]


def bareiss_pivots(rows: Matrix) -> list[int]:
    """Indices of rows forming a basis of the row space over Q.

    Fraction-free (Bareiss) elimination on Python ints; no modular shortcuts.
    """
    a = [list(map(int, r)) for r in rows]
    order = list(range(len(a)))
    if not a:
        return []
    ncols = len(a[0])
    nrows = len(a)
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if a[r][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        order[rank], order[piv] = order[piv], order[rank]
        pr = a[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[c]
            # exact division is guaranteed by Sylvester's identity
            a[r] = [(pv * row[k] - f * pr[k]) // prev for k in range(ncols)]
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return order[:rank]


def bareiss_rank(rows: Matrix) -> int:
    """Rank over Q by fraction-free elimination."""
    return len(bareiss_pivots(rows))


def modular_rank(mat: np.ndarray, p: int = _accel.PRIME_A) -> tuple[int, np.ndarray]:
    """Rank over GF(p) and the indices of a set of independent rows."""
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.shape[0] == 0 or mat.shape[1] == 0:
        return 0, np.zeros(0, dtype=np.int64)
    return _accel.rank_mod_p(mat, p)


def determinant(m: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    a = [list(map(int, r)) for r in m]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(m: Matrix) -> list[int]:
    return [determinant([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def ldl(gram: Matrix) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Exact LDL^T of a positive-definite matrix: returns (unit lower L, diag D)."""
    n = len(gram)
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for j in range(n):
        D[j] = Fraction(gram[j][j]) - sum(L[j][k] ** 2 * D[k] for k in range(j))
        for i in range(j + 1, n):
            L[i][j] = (Fraction(gram[i][j]) - sum(L[i][k] * L[j][k] * D[k] for k in range(j))) / D[j]
    return L, D


def inverse(m: Matrix) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan over Fractions."""
    n = len(m)
    a = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        pv = a[c][c]
        a[c] = [v / pv for v in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def hermite_normal_form(cols: Matrix) -> list[list[int]]:
    """Lower-triangular HNF H of the column lattice of a full-rank square matrix.

    Returns H with H[i][i] > 0, 0 <= H[i][j] < H[i][i] for j < i, and
    H Z^n = M Z^n.  Column operations only.
    """
    n = len(cols)
    a = [list(map(int, r)) for r in cols]

    def col_op(dst: int, src: int, f: int) -> None:
        for r in range(n):
            a[r][dst] -= f * a[r][src]

    def swap(c1: int, c2: int) -> None:
        for r in range(n):
            a[r][c1], a[r][c2] = a[r][c2], a[r][c1]

    for i in range(n):
        # gcd-reduce row i over columns i..n-1 into column i
        while True:
            nz = [j for j in range(i, n) if a[i][j] != 0]
            if not nz:
                raise ValueError("matrix is singular")
            j0 = min(nz, key=lambda j: abs(a[i][j]))
            if j0 != i:
                swap(i, j0)
            done = True
            for j in range(i + 1, n):
                if a[i][j]:
                    col_op(j, i, a[i][j] // a[i][i])
                    if a[i][j]:
                        done = False
            if done:
                break
        if a[i][i] < 0:
            for r in range(n):
                a[r][i] = -a[r][i]
        for j in range(i):
            col_op(j, i, a[i][j] // a[i][i])
    return a
