"""Hot numeric kernels.

When numba is importable and ``ZHUALG_DISABLE_NUMBA`` is unset (or "0"), the
loop kernels are compiled with ``@njit``.  Otherwise the small-vector test and
the modular rank switch to vectorised numpy versions, and the enumeration
kernel runs as plain Python.  Results are identical on both paths; only speed
differs.

Floating point appears only as a pruning hint in the enumeration kernels.
Callers re-verify every returned vector with exact integer arithmetic.
"""
import os

import numpy as np

_flag = os.environ.get("ZHUALG_DISABLE_NUMBA", "0").strip().lower()
_DISABLED = _flag not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]

        def wrap(fn):
            return fn

        return wrap


BACKEND = "numba" if HAS_NUMBA else "python"

# primes below 2**31 so that products of residues fit in int64
PRIME_A = 2147483647
PRIME_B = 2147483629


@njit(cache=True, nogil=True)
def enumerate_ball(mu, diag, center, bound, cap):
    """All integer x with sum_i diag[i] * (x_i - c_i + sum_{j>i} mu[j, i] (x_j - c_j))^2 <= bound.

    ``mu``/``diag`` form the LDL^T factorisation of the Gram matrix
    (``mu`` unit lower triangular).  ``bound`` should already include a small
    slack.  Returns an (m, n) int64 array; raises if more than ``cap`` points.
    """
    n = diag.shape[0]
    out = np.zeros((64, n), dtype=np.int64)
    count = 0
    if n == 0:
        return out[:1]
    x = np.zeros(n, dtype=np.int64)
    # shift[i] = sum_{j>i} mu[j, i] * (x_j - c_j); partial[i] = energy used by coords > i
    shift = np.zeros(n + 1)
    partial = np.zeros(n + 1)
    upper = np.zeros(n, dtype=np.int64)
    i = n - 1
    # initialise level n-1
    s = 0.0
    shift[i] = s
    rad = np.sqrt(max(bound, 0.0) / diag[i])
    lo = int(np.ceil(center[i] - s - rad - 1e-9))
    upper[i] = int(np.floor(center[i] - s + rad + 1e-9))
    x[i] = lo
    while True:
        if x[i] > upper[i]:
            i += 1
            if i >= n:
                break
            x[i] += 1
            continue
        y = x[i] - center[i] + shift[i]
        e = partial[i + 1] + diag[i] * y * y
        if e > bound + 1e-9:
            x[i] += 1
            continue
        if i == 0:
            if count >= cap:
                raise ValueError("enumeration cap exceeded")
            if count == out.shape[0]:
                grown = np.zeros((2 * count, n), dtype=np.int64)
                grown[:count] = out
                out = grown
            for j in range(n):
                out[count, j] = x[j]
            count += 1
            x[i] += 1
            continue
        partial[i] = e
        k = i - 1
        s = 0.0
        for j in range(k + 1, n):
            s += mu[j, k] * (x[j] - center[j])
        shift[k] = s
        rem = bound - e
        if rem < 0.0:
            rem = 0.0
        rad = np.sqrt(rem / diag[k])
        lo = int(np.ceil(center[k] - s - rad - 1e-9))
        upper[k] = int(np.floor(center[k] - s + rad + 1e-9))
        x[k] = lo
        i = k
    return out[:count]


@njit(cache=True, nogil=True)
def _small_mask_loops(cands, cand_norms, gammas, gamma_norms, gram):
    """mask[a] is True iff gamma.gamma >= gamma.alpha for every listed gamma.

    Only gammas with norm strictly below alpha.alpha are compared; the others
    can never violate the inequality (Cauchy-Schwarz).
    """
    m = cands.shape[0]
    g = gammas.shape[0]
    n = gram.shape[0]
    mask = np.ones(m, dtype=np.bool_)
    ga = np.zeros(n, dtype=np.int64)
    for a in range(m):
        for j in range(n):
            acc = 0
            for k in range(n):
                acc += gram[j, k] * cands[a, k]
            ga[j] = acc
        na = cand_norms[a]
        for b in range(g):
            nb = gamma_norms[b]
            if nb >= na:
                continue
            p = 0
            for j in range(n):
                p += gammas[b, j] * ga[j]
            if p > nb:
                mask[a] = False
                break
    return mask


@njit(cache=True, nogil=True)
def _rank_mod_p_loops(mat, p):
    """Rank of an integer matrix over GF(p); returns (rank, pivot_row_indices).

    ``mat`` is copied and reduced mod p in place.  Pivot rows are indices into
    the original row order.
    """
    rows, cols = mat.shape
    a = np.empty((rows, cols), dtype=np.int64)
    for r in range(rows):
        for c in range(cols):
            v = mat[r, c] % p
            if v < 0:
                v += p
            a[r, c] = v
    order = np.arange(rows)
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        piv = -1
        for r in range(rank, rows):
            if a[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(cols):
                tmp = a[piv, k]
                a[piv, k] = a[rank, k]
                a[rank, k] = tmp
            t = order[piv]
            order[piv] = order[rank]
            order[rank] = t
        # modular inverse via Fermat
        inv = 1
        base = a[rank, c]
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * base % p
            base = base * base % p
            e >>= 1
        for k in range(c, cols):
            a[rank, k] = a[rank, k] * inv % p
        for r in range(rank + 1, rows):
            f = a[r, c]
            if f != 0:
                for k in range(c, cols):
                    a[r, k] = (a[r, k] - f * a[rank, k]) % p
        rank += 1
    return rank, order[:rank].copy()


def _small_mask_numpy(cands, cand_norms, gammas, gamma_norms, gram, chunk=2048):
    mask = np.ones(cands.shape[0], dtype=bool)
    proj = gammas @ gram
    for s in range(0, cands.shape[0], chunk):
        c = cands[s:s + chunk]
        p = proj @ c.T
        relevant = gamma_norms[:, None] < cand_norms[None, s:s + chunk]
        bad = (p > gamma_norms[:, None]) & relevant
        mask[s:s + chunk] = ~bad.any(axis=0)
    return mask


def _rank_mod_p_numpy(mat, p):
    a = np.mod(mat, p).astype(np.int64)
    rows, cols = a.shape
    order = np.arange(rows)
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
            order[[rank, piv]] = order[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank, c:] = a[rank, c:] * inv % p
        f = a[rank + 1:, c].copy()
        hit = np.flatnonzero(f)
        if hit.size:
            idx = rank + 1 + hit
            a[idx, c:] = (a[idx, c:] - f[hit, None] * a[rank, c:]) % p
        rank += 1
    return rank, order[:rank].copy()


if HAS_NUMBA:
    small_mask = _small_mask_loops
    rank_mod_p = _rank_mod_p_loops
else:
    small_mask = _small_mask_numpy
    rank_mod_p = _rank_mod_p_numpy
