"""Compare the numba kernels with their pure-python/numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 3] [--skip-e2e]

Each kernel pair is checked for identical output before timing.  The
end-to-end row runs E8 small-vector enumeration in two subprocesses, one with
ZHUALG_DISABLE_NUMBA=1.
"""
import argparse
import os
import subprocess
import sys
import time

import numpy as np

from zhualg import _accel
from zhualg.catalog import get_lattice
from zhualg.lattice_core import vectors_with_norms


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def row(name, fast, slow, repeat):
    fast()  # warm the JIT
    tf, a = best_of(fast, repeat)
    ts, b = best_of(slow, repeat)
    same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
    print(f"{name:<28} numba {tf * 1e3:9.2f} ms   fallback {ts * 1e3:9.2f} ms   x{ts / tf:7.1f}   same={same}")


def bench_ball(L, bound, repeat):
    mu, diag = L._ldl
    c = np.zeros(L.rank)
    args = (mu, diag, c, float(bound) + 1e-7, 5_000_000)
    row(f"enumerate_ball {L.name} <= {bound}", lambda: _accel.enumerate_ball(*args),
        lambda: _accel.enumerate_ball.py_func(*args), repeat)


def bench_mask(L, repeat):
    vecs, norms = vectors_with_norms(L, 6)
    gram = L.gram_array
    args = (vecs, norms, vecs, norms, gram)
    row(f"small_mask {L.name} ({len(vecs)}^2)", lambda: _accel._small_mask_loops(*args),
        lambda: _accel._small_mask_numpy(*args), repeat)


def bench_rank(rows, cols, repeat):
    rng = np.random.default_rng(0)
    mat = rng.integers(-3, 4, size=(rows, cols)).astype(np.int64)
    mat[rows // 2:] = mat[: rows - rows // 2] * 2  # force a rank deficiency
    p = _accel.PRIME_A
    row(f"rank_mod_p {rows}x{cols}", lambda: _accel._rank_mod_p_loops(mat, p),
        lambda: _accel._rank_mod_p_numpy(mat, p), repeat)


E2E = (
    "import time; from zhualg import BACKEND, get_lattice;"
    "from zhualg.lattice_voa import small_vectors;"
    "L = get_lattice('E8'); small_vectors(L); t = time.perf_counter();"
    "n = len(small_vectors(get_lattice('E8')));"
    "print(BACKEND, n, time.perf_counter() - t)"
)


def bench_e2e():
    for flag in ("0", "1"):
        env = dict(os.environ, ZHUALG_DISABLE_NUMBA=flag)
        out = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
        backend, n, secs = out.stdout.split()
        print(f"E8 small_vectors [{backend:>6}]     {float(secs) * 1e3:9.2f} ms   |S_L| = {n}")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()
    if not _accel.HAS_NUMBA:
        sys.exit("numba is unavailable or disabled; nothing to compare")
    E8 = get_lattice("E8")
    bench_ball(E8, 6, args.repeat)
    bench_ball(get_lattice("D14A1_11"), 4, args.repeat)
    bench_mask(E8, args.repeat)
    bench_rank(120, 200, args.repeat)
    bench_rank(400, 500, args.repeat)
    if not args.skip_e2e:
        bench_e2e()


if __name__ == "__main__":
    main()
