"""Compare the numba kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--sizes 1000 10000 100000] [--reps 20] [--out results.json]

Both implementations are imported side by side from ``rindep._kernels``, so a
single process measures both regardless of ``RINDEP_BACKEND``.
"""
from __future__ import annotations

import argparse
import json
import statistics
import time

import numpy as np

from rindep import _kernels
from rindep.generators import grid, path, random_bounded_degree


def _time(fn, reps: int) -> float:
    fn()  # warm-up (jit compile, caches)
    samples = []
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t)
    return statistics.median(samples)


def _cases(n: int):
    side = max(2, int(round(n ** 0.5)))
    yield "path", path(n)
    yield "grid", grid(side, side)
    yield "rbd-d3", random_bounded_degree(n, 3, seed=1)


def run(sizes, reps: int) -> list[dict]:
    if not hasattr(_kernels, "bfs_numba"):
        raise SystemExit("numba is not installed; nothing to compare")
    rows = []
    for n in sizes:
        for family, g in _cases(n):
            ip, ix, mask = g.indptr, g.indices, g.full_mask
            src = np.array([0], dtype=np.int64)
            many = np.arange(0, g.n, max(1, g.n // 16), dtype=np.int64)
            X = np.arange(8, dtype=np.int64)
            kernels = {
                "bfs r=4": (lambda f: lambda: f(ip, ix, src, 4, mask),
                            _kernels.bfs_numpy, _kernels.bfs_numba),
                "bfs full": (lambda f: lambda: f(ip, ix, src, g.n, mask),
                             _kernels.bfs_numpy, _kernels.bfs_numba),
                "bfs_rows x16 r=3": (lambda f: lambda: f(ip, ix, many, 3, mask),
                                     _kernels.bfs_rows_numpy, _kernels.bfs_rows_numba),
                "refine k=8 r=2": (lambda f: lambda: f(ip, ix, X.copy(), 2),
                                   _kernels.refine_numpy, _kernels.refine_numba),
            }
            for name, (bind, slow, fast) in kernels.items():
                t_np = _time(bind(slow), reps)
                t_nb = _time(bind(fast), reps)
                rows.append(dict(family=family, n=g.n, kernel=name, numpy_us=t_np * 1e6,
                                 numba_us=t_nb * 1e6, speedup=t_np / t_nb))
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    ap.add_argument("--reps", type=int, default=20)
    ap.add_argument("--out", default=None, help="write rows as JSON")
    args = ap.parse_args()
    rows = run(args.sizes, args.reps)
    print(f"{'family':<8}{'n':>8}  {'kernel':<18}{'numpy us':>12}{'numba us':>12}{'speedup':>9}")
    for row in rows:
        print(f"{row['family']:<8}{row['n']:>8}  {row['kernel']:<18}{row['numpy_us']:>12.1f}"
              f"{row['numba_us']:>12.1f}{row['speedup']:>9.1f}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
