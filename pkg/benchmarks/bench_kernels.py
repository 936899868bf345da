"""Compare the numba and numpy Graeffe bound kernels on census-shaped rows.

Usage: python benchmarks/bench_kernels.py [--rows N] [--degree D] [--repeat R]
"""

import argparse
import time

import numpy as np

from heightcensus.kernels import graeffe_log_bounds_numba, graeffe_log_bounds_numpy


def best_time(fn, rows, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn(rows)
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=200_000)
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--bound", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    rows = rng.integers(-args.bound, args.bound + 1, size=(args.rows, args.degree + 1))
    rows[:, -1] = rng.integers(1, args.bound + 1, size=args.rows)

    graeffe_log_bounds_numba(rows[:10])  # compile outside the timing
    a = graeffe_log_bounds_numba(rows)
    b = graeffe_log_bounds_numpy(rows)
    diff = float(np.max(np.abs(a - b)))

    t_numba = best_time(graeffe_log_bounds_numba, rows, args.repeat)
    t_numpy = best_time(graeffe_log_bounds_numpy, rows, args.repeat)
    print(f"rows={args.rows} degree={args.degree} max|numba-numpy|={diff:.2e}")
    print(f"numba  {t_numba * 1e3:9.1f} ms  ({args.rows / t_numba / 1e6:.2f} M rows/s)")
    print(f"numpy  {t_numpy * 1e3:9.1f} ms  ({args.rows / t_numpy / 1e6:.2f} M rows/s)")
    print(f"speedup {t_numpy / t_numba:.1f}x")


if __name__ == "__main__":
    main()
