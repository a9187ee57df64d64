"""Compare the compiled and pure-Python LR tableau enumerators.

    python benchmarks/bench_lr_kernel.py [--repeat 3]

Runs both kernels over every skew shape inside a box, checks that their
outputs agree and prints the timings.
"""

import argparse
import time

from horncone import _backend, _lrkernel_py
from horncone.seqcore import contains, partitions_in_box


def workload(rows, cols):
    shapes = list(partitions_in_box(rows, cols))
    return [(o, i) for o in shapes for i in shapes if contains(o, i)]


def timed(fn, pairs, n, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [fn(o, i, n) for o, i in pairs]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=4)
    ap.add_argument("--cols", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    pairs = workload(args.rows, args.cols)
    n = args.rows
    print(f"{len(pairs)} skew shapes in a {args.rows}x{args.cols} box")
    t_py, ref = timed(_lrkernel_py.lr_fillings, pairs, n, args.repeat)
    print(f"python : {t_py:8.3f} s")
    if _backend.BACKEND != "cython":
        print("cython : not built (install with a C compiler to compare)")
        return
    from horncone import _lrkernel

    t_cy, got = timed(_lrkernel.lr_fillings, pairs, n, args.repeat)
    assert got == ref, "kernels disagree"
    print(f"cython : {t_cy:8.3f} s   speedup {t_py / t_cy:5.1f}x")


if __name__ == "__main__":
    main()
