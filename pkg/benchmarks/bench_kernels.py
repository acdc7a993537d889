"""Compare the compiled kernels against the pure Python twins.

Runs the five table-scan primitives on semilattice chains, cyclic groups,
and a strong semilattice of groups at growing orders and prints one row
per (input, kernel) with both timings.  The associativity scan is the
cubic one that motivates the compiled backend; the others are quadratic.

Usage: python3 benchmarks/bench_kernels.py [max_order]
"""

import sys
import time

from sgcones import _kernels_py
from sgcones.builders import (SLGSpec, chain, cyclic_group,
                              strong_semilattice_of_groups, trivial_homs)

try:
    from sgcones import _kernels
except ImportError:
    _kernels = None

KERNELS = (
    "first_nonassociative",
    "left_ideal_masks",
    "right_ideal_masks",
    "regularity_witnesses",
    "centrality_violation",
)


def big_slg(copies):
    """Chain semilattice with one cyclic group of order 4 per vertex."""
    sl = chain(copies)
    groups = tuple(cyclic_group(4) for _ in range(copies))
    return strong_semilattice_of_groups(
        SLGSpec(sl, groups, trivial_homs(sl, groups))
    )


def inputs(max_order):
    yield "chain", chain(max_order)
    yield "cyclic", cyclic_group(max_order)
    yield "slg", big_slg(max_order // 4)


def bench(fn, n, flat, repeat=3):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(n, flat)
        dt = time.perf_counter() - t0
        if best is None or dt < best:
            best = dt
    return best


def main():
    max_order = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    if _kernels is None:
        print("compiled backend not importable, timing pure Python only")
    print(f"{'input':<8} {'n':>4} {'kernel':<24} "
          f"{'python':>10} {'cython':>10} {'speedup':>8}")
    for name, S in inputs(max_order):
        n, flat = S.order, S._flat
        for kname in KERNELS:
            py = bench(getattr(_kernels_py, kname), n, flat)
            if _kernels is None:
                print(f"{name:<8} {n:>4} {kname:<24} {py:>9.4f}s {'-':>10} "
                      f"{'-':>8}")
                continue
            cy = bench(getattr(_kernels, kname), n, flat)
            ratio = py / cy if cy > 0 else float("inf")
            print(f"{name:<8} {n:>4} {kname:<24} {py:>9.4f}s {cy:>9.4f}s "
                  f"{ratio:>7.1f}x")


if __name__ == "__main__":
    main()
