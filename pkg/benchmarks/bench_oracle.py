#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

The brute-force oracle dominates the runtime of the verification sweeps,
so this is the one loop worth compiling.  Both kernels run the identical
workload and must produce identical counts.

Usage:
    python benchmarks/bench_oracle.py [--n-max 26] [--k-max 6] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from itertools import product

from sepsets import _purecount

try:
    from sepsets import _fastcount
except ImportError:
    _fastcount = None


def workload(n_max: int, k_max: int):
    for circular in (False, True):
        for m, p in product((1, 2, 3), (1, 2)):
            for k in range(k_max + 1):
                for n in range(n_max + 1):
                    yield n, k, m, p, circular


def run(kernel, cases, repeat: int):
    best = float("inf")
    checksum = 0
    for _ in range(repeat):
        start = time.perf_counter()
        checksum = 0
        for n, k, m, p, circular in cases:
            checksum += kernel.count_separate(n, k, m, p, circular)
        best = min(best, time.perf_counter() - start)
    return best, checksum


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=26)
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cases = list(workload(args.n_max, args.k_max))
    print(f"workload: {len(cases)} counting queries "
          f"(n <= {args.n_max}, k <= {args.k_max}, line and circle)")

    pure_time, pure_sum = run(_purecount, cases, args.repeat)
    print(f"python kernel: {pure_time:8.3f} s   (checksum {pure_sum})")

    if _fastcount is None:
        print("cython kernel: not built (pip install -e . builds it)")
        return 0

    fast_time, fast_sum = run(_fastcount, cases, args.repeat)
    print(f"cython kernel: {fast_time:8.3f} s   (checksum {fast_sum})")
    if fast_sum != pure_sum:
        print("MISMATCH between kernels!")
        return 1
    print(f"speedup: {pure_time / fast_time:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
