"""Pure-Python brute-force counting kernel.

Mirrors the compiled kernel in _fastcount.pyx line for line; the oracle
picks whichever is available at import time.  Lexicographic DFS over
chosen positions, pruning as soon as the newest position conflicts with
an earlier one.
"""

from __future__ import annotations

BACKEND = "python"


def count_separate(n: int, k: int, m: int, p: int, circular: bool) -> int:
    """Number of k-subsets of positions 1..n with no pair at a forbidden
    distance (circular counts both arcs)."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k > n:
        return 0
    pm = p * m
    chosen = [0] * k

    def walk(depth: int, start: int) -> int:
        if depth == k:
            return 1
        total = 0
        # leave room for the remaining k - depth - 1 positions
        for c in range(start, n - (k - depth) + 2):
            ok = True
            for i in range(depth):
                d = c - chosen[i]
                if d <= pm and d % m == 0:
                    ok = False
                    break
                if circular:
                    cd = n - d
                    if cd <= pm and cd % m == 0:
                        ok = False
                        break
            if ok:
                chosen[depth] = c
                total += walk(depth + 1, c + 1)
        return total

    return walk(0, 1)
