# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled brute-force counting kernel.

Same algorithm as _purecount.py: lexicographic DFS over chosen positions
with early pruning.  Positions and the counter are C integers; a count
that overflowed int64 would require more DFS steps than are feasible to
run, so the counter cannot overflow in any enumeration that terminates.
"""

BACKEND = "cython"

DEF MAX_N = 64


cdef long long _walk(int n, int k, int m, int p, bint circular,
                     int depth, int start, int* chosen) noexcept:
    if depth == k:
        return 1
    cdef long long total = 0
    cdef int c, i, d, cd
    cdef int pm = p * m
    cdef bint ok
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
            total += _walk(n, k, m, p, circular, depth + 1, c + 1, chosen)
    return total


def count_separate(int n, int k, int m, int p, bint circular):
    """Number of k-subsets of positions 1..n with no pair at a forbidden
    distance (circular counts both arcs).  Requires n <= 64."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel handles n <= {MAX_N}, got n={n}")
    if k < 0:
        return 0
    if k == 0:
        return 1
    if k > n:
        return 0
    cdef int[MAX_N] chosen
    return _walk(n, k, m, p, circular, 0, 1, &chosen[0])
