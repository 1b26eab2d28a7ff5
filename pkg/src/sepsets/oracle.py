"""Brute-force ground truth: test, count and enumerate subsets directly
from the separation definition.

Counting goes through a kernel selected at import time: the compiled
extension when it is installed, otherwise the pure-Python twin.  Setting
the environment variable SEPSETS_PURE=1 forces the pure kernel.
Enumeration (``list_brute``) is always pure Python; tests check it agrees
with the counting kernel.
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

from . import _purecount
from .counting import CountQuery, SeparationParams, Topology

if os.environ.get("SEPSETS_PURE"):
    _fastcount = None
else:
    try:
        from . import _fastcount  # type: ignore[attr-defined]
    except ImportError:
        _fastcount = None

DEFAULT_CAP = 32

# the compiled kernel uses C integers; stay inside its position range
_FAST_MAX_N = 64


class EnumerationCapError(ValueError):
    """Raised when a brute-force request exceeds the configured cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"brute force capped at n <= {cap}, got n={n}")
        self.n = n
        self.cap = cap


def kernel_backend() -> str:
    """Name of the counting kernel selected at import ('cython' or 'python')."""
    return _fastcount.BACKEND if _fastcount is not None else _purecount.BACKEND


def is_separate_line(positions: Sequence[int], params: SeparationParams) -> bool:
    """True iff no pair of positions differs by m, 2m, ..., p*m."""
    _check_positions(positions)
    forbidden = params.forbidden_diffs
    pos = list(positions)
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            if pos[j] - pos[i] in forbidden:
                return False
    return True


def is_separate_circle(
    positions: Sequence[int], n: int, params: SeparationParams
) -> bool:
    """True iff no pair conflicts along either arc: neither the position
    difference d nor its complement n - d may be m, 2m, ..., p*m."""
    _check_positions(positions)
    if positions and positions[-1] > n:
        raise ValueError(f"position {positions[-1]} outside 1..{n}")
    forbidden = params.forbidden_diffs
    pos = list(positions)
    for i in range(len(pos)):
        for j in range(i + 1, len(pos)):
            d = pos[j] - pos[i]
            if d in forbidden or (n - d) in forbidden:
                return False
    return True


def count_brute(q: CountQuery, cap: int = DEFAULT_CAP) -> int:
    """Count by exhaustive enumeration; rejects n above the cap."""
    if q.n > cap:
        raise EnumerationCapError(q.n, cap)
    circular = q.topology is Topology.CIRCLE
    if _fastcount is not None and q.n <= _FAST_MAX_N:
        return _fastcount.count_separate(q.n, q.k, q.params.m, q.params.p, circular)
    return _purecount.count_separate(q.n, q.k, q.params.m, q.params.p, circular)


def list_brute(q: CountQuery, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every valid k-subset as a tuple of positions, lexicographically."""
    if q.n > cap:
        raise EnumerationCapError(q.n, cap)
    if q.k < 0 or q.k > q.n:
        return
    n, k, m, p = q.n, q.k, q.params.m, q.params.p
    circular = q.topology is Topology.CIRCLE
    pm = p * m
    chosen: list[int] = []

    def conflicts(c: int) -> bool:
        for b in chosen:
            d = c - b
            if d <= pm and d % m == 0:
                return True
            if circular:
                cd = n - d
                if cd <= pm and cd % m == 0:
                    return True
        return False

    def walk(start: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == k:
            yield tuple(chosen)
            return
        for c in range(start, n - (k - len(chosen)) + 2):
            if not conflicts(c):
                chosen.append(c)
                yield from walk(c + 1)
                chosen.pop()

    yield from walk(1)


def _check_positions(positions: Sequence[int]) -> None:
    for a, b in zip(positions, positions[1:]):
        if a >= b:
            raise ValueError("positions must be strictly increasing")
    if positions and positions[0] < 1:
        raise ValueError("positions are 1-based")
