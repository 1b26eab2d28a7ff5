"""Core domain types and every closed-form / composition-sum count evaluator.

Conventions, fixed once here:

* Objects sit at positions 1..n on a line or a circle.
* A pair of chosen positions is in conflict when their distance (on the
  circle: either arc's distance) is one of m, 2m, ..., p*m; a k-subset
  counts when no pair conflicts.
* ``h_*`` evaluators count line subsets, ``g_*`` circle subsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .binomials import binom_nat
from .omega_phi import (
    compositions,
    omega_closed_1_total,
    omega_closed_2_total,
    omega_closed_3_total,
)


class Topology(Enum):
    LINE = "line"
    CIRCLE = "circle"


@dataclass(frozen=True)
class SeparationParams:
    """The pair (m, p) and its derived forbidden distance sets."""

    m: int
    p: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.p < 1:
            raise ValueError(f"need m, p >= 1, got m={self.m}, p={self.p}")

    @property
    def forbidden_gaps(self) -> frozenset[int]:
        """Forbidden counts of objects strictly between a chosen pair."""
        return frozenset(i * self.m - 1 for i in range(1, self.p + 1))

    @property
    def forbidden_diffs(self) -> frozenset[int]:
        """Forbidden position differences (gaps shifted by one)."""
        return frozenset(i * self.m for i in range(1, self.p + 1))


@dataclass(frozen=True)
class CountQuery:
    """One counting request: topology, (n, k) and the separation parameters."""

    topology: Topology
    n: int
    k: int
    params: SeparationParams

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"need n >= 0, got n={self.n}")


@dataclass(frozen=True)
class PartitionSizes:
    """Row lengths of the residue-class array splitting 1..n into m rows."""

    sizes: tuple[int, ...]
    r: int
    ell: int


def partition_sizes(n: int, m: int) -> PartitionSizes:
    """The unique split n = r*m + ell with 1 <= ell <= m; row i has r+1
    elements for i <= ell and r elements beyond."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got n={n}, m={m}")
    r = (n - 1) // m
    ell = n - r * m
    sizes = tuple(r + 1 if i < ell else r for i in range(m))
    return PartitionSizes(sizes, r, ell)


def _row_sizes(n: int, m: int) -> tuple[int, ...]:
    if n == 0:
        return (0,) * m
    return partition_sizes(n, m).sizes


def h_composition(
    n: int, k: int, m: int, p: int, sizes: Sequence[int] | None = None
) -> int:
    """Definitional line count: sum over row-wise compositions of k.

    Each composition (k_1..k_m) with ``k_i <= 1 + |A_i|/p`` (checked as the
    exact integer comparison ``p*(k_i - 1) <= |A_i|``) contributes
    ``prod_i binom_nat(|A_i| - p*(k_i - 1), k_i)``.  Valid for all n, k >= 0
    and always equals the brute-force count.
    """
    _check_hg_args(n, k, m, p)
    if sizes is None:
        sizes = _row_sizes(n, m)
    else:
        sizes = tuple(sizes)
        if len(sizes) != m or any(s < 0 for s in sizes) or sum(sizes) != n:
            raise ValueError("sizes must be m nonnegative integers summing to n")
    total = 0
    for parts in compositions(k, m):
        if any(p * (k_i - 1) > s for k_i, s in zip(parts, sizes)):
            continue
        term = 1
        for k_i, s in zip(parts, sizes):
            term *= binom_nat(s - p * (k_i - 1), k_i)
            if term == 0:
                break
        total += term
    return total


def h_closed_1(n: int, k: int, m: int, p: int) -> int:
    """First single-sum line formula, valid for ``n >= p*m*(k-1)``."""
    _check_h_closed_args(n, k, m, p)
    return _as_count(omega_closed_1_total(n + m * p, -p, m, k), "h_closed_1")


def h_closed_2(n: int, k: int, m: int, p: int) -> int:
    """Second single-sum line formula, valid for ``n >= p*m*(k-1)``."""
    _check_h_closed_args(n, k, m, p)
    return _as_count(omega_closed_2_total(n + m * p, -p, m, k), "h_closed_2")


def h_closed_3(n: int, k: int, m: int, p: int, variant: str = "corrected") -> int:
    """Third single-sum line formula (needs ``k >= 1``).

    ``corrected`` shifts the inner binomial's lower index to ``k-1-j`` and
    matches the definitional count; ``printed`` keeps ``k-j`` and is wrong
    (the audit subsystem exhibits its counterexamples).
    """
    _check_h_closed_args(n, k, m, p)
    if k < 1:
        raise ValueError("h_closed_3 needs k >= 1")
    return _as_count(
        h_closed_3_value(n, k, m, p, variant), f"h_closed_3({variant})"
    )


def h_closed_3_value(
    n: int, k: int, m: int, p: int, variant: str = "corrected"
) -> Fraction:
    """Exact rational value of the third formula (the printed variant is not
    guaranteed to be an integer)."""
    return omega_closed_3_total(n + m * p, -p, m, k, variant)


def g_closed(n: int, k: int, m: int, p: int) -> int:
    """Circle count ``n/(n - p*k) * binom(n - p*k, k)``, valid for ``n >= m*p*k + 1``."""
    _check_hg_args(n, k, m, p)
    if n < m * p * k + 1:
        raise ValueError(f"g_closed needs n >= m*p*k+1 = {m*p*k + 1}, got n={n}")
    value = Fraction(n, n - p * k) * binom_nat(n - p * k, k)
    return _as_count(value, "g_closed")


def h_for_identity(n: int, k: int, m: int, p: int) -> int:
    """Line count extended to all integer n for use inside identity sums:
    the empty selection counts 1 for every n (even n < 0); with k >= 1 a
    too-short line counts 0."""
    if k < 0:
        return 0
    if k == 0:
        return 1
    if n < k:
        return 0
    return h_composition(n, k, m, p)


def g_from_h(n: int, k: int, m: int, p: int) -> int:
    """Circle count assembled from line counts by deleting the wrap-around
    zone: ``sum_j binom(m, j) p^j H(n - p*m - (p+1)*j, k - j)``.

    Valid for ``n >= m*p*k + 1``.  The j = k boundary term relies on the
    empty-selection convention H(n, 0) = 1 for every n.
    """
    _check_hg_args(n, k, m, p)
    if n < m * p * k + 1:
        raise ValueError(f"g_from_h needs n >= m*p*k+1 = {m*p*k + 1}, got n={n}")
    total = 0
    for j in range(min(m, k) + 1):
        total += (
            binom_nat(m, j)
            * p**j
            * h_for_identity(n - p * m - (p + 1) * j, k - j, m, p)
        )
    return total


def count_query(topology: str | Topology, n: int, k: int, m: int, p: int) -> CountQuery:
    """Convenience constructor used by the CLI and tests."""
    topo = Topology(topology) if not isinstance(topology, Topology) else topology
    return CountQuery(topo, n, k, SeparationParams(m, p))


def _check_hg_args(n: int, k: int, m: int, p: int) -> None:
    if m < 1 or p < 1:
        raise ValueError(f"need m, p >= 1, got m={m}, p={p}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")


def _check_h_closed_args(n: int, k: int, m: int, p: int) -> None:
    _check_hg_args(n, k, m, p)
    if n < p * m * (k - 1):
        raise ValueError(
            f"closed line formulas need n >= p*m*(k-1) = {p*m*(k-1)}, got n={n}"
        )


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} produced a non-integer value {value}")
    return int(value)


__all__ = [
    "Topology",
    "SeparationParams",
    "CountQuery",
    "PartitionSizes",
    "partition_sizes",
    "compositions",
    "h_composition",
    "h_closed_1",
    "h_closed_2",
    "h_closed_3",
    "h_closed_3_value",
    "g_closed",
    "g_from_h",
    "h_for_identity",
    "count_query",
]
