"""Composition sums over rational parameters and their closed forms.

Omega sums products of generalized binomials ``binom(lam_i + mu*k_i, k_i)``
over all weak compositions ``k_1 + ... + k_m = k``; Phi weights each factor
by ``lam_i / (lam_i + mu*k_i)``.  Remarkably, both collapse to expressions
that depend on the lambdas only through their sum: Omega has three
equivalent single-sum expansions and Phi a single closed form.

The third Omega expansion is implemented in two variants: ``printed`` is
the form that fails desk verification (kept so the audit subsystem can
exhibit the discrepancy) and ``corrected`` shifts the inner binomial's
lower index from ``k-j`` to ``k-1-j``, which agrees with the direct sum
everywhere.  ``corrected`` is the default.

All parameters are exact rationals.  The identities are polynomial in the
parameters, so exact verification at rational points is what the test
suite and the audit subsystem rely on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .binomials import Rational, binom_gen


class SingularTermError(ValueError):
    """A weighted composition term has a vanishing denominator."""


@dataclass(frozen=True)
class OmegaQuery:
    """Parameters (lambda_1..lambda_m, mu, k) of one composition-sum evaluation."""

    lambdas: tuple[Fraction, ...]
    mu: Fraction
    k: int

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "lambdas", tuple(Fraction(v) for v in self.lambdas)
        )
        object.__setattr__(self, "mu", Fraction(self.mu))
        if len(self.lambdas) < 1:
            raise ValueError("need at least one lambda")
        if self.k < 0:
            raise ValueError("k must be >= 0")

    @property
    def m(self) -> int:
        return len(self.lambdas)

    @property
    def lambda_total(self) -> Fraction:
        return sum(self.lambdas, Fraction(0))


def compositions(k: int, m: int) -> Iterator[tuple[int, ...]]:
    """All length-m tuples of nonnegative integers summing to k, lexicographic."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        yield (k,)
        return
    for first in range(k + 1):
        for rest in compositions(k - first, m - 1):
            yield (first,) + rest


def omega_direct(q: OmegaQuery) -> Fraction:
    """Direct composition sum of products binom_gen(lam_i + mu*k_i, k_i)."""
    total = Fraction(0)
    for parts in compositions(q.k, q.m):
        term = Fraction(1)
        for lam_i, k_i in zip(q.lambdas, parts):
            term *= binom_gen(lam_i + q.mu * k_i, k_i)
            if term == 0:
                break
        total += term
    return total


def phi_direct(q: OmegaQuery) -> Fraction:
    """Weighted composition sum; raises SingularTermError on a zero denominator."""
    total = Fraction(0)
    for parts in compositions(q.k, q.m):
        term = Fraction(1)
        for i, (lam_i, k_i) in enumerate(zip(q.lambdas, parts)):
            denom = lam_i + q.mu * k_i
            if denom == 0:
                raise SingularTermError(
                    f"lambda_{i + 1} + mu*k_{i + 1} = 0 in composition {parts}"
                )
            term *= lam_i / denom * binom_gen(denom, k_i)
        total += term
    return total


# The closed forms depend on the lambdas only through their sum, so the
# integer counting formulas reuse these helpers directly.

def omega_closed_1_total(lam: Rational, mu: Rational, m: int, k: int) -> Fraction:
    lam, mu = Fraction(lam), Fraction(mu)
    upper = lam + mu * k + m - 1
    total = Fraction(0)
    for j in range(k + 1):
        total += binom_gen(m + j - 2, j) * binom_gen(upper, k - j) * (mu - 1) ** j
    return total


def omega_closed_2_total(lam: Rational, mu: Rational, m: int, k: int) -> Fraction:
    lam, mu = Fraction(lam), Fraction(mu)
    upper = lam + mu * k + m - 1
    total = Fraction(0)
    for j in range(k + 1):
        total += (
            binom_gen(lam + (mu - 1) * k + j, j)
            * binom_gen(upper, k - j)
            * (1 - mu) ** j
            * mu ** (k - j)
        )
    return total


def omega_closed_3_total(
    lam: Rational, mu: Rational, m: int, k: int, variant: str = "corrected"
) -> Fraction:
    if k < 1:
        raise ValueError("the third expansion needs k >= 1")
    if variant not in ("printed", "corrected"):
        raise ValueError(f"unknown variant {variant!r}")
    lam, mu = Fraction(lam), Fraction(mu)
    upper = lam + mu * k + m - 1
    total = Fraction(0)
    for j in range(k + 1):
        lower = k - j if variant == "printed" else k - 1 - j
        total += (
            (lam + mu * (m + j))
            / k
            * binom_gen(m + j - 1, j)
            * binom_gen(upper, lower)
            * (mu - 1) ** j
        )
    return total


def omega_closed_1(q: OmegaQuery) -> Fraction:
    return omega_closed_1_total(q.lambda_total, q.mu, q.m, q.k)


def omega_closed_2(q: OmegaQuery) -> Fraction:
    return omega_closed_2_total(q.lambda_total, q.mu, q.m, q.k)


def omega_closed_3(q: OmegaQuery, variant: str = "corrected") -> Fraction:
    return omega_closed_3_total(q.lambda_total, q.mu, q.m, q.k, variant)


def phi_closed(q: OmegaQuery) -> Fraction:
    """``lam/(lam + mu*k) * binom_gen(lam + mu*k, k)``; singular if the denominator is 0."""
    lam = q.lambda_total
    denom = lam + q.mu * q.k
    if denom == 0:
        raise SingularTermError("lambda + mu*k = 0")
    return lam / denom * binom_gen(denom, q.k)


def hwang_wei_check(n_list: Sequence[int], k: int) -> tuple[Fraction, Fraction]:
    """Both sides of the mu = -1 specialization.

    Left: the direct composition sum with lambdas ``n_i + 1`` and mu = -1.
    Right: ``sum_j binom(m+j-2, j) * binom(n+1-k-2j, k-2j)`` with n = sum n_i.
    The caller asserts equality.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    m = len(n_list)
    left = omega_direct(
        OmegaQuery(tuple(Fraction(v + 1) for v in n_list), Fraction(-1), k)
    )
    n = sum(n_list)
    right = Fraction(0)
    for j in range(k + 1):
        right += binom_gen(m + j - 2, j) * binom_gen(n + 1 - k - 2 * j, k - 2 * j)
    return left, right


def gould_check(
    a: Rational, b: Rational, c: Rational, n: int
) -> tuple[Fraction, Fraction]:
    """Both sides of the two-part convolution identity.

    Left: ``sum_{k=0}^{n} a/(a+ck) binom(a+ck, k) * b/(b+c(n-k)) binom(b+c(n-k), n-k)``.
    Right: ``(a+b)/(a+b+cn) * binom(a+b+cn, n)`` (evaluated at n).
    Raises SingularTermError if any denominator vanishes.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a + b + c * n == 0:
        raise SingularTermError("a + b + c*n = 0")
    left = Fraction(0)
    for k in range(n + 1):
        d1 = a + c * k
        d2 = b + c * (n - k)
        if d1 == 0 or d2 == 0:
            raise SingularTermError(f"zero denominator at k={k}")
        left += a / d1 * binom_gen(d1, k) * b / d2 * binom_gen(d2, n - k)
    right = (a + b) / (a + b + c * n) * binom_gen(a + b + c * n, n)
    return left, right


def make_query(
    lambdas: Iterable[Rational], mu: Rational, k: int
) -> OmegaQuery:
    """Convenience constructor accepting ints, strings or Fractions."""
    return OmegaQuery(tuple(Fraction(v) for v in lambdas), Fraction(mu), k)
