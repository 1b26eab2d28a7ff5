"""Truncated formal power series over exact rationals.

This is the coefficient-extraction engine behind the closed counting
formulas: every residue that appears in their derivations has the shape
"coefficient of y^k in an explicit product of binomial kernels", so a
plain truncated series with a Cauchy product is all that is needed.
Truncation order is always the target degree; callers pass T = k.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binomials import Rational


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of x^0 .. x^order; arithmetic never reads beyond order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a PowerSeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of x^k; rejects k outside 0..order."""
        if k < 0 or k > self.order:
            raise ValueError(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        if self.order != other.order:
            raise ValueError(
                f"truncation orders differ: {self.order} != {other.order}"
            )
        t = self.order
        out = [Fraction(0)] * (t + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(t + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return PowerSeries(tuple(out))


def from_coeffs(values, order: int) -> PowerSeries:
    """Series with the given low-order coefficients, zero-padded/truncated."""
    if order < 0:
        raise ValueError("order must be >= 0")
    vals = [Fraction(v) for v in values][: order + 1]
    vals += [Fraction(0)] * (order + 1 - len(vals))
    return PowerSeries(tuple(vals))


def one(order: int) -> PowerSeries:
    return from_coeffs([1], order)


def binomial_series(a: Rational, c: Rational, order: int) -> PowerSeries:
    """Truncation of ``(1 + c*x)**a``: coefficient of x^j is binom_gen(a, j) * c^j."""
    if order < 0:
        raise ValueError("order must be >= 0")
    a = Fraction(a)
    c = Fraction(c)
    coeffs = []
    term = Fraction(1)  # binom_gen(a, j) * c^j, built incrementally
    for j in range(order + 1):
        coeffs.append(term)
        term = term * (a - j) * c / (j + 1)
    return PowerSeries(tuple(coeffs))


def phi_residue(lam: Rational, mu: Rational, k: int) -> Fraction:
    """Coefficient of x^k in ``(1+x)**(lam + mu*k - 1) * (1 - (mu-1)*x)``.

    Whenever ``lam + mu*k != 0`` this equals
    ``lam/(lam + mu*k) * binom_gen(lam + mu*k, k)``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    lam = Fraction(lam)
    mu = Fraction(mu)
    kernel = binomial_series(lam + mu * k - 1, 1, k)
    linear = from_coeffs([1, -(mu - 1)], k)
    return (kernel * linear).coeff(k)


def h_series(n: int, k: int, m: int, p: int) -> int:
    """Line count via coefficient extraction:
    ``[y^k] (1+y)**(n+p*m+m-p*k-1) * (1+(p+1)*y)**(-(m-1))``.

    Valid for ``n >= p*m*(k-1)``, ``m, p >= 1``, ``k >= 0``.
    """
    _check_series_params(m, p, k)
    if n < p * m * (k - 1):
        raise ValueError(f"h_series needs n >= p*m*(k-1) = {p*m*(k-1)}, got n={n}")
    numer = binomial_series(n + p * m + m - p * k - 1, 1, k)
    denom = binomial_series(-(m - 1), p + 1, k)
    value = (numer * denom).coeff(k)
    return _as_int(value, "h_series")


def g_series(n: int, k: int, m: int, p: int) -> int:
    """Circle count via coefficient extraction:
    ``[y^k] (1+y)**(n-p*k-1) * (1+(p+1)*y)``.

    Valid for ``n >= m*p*k + 1``.
    """
    _check_series_params(m, p, k)
    if n < m * p * k + 1:
        raise ValueError(f"g_series needs n >= m*p*k+1 = {m*p*k + 1}, got n={n}")
    kernel = binomial_series(n - p * k - 1, 1, k)
    linear = from_coeffs([1, p + 1], k)
    value = (kernel * linear).coeff(k)
    return _as_int(value, "g_series")


def _check_series_params(m: int, p: int, k: int) -> None:
    if m < 1 or p < 1:
        raise ValueError(f"need m, p >= 1, got m={m}, p={p}")
    if k < 0:
        raise ValueError(f"need k >= 0, got k={k}")


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{what} produced a non-integer value {value}")
    return int(value)
