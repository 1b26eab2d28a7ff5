"""Exact binomial coefficients in the two conventions the counting formulas need.

All arithmetic is done with Python's arbitrary-precision ``int`` and
``fractions.Fraction``; nothing here ever rounds.

Two distinct binomial conventions coexist on purpose:

* ``binom_nat`` is the counting convention: it returns 0 whenever the
  upper index is negative or smaller than the lower index.  Every
  subset-counting formula uses this one.
* ``binom_gen`` is the generalized coefficient ``a(a-1)...(a-k+1)/k!``
  for an arbitrary rational upper index.  It is nonzero for negative
  upper indices (e.g. ``binom_gen(-1, j) == (-1)**j``) and is the right
  convention for the algebraic identities.

Mixing them up silently produces wrong counts, hence the two names.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Union

Rational = Union[int, Fraction]


def binom_nat(a: int, k: int) -> int:
    """Counting binomial: 0 if ``k < 0``, ``a < 0`` or ``a < k``."""
    if k < 0 or a < 0 or a < k:
        return 0
    return comb(a, k)


def falling_factorial(a: Rational, k: int) -> Fraction:
    """``a(a-1)...(a-k+1)`` for rational ``a``; the empty product is 1."""
    if k < 0:
        raise ValueError(f"falling_factorial needs k >= 0, got k={k}")
    result = Fraction(1)
    a = Fraction(a)
    for i in range(k):
        result *= a - i
    return result


def binom_gen(a: Rational, k: int) -> Fraction:
    """Generalized binomial ``falling_factorial(a, k) / k!``; 0 for ``k < 0``."""
    if k < 0:
        return Fraction(0)
    return falling_factorial(a, k) / factorial(k)
