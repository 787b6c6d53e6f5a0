"""Pochhammer symbols, factorial kernels and Stirling numbers over the rationals.

All gamma-function ratios in the exact layer reduce to Pochhammer symbols
(x)_n = x(x+1)...(x+n-1), so rational parameters never leave the rational
field.
"""

from __future__ import annotations

import math
from fractions import Fraction


def pochhammer(x, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1); (x)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be a non-negative integer")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x + k
    return out


def falling_factorial(x, n: int) -> Fraction:
    """Falling factorial x(x-1)...(x-n+1)."""
    if n < 0:
        raise ValueError("falling factorial order must be non-negative")
    x = Fraction(x)
    out = Fraction(1)
    for k in range(n):
        out *= x - k
    return out


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind S(n, k)."""
    if n < 0 or k < 0:
        raise ValueError("stirling2 arguments must be non-negative")
    key = (n, k)
    cached = _STIRLING2_CACHE.get(key)
    if cached is not None:
        return cached
    if n == k:
        val = 1
    elif k == 0 or k > n:
        val = 0
    else:
        val = k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)
    _STIRLING2_CACHE[key] = val
    return val


_STIRLING2_CACHE: dict[tuple[int, int], int] = {}


def is_nonpositive_int(x) -> bool:
    """True iff x is an integer <= 0 (the condition for a terminating upper parameter)."""
    x = Fraction(x)
    return x.denominator == 1 and x.numerator <= 0
