"""Exact rational scalars and their wire format.

The ground ring for every closed form and oracle computation is the field of
rationals, carried by ``fractions.Fraction`` (always in lowest terms, positive
denominator, exact arithmetic).  Wherever a rational crosses a module or CLI
boundary it is serialized as the string ``"num/den"``, e.g. ``"15/8"`` or
``"-3/1"``.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, Fractions or 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_to_str(q) -> str:
    """Serialize a rational as 'num/den' with den >= 1 (always includes /den)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def log_fraction(q: Fraction) -> float:
    """Natural log of a positive rational, safe for values far outside float range."""
    if q <= 0:
        raise ValueError("log_fraction requires a positive rational")
    return math.log(q.numerator) - math.log(q.denominator)
