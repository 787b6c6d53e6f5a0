"""Terminating generalized hypergeometric and Kampé de Fériet sums, exactly.

A pFq series sum_l prod (a_i)_l / prod (b_j)_l * z^l / l! terminates when some
upper parameter is a non-positive integer -m.  The multiple Kampé de Fériet
series generalizes this with a block of "global" parameters indexed by the
total degree l_1 + ... + l_p and per-variable parameter blocks indexed by each
l_i separately:

    sum_{l_1,...,l_p}  prod_g (a_g)_{|l|} / prod_g (alpha_g)_{|l|}
                       * prod_i [ prod (b)_{l_i} / prod (beta)_{l_i} ]
                       * prod_i x_i^{l_i} / l_i!

Termination may come from a per-variable upper parameter (bounding that l_i)
or from a global upper parameter (bounding the total |l|).  Terms are summed
in lexicographic order of (l_1, ..., l_p); with exact arithmetic the order is
irrelevant, but it keeps intermediate traces reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import LowerParamPoleError, NonTerminatingError
from .combinatorics import factorial, is_nonpositive_int, pochhammer


@dataclass(frozen=True)
class HypSeriesSpec:
    """Parameter blocks and arguments of a terminating multiple series."""

    global_upper: tuple = ()
    global_lower: tuple = ()
    per_var_upper: tuple = ()   # p tuples
    per_var_lower: tuple = ()   # p tuples
    arguments: tuple = ()       # p rationals

    def __post_init__(self):
        p = len(self.arguments)
        if len(self.per_var_upper) != p or len(self.per_var_lower) != p:
            raise ValueError("per-variable blocks must match the number of arguments")

    @property
    def p(self) -> int:
        return len(self.arguments)


def _termination_bound(params) -> int | None:
    """Smallest m with -m among the non-positive-integer parameters, else None."""
    bounds = [-Fraction(a).numerator for a in params if is_nonpositive_int(a)]
    return min(bounds) if bounds else None


def eval_pfq_terminating(upper, lower, arg) -> Fraction:
    """Exact value of a terminating pFq at a rational argument.

    Some upper parameter must be a non-positive integer -m; no lower parameter
    may hit a pole at summation index <= m (checked term by term: a pole only
    counts if the numerator has not already terminated the term).
    """
    upper = [Fraction(a) for a in upper]
    lower = [Fraction(b) for b in lower]
    arg = Fraction(arg)
    m = _termination_bound(upper)
    if m is None:
        raise NonTerminatingError(
            f"no non-positive-integer upper parameter in {[str(a) for a in upper]}"
        )
    total = Fraction(0)
    for l in range(m + 1):
        num = Fraction(1)
        for a in upper:
            num *= pochhammer(a, l)
        if num == 0:
            continue
        den = Fraction(1)
        for b in lower:
            den *= pochhammer(b, l)
        if den == 0:
            raise LowerParamPoleError(
                f"lower parameter pole at summation index {l} in {[str(b) for b in lower]}"
            )
        total += num / den * arg**l / factorial(l)
    return total


def eval_kampe_de_feriet(spec: HypSeriesSpec) -> Fraction:
    """Exact value of a terminating multiple Kampé de Fériet series.

    Reduces to ``eval_pfq_terminating`` when p = 1.  Raises NonTerminatingError
    unless every summation variable is bounded by a non-positive-integer upper
    parameter (per-variable or global), and LowerParamPoleError if a lower
    Pochhammer vanishes on a term whose numerator part is nonzero.
    """
    p = spec.p
    if p == 0:
        return Fraction(1)
    total_bound = _termination_bound(spec.global_upper)
    var_bounds = []
    for i in range(p):
        b = _termination_bound(spec.per_var_upper[i])
        if Fraction(spec.arguments[i]) == 0:
            b = 0  # x_i^{l_i} kills every l_i >= 1
        if b is None and total_bound is None:
            raise NonTerminatingError(f"summation variable {i + 1} has no terminating parameter")
        var_bounds.append(b)
    if total_bound is None:
        total_bound = sum(var_bounds)
    ranges = [range(min(b, total_bound) + 1 if b is not None else total_bound + 1)
              for b in var_bounds]

    total = Fraction(0)
    for l in itertools.product(*ranges):
        L = sum(l)
        if L > total_bound:
            continue
        num = Fraction(1)
        for a in spec.global_upper:
            num *= pochhammer(a, L)
        for i in range(p):
            for b in spec.per_var_upper[i]:
                num *= pochhammer(b, l[i])
        if num == 0:
            continue
        den = Fraction(1)
        for a in spec.global_lower:
            den *= pochhammer(a, L)
        for i in range(p):
            for b in spec.per_var_lower[i]:
                den *= pochhammer(b, l[i])
        if den == 0:
            raise LowerParamPoleError(f"lower parameter pole at l = {l}")
        term = num / den
        for i in range(p):
            term *= Fraction(spec.arguments[i]) ** l[i] / factorial(l[i])
        total += term
    return total
