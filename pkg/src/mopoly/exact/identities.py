"""Standalone exact checkers for the classical summation identities.

Each checker computes both sides of an identity independently by exact
summation and reports whether they agree.  Parameters are validated against
all denominator poles before any evaluation.

Checked identities:

* ``chu_vandermonde``   (x+y)_n = sum_k C(n,k) (x)_k (y)_{n-k}
* ``gauss``             2F1(-n, x; y; 1) = (y-x)_n / (y)_n
* ``pfaff_saalschutz``  the k-shifted 3F2(1) transformation
* ``lemma1``/``lemma2`` closed forms of two weighted multiple sums over the
  finite-support type II coefficient array
* ``lemma3``            the telescoping product-difference identity
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import LowerParamPoleError, PoleInParamsError
from .combinatorics import binomial, factorial, pochhammer
from .hypergeometric import eval_pfq_terminating


@dataclass(frozen=True)
class IdentityReport:
    which: str
    params: dict
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def hahn_sum_coefficient(alpha, beta, N: int, n, l) -> Fraction:
    """Coefficient C_n^{l} of the finite-support type II multiple sum.

    With L_i = l_i + ... + l_p and partial sums N_i = n_1 + ... + n_i:

        C = (-N)_{|n|} / (-N)_{|l|}
            * prod_i (a_i+1)_{n_i} / (a_i+b+|n|+1)_{n_i}
                     * (-n_i)_{l_i} / l_i!
                     * (a_i+b+N_i+1)_{L_i} / (a_i+1)_{L_i}
            * prod_{i<p} (a_i+n_i+1)_{L_{i+1}} / (a_i+b+N_i+1)_{L_{i+1}}
    """
    alpha = [Fraction(a) for a in alpha]
    beta = Fraction(beta)
    p = len(alpha)
    size = sum(n)
    L = sum(l)
    out = pochhammer(-N, size) / pochhammer(-N, L)
    for i in range(p):
        Li = sum(l[i:])
        Ni = sum(n[: i + 1])
        out *= pochhammer(alpha[i] + 1, n[i]) / pochhammer(alpha[i] + beta + size + 1, n[i])
        out *= pochhammer(-n[i], l[i]) / factorial(l[i])
        out *= pochhammer(alpha[i] + beta + Ni + 1, Li) / pochhammer(alpha[i] + 1, Li)
        if i < p - 1:
            Lnext = sum(l[i + 1:])
            out *= pochhammer(alpha[i] + n[i] + 1, Lnext)
            out /= pochhammer(alpha[i] + beta + Ni + 1, Lnext)
    return out


def _require_nonzero(value, what):
    if value == 0:
        raise PoleInParamsError(f"{what} vanishes")


def _check_hahn_coefficient_poles(alpha, beta, N, n):
    alpha = [Fraction(a) for a in alpha]
    beta = Fraction(beta)
    size = sum(n)
    if size > N:
        raise PoleInParamsError(f"|n| = {size} exceeds N = {N}")
    for i, a in enumerate(alpha):
        _require_nonzero(pochhammer(a + 1, size), f"(alpha_{i+1}+1)_{{|n|}}")
        _require_nonzero(pochhammer(a + beta + size + 1, size),
                         f"(alpha_{i+1}+beta+|n|+1)_{{n_i}}")
        _require_nonzero(pochhammer(a + beta + sum(n[: i + 1]) + 1, size),
                         f"(alpha_{i+1}+beta+N_i+1)_{{L}}")


def verify_identity(which: str, params: dict) -> IdentityReport:
    """Evaluate both sides of the named identity exactly and compare."""
    try:
        fn = _CHECKERS[which]
    except KeyError:
        raise ValueError(f"unknown identity {which!r}") from None
    try:
        lhs, rhs = fn(params)
    except (LowerParamPoleError, ZeroDivisionError) as exc:
        raise PoleInParamsError(str(exc)) from exc
    return IdentityReport(which=which, params=params, lhs=lhs, rhs=rhs)


def _chu_vandermonde(params):
    x, y, n = Fraction(params["x"]), Fraction(params["y"]), int(params["n"])
    lhs = pochhammer(x + y, n)
    rhs = sum(binomial(n, k) * pochhammer(x, k) * pochhammer(y, n - k) for k in range(n + 1))
    return lhs, rhs


def _gauss(params):
    n, x, y = int(params["n"]), Fraction(params["x"]), Fraction(params["y"])
    _require_nonzero(pochhammer(y, n), "(y)_n")
    lhs = eval_pfq_terminating([-n, x], [y], 1)
    rhs = pochhammer(y - x, n) / pochhammer(y, n)
    return lhs, rhs


def _pfaff_saalschutz(params):
    a, b, c = Fraction(params["a"]), Fraction(params["b"]), Fraction(params["c"])
    k, n = int(params["k"]), int(params["n"])
    _require_nonzero(pochhammer(c + k, n), "(c+k)_n")
    _require_nonzero(pochhammer(c - a - b, n), "(c-a-b)_n")
    lhs = eval_pfq_terminating([a, b, -n], [c + k, a + b + 1 - n - c], 1)
    rhs = (pochhammer(c - a, n) * pochhammer(c - b + k, n)
           / (pochhammer(c + k, n) * pochhammer(c - a - b, n))
           * eval_pfq_terminating([-k, b, -n], [c - a, b - c - k - n + 1], 1))
    return lhs, rhs


def _weighted_coefficient_sum(alpha, beta, N, n, x, shift):
    """sum_l (-N)_|l| (x)_|l| / (x+beta+shift)_|l| * C_n^l, exactly."""
    x = Fraction(x)
    beta = Fraction(beta)
    total = Fraction(0)
    for l in itertools.product(*[range(ni + 1) for ni in n]):
        L = sum(l)
        den = pochhammer(x + beta + shift, L)
        _require_nonzero(den, "(x+beta+%d)_L" % shift)
        total += (pochhammer(-N, L) * pochhammer(x, L) / den
                  * hahn_sum_coefficient(alpha, beta, N, n, l))
    return total


def _lemma1(params):
    alpha = [Fraction(a) for a in params["alpha"]]
    beta, N = Fraction(params["beta"]), int(params["N"])
    n, x = [int(v) for v in params["n"]], Fraction(params["x"])
    _check_hahn_coefficient_poles(alpha, beta, N, n)
    size = sum(n)
    _require_nonzero(pochhammer(x + beta + 1, size), "(x+beta+1)_{|n|}")
    lhs = _weighted_coefficient_sum(alpha, beta, N, n, x, 1)
    rhs = pochhammer(beta + 1, size) * pochhammer(-N, size) / pochhammer(x + beta + 1, size)
    for i, a in enumerate(alpha):
        rhs *= pochhammer(a - x + 1, n[i]) / pochhammer(a + beta + size + 1, n[i])
    return lhs, rhs


def _lemma2(params):
    alpha = [Fraction(a) for a in params["alpha"]]
    beta, N = Fraction(params["beta"]), int(params["N"])
    n, x = [int(v) for v in params["n"]], Fraction(params["x"])
    _check_hahn_coefficient_poles(alpha, beta, N, n)
    size = sum(n)
    if size < 1:
        raise PoleInParamsError("the second multiple-sum identity needs |n| >= 1")
    _require_nonzero(pochhammer(x + beta + 2, size), "(x+beta+2)_{|n|}")
    lhs = _weighted_coefficient_sum(alpha, beta, N, n, x, 2)
    rhs = pochhammer(beta + 2, size - 1) * pochhammer(-N, size) / pochhammer(x + beta + 2, size)
    for i, a in enumerate(alpha):
        rhs /= pochhammer(a + beta + size + 1, n[i])
    bracket = (x + beta + size + 1)
    prod_up = Fraction(1)
    prod_dn = Fraction(1)
    for i, a in enumerate(alpha):
        prod_up *= pochhammer(a - x + 1, n[i])
        prod_dn *= pochhammer(a - x, n[i])
    rhs *= bracket * prod_up - x * prod_dn
    return lhs, rhs


def _lemma3(params):
    alpha = [Fraction(a) for a in params["alpha"]]
    n = [int(v) for v in params["n"]]
    x = Fraction(params["x"])
    p = len(alpha)
    for a in alpha:
        if a == x:
            raise PoleInParamsError("alpha_l - x vanishes")
    lhs = Fraction(0)
    for l in range(1, p + 1):
        term = Fraction(n[l - 1]) / (alpha[l - 1] - x)
        for q in range(1, l):
            term *= pochhammer(alpha[q - 1] - x + 1, n[q - 1])
        for q in range(l, p + 1):
            term *= pochhammer(alpha[q - 1] - x, n[q - 1])
        lhs += term
    prod_up = Fraction(1)
    prod_dn = Fraction(1)
    for q in range(p):
        prod_up *= pochhammer(alpha[q] - x + 1, n[q])
        prod_dn *= pochhammer(alpha[q] - x, n[q])
    return lhs, prod_up - prod_dn


_CHECKERS = {
    "chu_vandermonde": _chu_vandermonde,
    "gauss": _gauss,
    "pfaff_saalschutz": _pfaff_saalschutz,
    "lemma1": _lemma1,
    "lemma2": _lemma2,
    "lemma3": _lemma3,
}

IDENTITY_NAMES = tuple(_CHECKERS)
