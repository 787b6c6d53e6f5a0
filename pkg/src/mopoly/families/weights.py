"""Weight functions and their symbolic total masses.

All gamma ratios reduce to Pochhammer ratios so that rational parameters at
integer support points produce exact rational weight values:

* Hahn:        w_i(x) = (alpha_i+1)_x / x! * (beta+1)_{N-x} / (N-x)!
* Meixner II:  w_i(x) = (beta_i)_x / x! * c^x
* Meixner I:   w_i(x) = (beta)_x / x! * c_i^x
* Kravchuk:    w_i(x) = C(N, x) pi_i^x (1-pi_i)^{N-x}
* Charlier:    w_i(x) = a_i^x / x!

The total mass m_0^{(i)} = sum_x w_i(x) is rational for the finite-support
families and factors as token^{-1} * rational for the infinite ones:
e^{a_i} for Charlier, (1-c)^{-beta_i} for Meixner II, (1-c_i)^{-beta} for
Meixner I.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import OutOfSupportError
from ..exact.combinatorics import binomial, factorial, pochhammer
from .params import Charlier, FamilyParams, Hahn, Kravchuk, MeixnerI, MeixnerII
from .prefactors import PrefactorToken


def weight(params: FamilyParams, i: int, x: int) -> Fraction:
    """Exact value of the i-th weight (1-based) at integer support point x."""
    if x < 0:
        raise OutOfSupportError(f"x = {x} is negative")
    if params.finite_support and x > params.N:
        raise OutOfSupportError(f"x = {x} exceeds the support bound N = {params.N}")
    if not 1 <= i <= params.p:
        raise ValueError(f"weight index i = {i} out of range 1..{params.p}")
    if isinstance(params, Hahn):
        a = params.alpha[i - 1]
        return (pochhammer(a + 1, x) / factorial(x)
                * pochhammer(params.beta + 1, params.N - x) / factorial(params.N - x))
    if isinstance(params, MeixnerII):
        return pochhammer(params.beta[i - 1], x) / factorial(x) * params.c**x
    if isinstance(params, MeixnerI):
        return pochhammer(params.beta0, x) / factorial(x) * params.c[i - 1] ** x
    if isinstance(params, Kravchuk):
        q = params.p_success[i - 1]
        return binomial(params.N, x) * q**x * (1 - q) ** (params.N - x)
    if isinstance(params, Charlier):
        return params.a[i - 1] ** x / factorial(x)
    raise TypeError(f"unknown family {params!r}")


def weight_mass_token(params: FamilyParams, i: int):
    """Symbolic total mass of the i-th weight as (token, rational_factor).

    The pair satisfies token * m_0^{(i)} = rational_factor: the token is
    exactly the transcendental factor that the type I prefactor pairs with.
    For finite-support families the token is one and the factor is the exact
    finite sum; for the infinite families m_0 itself is transcendental
    (e^{a_i}, (1-c)^{-beta_i}, (1-c_i)^{-beta}) and the factor is 1.
    """
    if not 1 <= i <= params.p:
        raise ValueError(f"weight index i = {i} out of range 1..{params.p}")
    if isinstance(params, Hahn):
        # Chu-Vandermonde collapses the finite sum to a single Pochhammer ratio.
        mass = pochhammer(params.alpha[i - 1] + params.beta + 2, params.N) / factorial(params.N)
        return PrefactorToken.one(), mass
    if isinstance(params, Kravchuk):
        return PrefactorToken.one(), Fraction(1)
    if isinstance(params, MeixnerII):
        # m_0 = (1-c)^{-beta_i}, so (1-c)^{beta_i} * m_0 = 1
        return PrefactorToken.pow_one_minus_c(params.c, params.beta[i - 1]), Fraction(1)
    if isinstance(params, MeixnerI):
        return PrefactorToken.pow_one_minus_ci(i, params.c[i - 1], params.beta0), Fraction(1)
    if isinstance(params, Charlier):
        # m_0 = e^{a_i}; exp_neg(a_i) * m_0 = 1
        return PrefactorToken.exp_neg(params.a[i - 1]), Fraction(1)
    raise TypeError(f"unknown family {params!r}")


def mass_cancellation(params: FamilyParams, i: int, prefactor: PrefactorToken) -> Fraction:
    """Exact rational value of prefactor * m_0^{(i)}.

    This is the cancellation that lets the oracle compare mass-normalized
    type I components without ever evaluating a transcendental number.  The
    prefactor must pair with the family's mass token: same kind, same base,
    and (for pow tokens) an integer residual exponent.
    """
    token, mass_factor = weight_mass_token(params, i)
    if token.kind != prefactor.kind:
        raise ValueError(f"prefactor {prefactor.describe()} does not pair with mass "
                         f"token {token.describe()}")
    if token.kind == "one":
        return mass_factor
    if token.kind == "exp_neg":
        if token.base != prefactor.base:
            raise ValueError("exp_neg bases differ; no rational cancellation")
        return mass_factor
    # pow tokens: prefactor * m_0 = factor * (1-c)^{prefactor.exp - token.exp},
    # and that residual exponent must be an integer
    if token.c != prefactor.c:
        raise ValueError("pow token bases differ; no rational cancellation")
    residual = prefactor.exponent - token.exponent
    if residual.denominator != 1:
        raise ValueError(f"residual exponent {residual} is not an integer")
    return mass_factor * (1 - token.c) ** residual.numerator
