"""Closed-form type II and type I polynomials for all five families.

Type II polynomials are monic of degree |n| and come in two printed shapes:

* ``coefficient_sum``: a finite multiple sum of shifted factorials (-x)_L
  with explicit Pochhammer-product coefficients (all families);
* ``weighted_pfq``: a pointwise weighted pFq expression (Hahn and Meixner
  second kind only), materialized as a polynomial by exact Lagrange
  interpolation through the integer nodes 0..|n|.

Type I polynomials A^{(i)} have degree <= n_i - 1 and carry a transcendental
prefactor token for the infinite-support families; the rational part is built
exactly from the terminating multiple sums.  A component with n_i = 0 is the
zero polynomial by convention (it has no degrees of freedom).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegreeExceedsSupportError, OutOfSupportError, UnsupportedRepresentationError
from ..exact.combinatorics import factorial, pochhammer
from ..exact.hypergeometric import eval_pfq_terminating
from ..exact.identities import hahn_sum_coefficient
from ..exact.indices import MultiIndex
from ..exact.polynomials import Poly, expand_in_monomials, lagrange_interpolate
from .params import Charlier, FamilyParams, Hahn, Kravchuk, MeixnerI, MeixnerII
from .prefactors import PrefactoredPolynomial, PrefactorToken
from .weights import weight


def _check_degree(params: FamilyParams, size: int, slack: int = 0):
    if params.finite_support and size > params.N + slack:
        raise DegreeExceedsSupportError(
            f"|n| = {size} exceeds the finite support bound N{'+1' if slack else ''} "
            f"= {params.N + slack}")


def type2(params: FamilyParams, n: MultiIndex, representation: str = "coefficient_sum") -> Poly:
    """Monic type II polynomial of degree exactly |n|."""
    n = MultiIndex.of(n)
    if n.p != params.p:
        raise ValueError(f"multi-index length {n.p} != number of weights {params.p}")
    _check_degree(params, n.size)
    if representation == "coefficient_sum":
        return _type2_coefficient_sum(params, n)
    if representation == "weighted_pfq":
        return _type2_weighted_pfq(params, n)
    raise UnsupportedRepresentationError(f"unknown type II representation {representation!r}")


def _type2_coefficient_sum(params: FamilyParams, n: MultiIndex) -> Poly:
    terms = []
    ranges = [range(ni + 1) for ni in n]
    if isinstance(params, Hahn):
        for l in itertools.product(*ranges):
            coeff = hahn_sum_coefficient(params.alpha, params.beta, params.N, n.entries, l)
            terms.append((coeff, ("neg_x", sum(l))))
        return expand_in_monomials(terms)

    if isinstance(params, MeixnerII):
        c, beta = params.c, params.beta
        pref = (c / (c - 1)) ** n.size
        for b, ni in zip(beta, n):
            pref *= pochhammer(b, ni)
        for l in itertools.product(*ranges):
            L = sum(l)
            coeff = pref * ((c - 1) / c) ** L
            for i in range(params.p):
                coeff *= pochhammer(-n[i], l[i]) / factorial(l[i])
                coeff /= pochhammer(beta[i], sum(l[i:]))
                if i < params.p - 1:
                    coeff *= pochhammer(beta[i] + n[i], sum(l[i + 1:]))
            terms.append((coeff, ("neg_x", L)))
        return expand_in_monomials(terms)

    if isinstance(params, MeixnerI):
        beta, cs = params.beta0, params.c
        pref = pochhammer(beta, n.size)
        for ci, ni in zip(cs, n):
            pref *= (ci / (ci - 1)) ** ni
        for l in itertools.product(*ranges):
            L = sum(l)
            coeff = pref / pochhammer(beta, L)
            for i in range(params.p):
                coeff *= (pochhammer(-n[i], l[i]) / factorial(l[i])
                          * ((cs[i] - 1) / cs[i]) ** l[i])
            terms.append((coeff, ("neg_x", L)))
        return expand_in_monomials(terms)

    if isinstance(params, Kravchuk):
        ps, N = params.p_success, params.N
        pref = pochhammer(-N, n.size)
        for q, ni in zip(ps, n):
            pref *= q**ni
        for l in itertools.product(*ranges):
            L = sum(l)
            coeff = pref / pochhammer(-N, L)
            for i in range(params.p):
                coeff *= (pochhammer(-n[i], l[i]) / factorial(l[i])
                          * Fraction(1, 1) / ps[i] ** l[i])
            terms.append((coeff, ("neg_x", L)))
        return expand_in_monomials(terms)

    if isinstance(params, Charlier):
        a = params.a
        pref = Fraction(1)
        for ai, ni in zip(a, n):
            pref *= (-ai) ** ni
        for l in itertools.product(*ranges):
            L = sum(l)
            coeff = pref
            for i in range(params.p):
                coeff *= (pochhammer(-n[i], l[i]) / factorial(l[i])
                          * (Fraction(-1) / a[i]) ** l[i])
            terms.append((coeff, ("neg_x", L)))
        return expand_in_monomials(terms)

    raise TypeError(f"unknown family {params!r}")


def _type2_weighted_pfq(params: FamilyParams, n: MultiIndex) -> Poly:
    """Pointwise weighted-pFq representation, interpolated through 0..|n|."""
    size = n.size
    if isinstance(params, Hahn):
        alpha, beta, N = params.alpha, params.beta, params.N

        def value_at(x: int) -> Fraction:
            pref = Fraction(-1) ** size
            pref *= Fraction(factorial(N - x), factorial(N - size))
            pref *= pochhammer(beta + N - x + 1, x)
            upper = [-size - beta, Fraction(-x)]
            lower = [-N - beta]
            for ai, ni in zip(alpha, n):
                pref *= pochhammer(ai + 1, ni) / pochhammer(ai + beta + size + 1, ni)
                upper.append(ai + ni + 1)
                lower.append(ai + 1)
            return pref * eval_pfq_terminating(upper, lower, 1)

        return lagrange_interpolate([(x, value_at(x)) for x in range(size + 1)])

    if isinstance(params, MeixnerII):
        beta, c = params.beta, params.c
        pref0 = (c / (c - 1)) ** size
        for b, ni in zip(beta, n):
            pref0 *= pochhammer(b, ni)

        def value_at(x: int) -> Fraction:
            upper = [Fraction(-x)] + [b + ni for b, ni in zip(beta, n)]
            lower = list(beta)
            return pref0 / c**x * eval_pfq_terminating(upper, lower, 1 - c)

        return lagrange_interpolate([(x, value_at(x)) for x in range(size + 1)])

    raise UnsupportedRepresentationError(
        f"weighted_pfq representation exists only for hahn and meixner2, not {params.family}")


def _multi_sum_terms(bound: int, n_other, global_upper, global_lower,
                     x_arg: Fraction, other_args, basis_maker):
    """Terms of the generic type I multiple sum.

    sum over l = (l_x, l_2, ..., l_p), |l| <= bound, of

      (gu)_{|l|} / (gl)_{|l|} * x_arg^{l_x} / l_x! * basis(l_x)
      * prod_q (n_q)_{l_q} arg_q^{l_q} / l_q!

    yielding (coefficient, basis_spec) pairs for expand_in_monomials.
    """
    m = len(n_other)
    terms = []
    space = [range(bound + 1)] * (m + 1)
    for l in itertools.product(*space):
        L = sum(l)
        if L > bound:
            continue
        coeff = Fraction(1)
        for g in global_upper:
            coeff *= pochhammer(g, L)
        if coeff == 0:
            continue
        for g in global_lower:
            coeff /= pochhammer(g, L)
        coeff *= x_arg ** l[0] / factorial(l[0])
        for q in range(m):
            coeff *= (pochhammer(n_other[q], l[q + 1]) * other_args[q] ** l[q + 1]
                      / factorial(l[q + 1]))
        terms.append((coeff, basis_maker(l[0])))
    return terms


def type1(params: FamilyParams, n: MultiIndex, i: int) -> PrefactoredPolynomial:
    """Type I polynomial A^{(i)}, a prefactor token times a rational polynomial.

    The rational part has degree <= n_i - 1; n_i = 0 gives the zero polynomial
    with prefactor one.  Formulas are implemented exactly as printed; the
    oracle module adjudicates the two prefactor variants (see
    ``mopoly.oracle.adjudicate``).
    """
    n = MultiIndex.of(n)
    if n.p != params.p:
        raise ValueError(f"multi-index length {n.p} != number of weights {params.p}")
    if not 1 <= i <= params.p:
        raise ValueError(f"component i = {i} out of range 1..{params.p}")
    _check_degree(params, n.size, slack=1)
    ni = n[i - 1]
    if ni == 0:
        return PrefactoredPolynomial(PrefactorToken.one(), Poly.zero())
    size = n.size

    if isinstance(params, Hahn):
        alpha, beta, N = params.alpha, params.beta, params.N
        ai = alpha[i - 1]
        g = (Fraction(-1) ** (size - 1) * factorial(N + 1 - size)
             / (factorial(ni - 1) * pochhammer(beta + 1, size - 1)
                * pochhammer(ai + beta + size, N + 2 - size)))
        for k in range(params.p):
            g *= pochhammer(alpha[k] + beta + size, n[k])
            if k != i - 1:
                g /= pochhammer(alpha[k] - ai, n[k])
        terms = []
        for l in range(ni):
            coeff = (g * pochhammer(-ni + 1, l) * pochhammer(ai + beta + size, l)
                     / (factorial(l) * pochhammer(ai + 1, l)
                        * pochhammer(ai + beta + N + 2, l)))
            for k in range(params.p):
                if k != i - 1:
                    coeff *= (pochhammer(ai - alpha[k] - n[k] + 1, l)
                              / pochhammer(ai - alpha[k] + 1, l))
            terms.append((coeff, ("shifted", ai + 1, l)))
        return PrefactoredPolynomial(PrefactorToken.one(), expand_in_monomials(terms))

    if isinstance(params, MeixnerII):
        beta, c = params.beta, params.c
        bi = beta[i - 1]
        g = Fraction(-1) ** (size - 1) / (c ** (size - 1) * factorial(ni - 1))
        for k in range(params.p):
            if k != i - 1:
                g /= pochhammer(beta[k] - bi, n[k])
        terms = []
        for l in range(ni):
            coeff = (g * pochhammer(-ni + 1, l) * (1 - c) ** l
                     / (factorial(l) * pochhammer(bi, l)))
            for k in range(params.p):
                if k != i - 1:
                    coeff *= (pochhammer(bi + 1 - beta[k] - n[k], l)
                              / pochhammer(bi + 1 - beta[k], l))
            terms.append((coeff, ("shifted", bi, l)))
        token = PrefactorToken.pow_one_minus_c(c, bi + size - 1)
        return PrefactoredPolynomial(token, expand_in_monomials(terms))

    if isinstance(params, MeixnerI):
        beta, cs = params.beta0, params.c
        ci = cs[i - 1]
        g = (Fraction(-1) ** (ni - 1)
             / (factorial(ni - 1) * pochhammer(beta, size - ni) * ci ** (ni - 1)))
        others = []
        other_args = []
        for q in range(params.p):
            if q != i - 1:
                g *= ((1 - cs[q]) / (ci - cs[q])) ** n[q]
                others.append(Fraction(n[q]))
                other_args.append((1 - ci) * cs[q] / (cs[q] - ci))
        terms = _multi_sum_terms(
            ni - 1, others, [Fraction(-ni + 1)], [beta + size - ni],
            1 - ci, other_args, lambda l: ("shifted", beta, l))
        poly = expand_in_monomials([(g * c, spec) for c, spec in terms])
        token = PrefactorToken.pow_one_minus_ci(i, ci, beta + size - 1)
        return PrefactoredPolynomial(token, poly)

    if isinstance(params, Kravchuk):
        ps, N = params.p_success, params.N
        qi = ps[i - 1]
        g = (Fraction(-1) ** (ni - 1)
             / (factorial(ni - 1) * pochhammer(-N, size - ni) * (1 - qi) ** (ni - 1)))
        others = []
        other_args = []
        for q in range(params.p):
            if q != i - 1:
                g /= (ps[q] - qi) ** n[q]
                others.append(Fraction(n[q]))
                other_args.append((1 - ps[q]) / (qi - ps[q]))
        terms = _multi_sum_terms(
            ni - 1, others, [Fraction(-ni + 1)], [Fraction(-N + size - ni)],
            1 / qi, other_args, lambda l: ("neg_x", l))
        poly = expand_in_monomials([(g * c, spec) for c, spec in terms])
        return PrefactoredPolynomial(PrefactorToken.one(), poly)

    if isinstance(params, Charlier):
        a = params.a
        ai = a[i - 1]
        g = Fraction(-1) ** (ni - 1) / factorial(ni - 1)
        others = []
        other_args = []
        for q in range(params.p):
            if q != i - 1:
                g /= (ai - a[q]) ** n[q]
                others.append(Fraction(n[q]))
                other_args.append(1 / (a[q] - ai))
        terms = _multi_sum_terms(
            ni - 1, others, [Fraction(-ni + 1)], [],
            Fraction(-1) / ai, other_args, lambda l: ("neg_x", l))
        poly = expand_in_monomials([(g * c, spec) for c, spec in terms])
        return PrefactoredPolynomial(PrefactorToken.exp_neg(ai), poly)

    raise TypeError(f"unknown family {params!r}")


def type1_meixner1_alt(params: MeixnerI, n: MultiIndex, i: int) -> PrefactoredPolynomial:
    """Alternative hypergeometric form of the first-kind Meixner type I polynomial."""
    n = MultiIndex.of(n)
    ni = n[i - 1]
    if ni == 0:
        return PrefactoredPolynomial(PrefactorToken.one(), Poly.zero())
    beta, cs = params.beta0, params.c
    ci = cs[i - 1]
    size = n.size
    g = Fraction(-1) ** (ni - 1) / (factorial(ni - 1) * pochhammer(beta, size - ni))
    others = []
    other_args = []
    for q in range(params.p):
        if q != i - 1:
            g *= ((1 - cs[q]) / (ci - cs[q])) ** n[q]
            others.append(Fraction(n[q]))
            other_args.append((ci - 1) / (ci - cs[q]))
    terms = _multi_sum_terms(
        ni - 1, others, [Fraction(-ni + 1)], [beta + size - ni],
        (ci - 1) / ci, other_args, lambda l: ("neg_x", l))
    poly = expand_in_monomials([(g * c, spec) for c, spec in terms])
    token = PrefactorToken.pow_one_minus_ci(i, ci, beta + size - 1)
    return PrefactoredPolynomial(token, poly)


def type1_alt_equivalence(params: MeixnerI, n: MultiIndex, i: int) -> bool:
    """True iff the two printed first-kind Meixner type I forms agree exactly."""
    a = type1(params, n, i)
    b = type1_meixner1_alt(params, n, i)
    return a.prefactor == b.prefactor and a.rational_part == b.rational_part


@dataclass(frozen=True)
class LinearFormValue:
    """Type I linear form value A^(I)(x) = sum_i A^{(i)}(x) w_i(x).

    ``components`` holds the exact per-component pairs (token, rational value)
    with A^{(i)}(x) w_i(x) = token.value() * rational value.  ``exact`` is the
    rational total when every token is one (finite-support families), else
    None; ``value`` is always the float total.
    """

    components: tuple
    exact: Fraction | None
    value: float


def linear_form(params: FamilyParams, n: MultiIndex, x: int) -> LinearFormValue:
    n = MultiIndex.of(n)
    if x < 0 or (params.finite_support and x > params.N):
        raise OutOfSupportError(f"x = {x} outside the support")
    comps = []
    for i in range(1, params.p + 1):
        a = type1(params, n, i)
        comps.append((a.prefactor, a.rational_part(Fraction(x)) * weight(params, i, x)))
    if all(tok.kind == "one" for tok, _ in comps):
        exact = sum((v for _, v in comps), Fraction(0))
        return LinearFormValue(tuple(comps), exact, float(exact))
    total = sum(tok.value() * float(v) for tok, v in comps)
    return LinearFormValue(tuple(comps), None, total)
