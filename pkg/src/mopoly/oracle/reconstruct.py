"""Ground-truth reconstruction from the defining orthogonality conditions.

Everything here is built from exact normalized moments and exact linear
algebra only; no closed-form polynomial expression enters.  The type I
components produced are mass-normalized, A_hat^{(i)} = m_0^{(i)} A^{(i)},
paired with normalized weights w_hat_i = w_i / m_0^{(i)}, which keeps every
quantity rational:

* oracle_type2: the unique monic B of degree |n| with
      sum_x x^j B(x) w_hat_i(x) = 0          for j < n_i, every i;
* oracle_type1: the p components A_hat^{(i)} of degree <= n_i - 1 with
      sum_i sum_x x^j A_hat^{(i)}(x) w_hat_i(x) = delta_{j, |n|-1}
                                              for j <= |n| - 1;
* oracle_nnrc: the recurrence coefficients as discrete integrals
      b0(k) = sum_x x B_n(x) A^(I)_{n+e_k}(x),
      b^j   = sum_x x B_n(x) A^(I)_{n-s_{j-1}}(x),
  expanded against moment tables (the mass factors cancel between A_hat and
  w_hat).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InvalidShiftError
from ..exact.indices import MultiIndex, Permutation, step_sets
from ..exact.polynomials import Poly
from ..families.params import FamilyParams
from ..families.recurrence import RecurrenceCoefficients, nnrc
from ..families.closed_forms import type2
from .linsolve import solve_exact
from .moments import MomentTable, normalized_moments


def _moment_tables(params: FamilyParams, jmax: int) -> list[MomentTable]:
    return [normalized_moments(params, i, jmax) for i in range(1, params.p + 1)]


def oracle_type2(params: FamilyParams, n: MultiIndex) -> Poly:
    """Monic degree-|n| solution of the type II orthogonality conditions."""
    n = MultiIndex.of(n)
    size = n.size
    if size == 0:
        return Poly.one()
    jmax = size + max(n.entries)  # highest moment index: (n_i - 1) + size, plus margin
    tables = _moment_tables(params, jmax)
    rows = []
    rhs = []
    for i in range(params.p):
        for j in range(n[i]):
            rows.append([tables[i][j + m] for m in range(size)])
            rhs.append(-tables[i][j + size])
    coeffs = solve_exact(rows, rhs)
    return Poly(coeffs + [Fraction(1)])


def oracle_type1(params: FamilyParams, n: MultiIndex) -> list[Poly]:
    """Mass-normalized type I components A_hat^{(i)} as exact polynomials."""
    n = MultiIndex.of(n)
    size = n.size
    if size == 0:
        raise ValueError("type I polynomials need |n| >= 1")
    jmax = size + max(n.entries)
    tables = _moment_tables(params, jmax)
    # unknown layout: coefficients of A_hat^{(i)} for every i with n_i >= 1
    slots = [(i, m) for i in range(params.p) for m in range(n[i])]
    rows = []
    rhs = []
    for j in range(size):
        rows.append([tables[i][j + m] for (i, m) in slots])
        rhs.append(Fraction(1) if j == size - 1 else Fraction(0))
    sol = solve_exact(rows, rhs)
    comps = []
    pos = 0
    for i in range(params.p):
        comps.append(Poly(sol[pos:pos + n[i]]))
        pos += n[i]
    return comps


def _type1_or_zero(params: FamilyParams, m: MultiIndex) -> list[Poly]:
    if m.size == 0:
        return [Poly.zero()] * params.p
    return oracle_type1(params, m)


def _pair_sum(params: FamilyParams, tables, poly_by_component) -> Fraction:
    """sum_i sum_x P_i(x) w_hat_i(x) via the moment tables."""
    total = Fraction(0)
    for i in range(params.p):
        total += tables[i].pair(poly_by_component[i].coeffs)
    return total


def oracle_nnrc(params: FamilyParams, n: MultiIndex,
                perm: Permutation | None = None,
                type1_fn=None) -> RecurrenceCoefficients:
    """Recurrence coefficients reconstructed from the discrete integrals.

    ``type1_fn(m) -> list[Poly]`` optionally supplies (cached) oracle type I
    components; by default they are solved on the fly.
    """
    n = MultiIndex.of(n)
    if perm is None:
        perm = Permutation.identity(params.p)
    if type1_fn is None:
        type1_fn = lambda m: oracle_type1(params, m)
    b = oracle_type2(params, n)
    xb = Poly.x() * b
    jmax = n.size + 1 + max(max(n.entries) + 1, 1)
    tables = _moment_tables(params, jmax)

    def components(m: MultiIndex):
        if m.size == 0:
            return [Poly.zero()] * params.p
        return type1_fn(m)

    b0 = []
    for k in range(1, params.p + 1):
        comps = components(n.add_unit(k))
        b0.append(_pair_sum(params, tables, [xb * a for a in comps]))

    bj = []
    for j in range(1, params.p + 1):
        s_prev, _, _ = step_sets(perm, j - 1)
        if not n.can_shift([-v for v in s_prev]):
            raise InvalidShiftError(
                f"n - s_{j-1} = {tuple(a - b for a, b in zip(n, s_prev))} leaves N_0^p")
        m = n.shifted([-v for v in s_prev])
        comps = components(m)
        bj.append(_pair_sum(params, tables, [xb * a for a in comps]))
    return RecurrenceCoefficients(tuple(b0), tuple(bj), perm)


@dataclass(frozen=True)
class BiorthogonalityReport:
    n: tuple
    m: tuple
    value: Fraction
    expected: Fraction | None   # None when the printed table does not constrain (n, m)

    @property
    def ok(self) -> bool:
        return self.expected is None or self.value == self.expected


def check_biorthogonality(params: FamilyParams, n: MultiIndex, m: MultiIndex) -> BiorthogonalityReport:
    """Evaluate sum_i sum_x B_n A_hat^{(i)}_m w_hat_i exactly against the 0/1/0 table."""
    n = MultiIndex.of(n)
    m = MultiIndex.of(m)
    if m.size == 0:
        raise ValueError("the pairing needs |m| >= 1")
    b = oracle_type2(params, n)
    comps = oracle_type1(params, m)
    jmax = n.size + max(m.entries)
    tables = _moment_tables(params, jmax)
    value = _pair_sum(params, tables, [b * a for a in comps])
    if all(mi <= ni for mi, ni in zip(m, n)):
        expected = Fraction(0)
    elif m.size == n.size + 1:
        expected = Fraction(1)
    elif m.size > n.size + 1:
        expected = Fraction(0)
    else:
        expected = None
    return BiorthogonalityReport(n.entries, m.entries, value, expected)


def check_recurrence_identity(params: FamilyParams, n: MultiIndex, perm: Permutation,
                              k: int, which: str = "typeII") -> bool:
    """Exact check of the nearest-neighbor recurrence as a polynomial identity.

    ``typeII`` verifies x B_n = B_{n+e_k} + b0_n(k) B_n + sum_j b^j_n B_{n-s_j}
    with closed-form coefficients and closed-form type II polynomials; a shift
    below zero is allowed only when its coefficient vanishes exactly (the term
    is then dropped), otherwise InvalidShiftError.

    ``typeI`` verifies, for every component i, the printed relation
    x A^{(i)}_n = A^{(i)}_{n-e_k} + b0_{n-e_k}(k) A^{(i)}_n
                  + sum_j b^j_{n+s_{j-1}} A^{(i)}_{n+s_j}
    on the oracle-built mass-normalized type I sequence (A at |m| = 0 is the
    zero component list).
    """
    n = MultiIndex.of(n)
    if which == "typeII":
        coeffs = nnrc(params, n, perm)
        residual = Poly.x() * type2(params, n) - type2(params, n.add_unit(k)) \
            - coeffs.b0[k - 1] * type2(params, n)
        for j in range(1, params.p + 1):
            s, _, _ = step_sets(perm, j)
            bjv = coeffs.bj[j - 1]
            if not n.can_shift([-v for v in s]):
                if bjv == 0:
                    continue
                raise InvalidShiftError(
                    f"n - s_{j} leaves N_0^p but its coefficient {bjv} is nonzero")
            residual = residual - bjv * type2(params, n.shifted([-v for v in s]))
        return residual.is_zero()

    if which == "typeI":
        if n[k - 1] < 1:
            raise InvalidShiftError(f"n - e_{k} leaves N_0^p")
        n_minus = n.sub_unit(k)
        a_n = oracle_type1(params, n)
        a_minus = _type1_or_zero(params, n_minus)
        b0_minus = nnrc(params, n_minus, perm).b0[k - 1]
        shifted_terms = []
        for j in range(1, params.p + 1):
            s_prev, _, _ = step_sets(perm, j - 1)
            s, _, _ = step_sets(perm, j)
            bjv = nnrc(params, n.shifted(s_prev), perm).bj[j - 1]
            shifted_terms.append((bjv, oracle_type1(params, n.shifted(s))))
        for i in range(params.p):
            residual = Poly.x() * a_n[i] - a_minus[i] - b0_minus * a_n[i]
            for bjv, comps in shifted_terms:
                residual = residual - bjv * comps[i]
            if not residual.is_zero():
                return False
        return True

    raise ValueError(f"unknown recurrence check {which!r}")
