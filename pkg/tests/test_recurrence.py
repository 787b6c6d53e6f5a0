import random
from fractions import Fraction as F

import pytest

from mopoly.errors import SingularDenominatorError
from mopoly.exact import MultiIndex, all_permutations
from mopoly.families import Charlier, Hahn, Kravchuk, MeixnerI, MeixnerII, nnrc
from mopoly.sampling import draw_params


def test_charlier_plug_in_values():
    assert nnrc(Charlier((2,)), (3,)).b0 == (5,)
    coeffs = nnrc(Charlier((1, 3)), (1, 1))
    assert coeffs.b0 == (1 + 2, 3 + 2)
    assert coeffs.bj == (4, 6)      # b1 = 1*1 + 1*3, b2 = 1*3*(3-1)


def test_kravchuk_plug_in_values():
    coeffs = nnrc(Kravchuk((F(1, 2),), 3), (1,))
    assert coeffs.b0 == (F(3, 2),)  # (3-1)/2 + 1/2
    assert coeffs.bj == (F(3, 4),)  # 3 * (1/4)


def test_classical_three_term_meixner():
    # monic Meixner: b_n = (n + (n+beta) c)/(1-c), c_n = n (n+beta-1) c/(1-c)^2
    beta, c = F(5, 7), F(2, 5)
    params = MeixnerI(beta, (c,))
    for n in range(0, 5):
        coeffs = nnrc(params, (n,))
        assert coeffs.b0[0] == (n + (n + beta) * c) / (1 - c)
        assert coeffs.bj[0] == n * (n + beta - 1) * c / (1 - c) ** 2
    # the second-kind family with one weight is the same object
    params2 = MeixnerII((beta,), c)
    for n in range(0, 5):
        assert nnrc(params2, (n,)).b0 == nnrc(params, (n,)).b0
        assert nnrc(params2, (n,)).bj == nnrc(params, (n,)).bj


def test_classical_three_term_charlier_kravchuk():
    a = F(7, 3)
    for n in range(0, 5):
        coeffs = nnrc(Charlier((a,)), (n,))
        assert coeffs.b0[0] == n + a
        assert coeffs.bj[0] == n * a
    q, N = F(2, 7), 9
    for n in range(0, 5):
        coeffs = nnrc(Kravchuk((q,), N), (n,))
        assert coeffs.b0[0] == (N - n) * q + n * (1 - q)
        assert coeffs.bj[0] == n * q * (1 - q) * (N - n + 1)


def test_classical_three_term_hahn():
    # monic Hahn: b_n = A_n + C_n, c_n = A_{n-1} C_n with the textbook
    # A_n = (n+a+b+1)(n+a+1)(N-n) / ((2n+a+b+1)(2n+a+b+2))
    # C_n = n(n+a+b+N+1)(n+b) / ((2n+a+b)(2n+a+b+1))
    a, b, N = F(3, 7), F(2, 5), 8
    params = Hahn((a,), b, N)

    def A(n):
        return F((n + a + b + 1) * (n + a + 1) * (N - n),
                 1) / ((2 * n + a + b + 1) * (2 * n + a + b + 2))

    def C(n):
        return F(n * (n + a + b + N + 1) * (n + b), 1) / ((2 * n + a + b) * (2 * n + a + b + 1))

    for n in range(0, 6):
        coeffs = nnrc(params, (n,))
        assert coeffs.b0[0] == A(n) + C(n)
        assert coeffs.bj[0] == A(n - 1) * C(n) if n >= 1 else coeffs.bj[0] == 0


def test_b0_permutation_independent():
    rng = random.Random(31)
    for family in ("hahn", "meixner2", "meixner1", "kravchuk", "charlier"):
        params = draw_params(rng, family, 3, 3)
        for n in [(1, 0, 2), (1, 1, 1), (2, 1, 0)]:
            n = MultiIndex.of(n)
            b0s = {nnrc(params, n, perm).b0 for perm in all_permutations(3)}
            assert len(b0s) == 1


def test_singular_denominator_reported():
    # at n = 0 the Hahn b0 correction sum hits (alpha+beta+|n|)_2 = 0 when
    # alpha + beta = -1, before its vanishing numerator can rescue it
    params = Hahn((F(-1, 4),), F(-3, 4), 3)
    with pytest.raises(SingularDenominatorError):
        nnrc(params, (0,))
