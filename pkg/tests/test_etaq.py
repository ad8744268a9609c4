"""Pochhammer expansions, eta quotients, and the closed-form identities."""

import pytest

from tuplereg.etaq import (
    EtaQuotientSpec,
    eta_quotient,
    identity_suite,
    neg_q_pochhammer,
    pochhammer,
    pochhammer_product,
    theta_cube,
    theta_sextic,
    theta_square,
)
from tuplereg.series import Ring, make_series

Z = Ring.integers()


class TestEtaQuotientSpec:
    def test_duplicates_merge(self):
        spec = EtaQuotientSpec(((1, 2), (2, 3), (1, -2)))
        assert spec.factors == ((2, 3),)

    def test_zero_exponents_drop(self):
        assert EtaQuotientSpec(((3, 0),)).factors == ()

    def test_parse_round_trip(self):
        spec = EtaQuotientSpec.parse("2:3,1:-3")
        assert spec.factors == ((1, -3), (2, 3))
        assert EtaQuotientSpec.parse(str(spec)) == spec

    def test_empty_is_constant_one(self):
        assert EtaQuotientSpec.parse("").factors == ()

    def test_bad_subscript(self):
        with pytest.raises(ValueError):
            EtaQuotientSpec(((0, 1),))


class TestPochhammer:
    def test_pentagonal_support_to_seven(self):
        assert pochhammer(1, Z, 7).coeffs == [1, -1, -1, 0, 0, 1, 0, 1]

    def test_order_zero(self):
        assert pochhammer(1, Z, 0).coeffs == [1]

    def test_subscript_two_matches_dilation(self):
        assert pochhammer(2, Z, 4).coeffs == [1, 0, -1, 0, -1]
        assert pochhammer(2, Z, 4) == pochhammer(1, Z, 4).dilate(2)

    @pytest.mark.parametrize("k", [1, 2, 4])
    @pytest.mark.parametrize("ring", [Z, Ring.mod(24)])
    def test_theta_path_equals_product_path(self, k, ring):
        n = 500
        assert pochhammer(k, ring, n) == pochhammer_product(k, ring, n)


class TestEtaQuotient:
    def test_parity_reduction_of_cube(self):
        # f2^3 / f1^3 = f1^3 (mod 2), via f1^4 = f2^2 style collapsing
        n = 500
        ring = Ring.mod(2)
        lhs = eta_quotient(EtaQuotientSpec(((2, 3), (1, -3))), ring, n)
        assert lhs == pochhammer(1, ring, n).pow(3)

    def test_empty_spec(self):
        s = eta_quotient(EtaQuotientSpec(()), Z, 5)
        assert s.coeffs == [1, 0, 0, 0, 0, 0]

    def test_sextic_quotient(self):
        n = 2000
        lhs = eta_quotient(EtaQuotientSpec(((1, 5), (2, -2))), Z, n)
        assert lhs == theta_sextic(Z, n)

    def test_pure_denominator(self):
        # 1/f1 is the partition generating function
        s = eta_quotient(EtaQuotientSpec(((1, -1),)), Z, 9)
        assert s.coeffs == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


class TestClosedForms:
    def test_cube_small_values(self):
        assert theta_cube(Z, 6).coeffs == [1, -3, 0, 5, 0, 0, -7]

    def test_cube_vs_product_oracle(self):
        n = 5000
        assert theta_cube(Z, n) == pochhammer(1, Z, n).pow(3)

    def test_cube_constant_term(self):
        assert theta_cube(Z, 0).coeffs == [1]

    def test_sextic_small_values(self):
        s = theta_sextic(Z, 7)
        assert s.coeffs == [1, -5, 7, 0, 0, -11, 0, 13]

    def test_sextic_vs_quotient_oracle(self):
        n = 5000
        assert theta_sextic(Z, n) == eta_quotient(EtaQuotientSpec(((1, 5), (2, -2))), Z, n)

    def test_sextic_support_is_generalized_pentagonal(self):
        n = 300
        support = set()
        m = 0
        while m * (3 * m + 1) // 2 <= n or m * (3 * m - 1) // 2 <= n:
            for e in (m * (3 * m + 1) // 2, m * (3 * m - 1) // 2):
                if e <= n:
                    support.add(e)
            m += 1
        s = theta_sextic(Z, n)
        for i, c in enumerate(s.coeffs):
            if i not in support:
                assert c == 0

    def test_square_small_values(self):
        assert theta_square(Z, 9).coeffs == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]

    def test_square_vs_quotient_oracle(self):
        n = 5000
        assert theta_square(Z, n) == eta_quotient(EtaQuotientSpec(((1, 2), (2, -1))), Z, n)

    def test_square_dilated_matches_even_quotient(self):
        n = 2000
        lhs = theta_square(Z, n).dilate(2)
        assert lhs == eta_quotient(EtaQuotientSpec(((2, 2), (4, -1))), Z, n)

    def test_negq_matches_sign_flip(self):
        n = 5000
        assert neg_q_pochhammer(Z, n) == pochhammer(1, Z, n).negate_q()

    def test_negq_constant_term(self):
        assert neg_q_pochhammer(Z, 0).coeffs == [1]

    def test_negq_linear_term_by_hand(self):
        # (1+q)(1-q^2)(1+q^3)... = 1 + q + O(q^2): multiply the first few
        # binomials with a tiny reference convolution
        acc = [1, 0]
        for i in range(1, 4):
            binom = [0] * (i + 1)
            binom[0] = 1
            binom[i] = 1 if i % 2 else -1
            nxt = [0, 0]
            for a in range(2):
                for b in range(min(2 - a, i + 1)):
                    nxt[a + b] += acc[a] * binom[b]
            acc = nxt
        assert acc[1] == 1
        assert neg_q_pochhammer(Z, 1).coeffs == acc


def test_partition_numbers_against_sympy():
    # cross-validation against an unrelated implementation (Rademacher
    # formula); skipped when sympy is not installed
    sympy = pytest.importorskip("sympy")
    inv_f1 = eta_quotient(EtaQuotientSpec(((1, -1),)), Z, 3000)
    for n in (50, 720, 1500, 3000):
        assert inv_f1.coeffs[n] == int(sympy.functions.combinatorial.numbers.partition(n))


class TestIdentitySuite:
    @pytest.mark.parametrize("ring", [Z, Ring.mod(24)])
    def test_all_pass_at_moderate_order(self, ring):
        results = identity_suite(ring, 1000)
        assert len(results) == 6
        assert all(ok for _, ok in results)

    def test_order_zero(self):
        assert all(ok for _, ok in identity_suite(Z, 0))


class TestPowerCongruences:
    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("k", [1, 2])
    @pytest.mark.parametrize("l", [1, 2])
    def test_pochhammer_power_collapse(self, p, k, l):
        # f_l^(p^k) = f_(l p)^(p^(k-1)) mod p^k
        n = 1000
        ring = Ring.mod(p**k)
        lhs = pochhammer(l, ring, n).pow(p**k)
        rhs = pochhammer(l * p, ring, n).pow(p ** (k - 1))
        assert lhs == rhs

    @pytest.mark.parametrize("p,k,s,m,l", [
        (2, 2, 1, 1, 1),
        (2, 2, 2, 1, 1),
        (2, 2, 1, 2, 2),
        (3, 2, 1, 1, 1),
        (3, 2, 2, 1, 2),
        (3, 3, 2, 1, 1),
        (5, 2, 1, 1, 1),
    ])
    def test_pochhammer_power_collapse_general(self, p, k, s, m, l):
        # f_l^(p^k m) = f_(l p^s)^(p^(k-s) m) mod p^(k-s+1)
        n = 500
        ring = Ring.mod(p ** (k - s + 1))
        lhs = pochhammer(l, ring, n).pow(p**k * m)
        rhs = pochhammer(l * p**s, ring, n).pow(p ** (k - s) * m)
        assert lhs == rhs
