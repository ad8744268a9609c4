"""Primality, symbols, valuations, and quadratic-form representations."""

import random

import pytest

from tuplereg.numtheory import (
    Form,
    factorize,
    inv_mod,
    is_prime,
    is_triangular,
    legendre,
    nu_p,
    represent,
    residue_of_family_offset,
)


def primes_up_to(n):
    sieve = [True] * (n + 1)
    sieve[0] = sieve[1] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            for j in range(i * i, n + 1, i):
                sieve[j] = False
    return [i for i, ok in enumerate(sieve) if ok]


class TestIsPrime:
    def test_against_sieve(self):
        sieve = set(primes_up_to(2000))
        for n in range(2000):
            assert is_prime(n) == (n in sieve)

    def test_large_values(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**62 + 1)


class TestLegendre:
    def test_minus_two_mod_five(self):
        assert legendre(-2, 5) == -1

    def test_zero(self):
        assert legendre(0, 7) == 0

    def test_minus_one_mod_seven(self):
        assert legendre(-1, 7) == -1

    def test_not_odd_prime(self):
        with pytest.raises(ValueError):
            legendre(3, 2)
        with pytest.raises(ValueError):
            legendre(3, 15)

    def test_minus_two_character_by_residue_class(self):
        # (-2/p) = -1 exactly for p = 5, 7 (mod 8)
        for p in primes_up_to(100):
            if p == 2:
                continue
            expected = -1 if p % 8 in (5, 7) else 1
            assert legendre(-2, p) == expected

    def test_euler_criterion_against_square_table(self):
        for p in (13, 29, 97):
            squares = {x * x % p for x in range(1, p)}
            for a in range(1, p):
                assert legendre(a, p) == (1 if a in squares else -1)


class TestNuP:
    def test_24(self):
        assert nu_p(24, 2) == 3

    def test_195(self):
        # 24*8 + 3 = 195 = 3 * 5 * 13 has odd 5-adic valuation
        assert nu_p(195, 5) == 1

    def test_one(self):
        assert nu_p(1, 7) == 0

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            nu_p(0, 3)


class TestInvMod:
    def test_eight_mod_nine(self):
        assert inv_mod(8, 9) == 8

    def test_one(self):
        assert inv_mod(1, 97) == 1

    def test_eight_mod_three(self):
        assert inv_mod(8, 3) == 2

    def test_not_coprime(self):
        with pytest.raises(ValueError, match="gcd = 4"):
            inv_mod(4, 12)


class TestIsTriangular:
    def test_ten(self):
        assert is_triangular(10) == 4

    def test_eleven(self):
        assert is_triangular(11) is None

    def test_big(self):
        assert is_triangular(5050) == 100

    def test_exhaustive_small(self):
        triangles = {m * (m + 1) // 2: m for m in range(200)}
        for n in range(max(triangles) + 1):
            assert is_triangular(n) == triangles.get(n)


class TestRepresent:
    def test_three(self):
        assert represent(3, Form.X2_PLUS_2Y2).solutions == ((1, 1),)

    def test_one_sum_of_squares(self):
        assert represent(1, Form.X2_PLUS_Y2).solutions == ((0, 1), (1, 0))

    def test_195_not_representable(self):
        assert represent(195, Form.X2_PLUS_2Y2).solutions == ()

    def test_solutions_satisfy_form(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randrange(0, 5000)
            form = rng.choice([Form.X2_PLUS_2Y2, Form.X2_PLUS_Y2])
            rep = represent(n, form)
            for x, y in rep.solutions:
                assert x >= 0 and y >= 0
                assert x * x + form.y_coefficient * y * y == n

    def test_completeness_against_direct_search(self):
        for n in range(200):
            direct = tuple(
                (x, y)
                for x in range(n + 1)
                for y in range(n + 1)
                if x * x + 2 * y * y == n
            )
            assert represent(n, Form.X2_PLUS_2Y2).solutions == direct


class TestFamilyOffsetResidue:
    def test_base_cases(self):
        assert residue_of_family_offset(33, 1) == 4
        assert residue_of_family_offset(57, 1) == 7

    def test_large_t(self):
        assert residue_of_family_offset(57, 35) == 7

    def test_constant_over_valid_t(self):
        rng = random.Random(9)
        seen = 0
        while seen < 200:
            t = rng.randrange(1, 10**6)
            if t % 2 == 0 or t % 3 == 0:
                continue
            seen += 1
            assert residue_of_family_offset(33, t) == 4
            assert residue_of_family_offset(57, t) == 7

    def test_bad_t(self):
        with pytest.raises(ValueError, match="coprime"):
            residue_of_family_offset(33, 4)

    def test_bad_n(self):
        with pytest.raises(ValueError):
            residue_of_family_offset(34, 1)


class TestValuationObstructions:
    def test_odd_valuation_blocks_x2_plus_2y2(self):
        # if nu_p(N) is odd for some p with (-2/p) = -1 then N != x^2 + 2y^2
        bad_primes = {p for p in primes_up_to(20000) if p % 8 in (5, 7)}
        for n in range(1, 20001):
            if any(p in bad_primes and e % 2 for p, e in factorize(n).items()):
                assert not represent(n, Form.X2_PLUS_2Y2).representable, n

    def test_odd_valuation_blocks_sum_of_squares(self):
        bad_primes = {p for p in primes_up_to(20000) if p % 4 == 3}
        for n in range(1, 20001):
            if any(p in bad_primes and e % 2 for p, e in factorize(n).items()):
                assert not represent(n, Form.X2_PLUS_Y2).representable, n


class TestFactorize:
    def test_small(self):
        assert factorize(24) == {2: 3, 3: 1}
        assert factorize(1) == {}
        assert factorize(195) == {3: 1, 5: 1, 13: 1}

    def test_reconstruction(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(1, 10**6)
            prod = 1
            for p, e in factorize(n).items():
                assert is_prime(p)
                prod *= p**e
            assert prod == n
