"""Tuple-count series, the enumeration oracle, and the parity rule."""

import pytest

from tuplereg.series import Ring
from tuplereg.tuples import ORACLE_LIMIT, TuplePartitionSpec, t2_parity, t_oracle, t_series

Z = Ring.integers()
T23 = TuplePartitionSpec(2, 3)


class TestSpec:
    def test_parse(self):
        assert TuplePartitionSpec.parse("5,3") == TuplePartitionSpec(5, 3)

    def test_regularity_bound(self):
        with pytest.raises(ValueError):
            TuplePartitionSpec(1, 3)

    def test_tuple_length_bound(self):
        with pytest.raises(ValueError):
            TuplePartitionSpec(2, 0)


class TestSeries:
    def test_empty_tuple(self):
        assert t_series(T23, Z, 0).coeffs[0] == 1

    def test_single_unit(self):
        # the single part 1 sits in one of three components
        assert t_series(T23, Z, 1).coeffs[1] == 3

    def test_mod24_vanishing_start(self):
        s = t_series(T23, Ring.mod(24), 4)
        assert s.coeffs[4] == 0


class TestOracle:
    def test_empty(self):
        assert t_oracle(T23, 0) == 1

    def test_three_slots(self):
        assert t_oracle(TuplePartitionSpec(3, 3), 1) == 3

    def test_odd_parts_of_five(self):
        # 2-regular single partitions of 5: 5, 3+1+1, 1^5.  This pins the
        # meaning of regularity to "no part divisible by l", not
        # "parts repeat fewer than l times".
        assert t_oracle(TuplePartitionSpec(2, 1), 5) == 3

    def test_guard(self):
        with pytest.raises(ValueError, match="oracle guard"):
            t_oracle(T23, ORACLE_LIMIT + 1)

    @pytest.mark.parametrize(
        "spec",
        [
            TuplePartitionSpec(2, 3),
            TuplePartitionSpec(3, 3),
            TuplePartitionSpec(4, 3),
            TuplePartitionSpec(2, 2),
            TuplePartitionSpec(5, 3),
            TuplePartitionSpec(2, 1),
        ],
    )
    def test_series_matches_enumeration(self, spec):
        series = t_series(spec, Z, 20)
        for n in range(21):
            assert series.coeffs[n] == t_oracle(spec, n)

    def test_counts_are_positive(self):
        # the all-ones partition is l-regular for every l >= 2
        for ell in (2, 3, 5):
            for k in (1, 3):
                series = t_series(TuplePartitionSpec(ell, k), Z, 100)
                assert all(c >= 1 for c in series.coeffs)


class TestParity:
    def test_zero_is_odd(self):
        assert t2_parity(0) == "odd"

    def test_six_and_seven(self):
        assert t2_parity(6) == "odd"
        assert t2_parity(7) == "even"

    def test_matches_series_mod_two(self):
        series = t_series(T23, Ring.mod(2), 5000)
        for n, c in enumerate(series.coeffs):
            assert t2_parity(n) == ("odd" if c else "even")


class TestPrimeTupleCongruence:
    @pytest.mark.parametrize("ell,p", [(2, 3), (4, 3), (2, 5), (3, 5)])
    def test_t_ell_p_vanishes_off_multiples(self, ell, p):
        # T_{l,p}(pn + r) = 0 (mod p) for 1 <= r <= p-1
        n_max = 2000
        series = t_series(TuplePartitionSpec(ell, p), Ring.mod(p), p * n_max + p - 1)
        for r in range(1, p):
            lane = series.coeffs[r :: p][: n_max + 1]
            assert not any(lane)
