"""Direct tests of the packed convolution engine against naive loops."""

import random

import pytest

from tuplereg._convolve import conv, conv_mod


def naive(a, b, n_out):
    out = [0] * n_out
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n_out:
                out[i + j] += x * y
    return out


def test_empty_and_zero_inputs():
    assert conv([], [1, 2], 3) == [0, 0, 0]
    assert conv([0, 0], [1, 2], 2) == [0, 0]
    assert conv([1], [1], 0) == []
    assert conv_mod([], [1], 2, 7) == [0, 0]
    assert conv_mod([0], [0], 3, 7) == [0, 0, 0]


def test_output_longer_than_product():
    assert conv([1, 1], [1, 1], 6) == [1, 2, 1, 0, 0, 0]
    assert conv_mod([1, 1], [1, 1], 6, 2) == [1, 0, 1, 0, 0, 0]


@pytest.mark.parametrize("lo,hi", [(0, 1), (0, 255), (0, 65535), (0, 2**40)])
def test_nonnegative_slot_boundaries(lo, hi):
    # magnitudes chosen so the slot width crosses the 8/16/32/64-bit
    # fast-path boundaries and the generic wide path
    rng = random.Random(hi)
    a = [rng.randint(lo, hi) for _ in range(50)]
    b = [rng.randint(lo, hi) for _ in range(37)]
    assert conv(a, b, 60) == naive(a, b, 60)


def test_offset_path_one_signed_operand():
    rng = random.Random(1)
    for _ in range(30):
        a = [rng.randint(-9, 9) for _ in range(rng.randint(1, 50))]
        b = [rng.randint(0, 9) for _ in range(rng.randint(1, 50))]
        n_out = rng.randint(1, 80)
        assert conv(a, b, n_out) == naive(a, b, n_out)
        assert conv(b, a, n_out) == naive(b, a, n_out)


def test_split_path_both_signed():
    rng = random.Random(2)
    for _ in range(30):
        a = [rng.randint(-70, 70) for _ in range(rng.randint(1, 40))]
        b = [rng.randint(-70, 70) for _ in range(rng.randint(1, 40))]
        n_out = rng.randint(1, 60)
        assert conv(a, b, n_out) == naive(a, b, n_out)


def test_extreme_negative_values():
    a = [-(2**70), 2**70, -1]
    b = [1, -(2**65)]
    assert conv(a, b, 4) == naive(a, b, 4)


def test_conv_mod_matches_reduced_exact():
    rng = random.Random(3)
    for m in (2, 5, 24, 512, 2**40):
        a = [rng.randrange(m) for _ in range(40)]
        b = [rng.randrange(m) for _ in range(25)]
        exact = naive(a, b, 50)
        assert conv_mod(a, b, 50, m) == [c % m for c in exact]


def test_single_element_vectors():
    assert conv([7], [-3], 1) == [-21]
    assert conv_mod([3], [4], 2, 5) == [2, 0]
