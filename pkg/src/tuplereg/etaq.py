"""Expansions of q-Pochhammer factors f_k = (q^k; q^k)_infinity, eta
quotients prod f_k^e, and the classical theta-style closed forms

    f1          = sum_{m in Z} (-1)^m q^{m(3m-1)/2}          (pentagonal)
    f1^3        = sum_{m >= 0} (-1)^m (2m+1) q^{m(m+1)/2}
    f1^5/f2^2   = sum_{m in Z} (6m+1) q^{m(3m+1)/2}
    (-q;-q)_inf = f2^3 / (f1 f4)
    f1^2/f2     = 1 + 2 sum_{n >= 1} (-1)^n q^{n^2}
    f2^2/f4     = 1 + 2 sum_{n >= 1} (-1)^n q^{2n^2}

Each closed form is computable two independent ways, as a sparse theta
sum and as a product or quotient of Pochhammer factors; the identity
suite checks the two constructions against each other coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _convolve
from .series import Ring, TruncatedSeries, constant_one


@dataclass(frozen=True)
class EtaQuotientSpec:
    """A finite product prod f_{k_i}^{e_i} with integer exponents."""

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        merged: dict[int, int] = {}
        for k, e in self.factors:
            if k < 1:
                raise ValueError(f"Pochhammer subscript must be >= 1, got {k}")
            merged[k] = merged.get(k, 0) + e
        normal = tuple(sorted((k, e) for k, e in merged.items() if e != 0))
        object.__setattr__(self, "factors", normal)

    @classmethod
    def parse(cls, text: str) -> "EtaQuotientSpec":
        """Parse 'k:e,k:e,...' (empty string is the constant series 1)."""
        text = text.strip()
        if not text:
            return cls(())
        factors = []
        for part in text.split(","):
            k, _, e = part.partition(":")
            factors.append((int(k), int(e)))
        return cls(tuple(factors))

    def __str__(self) -> str:
        return ",".join(f"{k}:{e}" for k, e in self.factors)


def _generalized_pentagonal(limit: int):
    """Yield (exponent m(3m-1)/2, sign (-1)^m) for m = 0, -1, 1, -2, 2, ...

    Stops once both branches exceed the limit, which keeps the loop safe
    for any truncation order.
    """
    yield 0, 1
    m = 1
    while True:
        e1 = m * (3 * m - 1) // 2
        e2 = m * (3 * m + 1) // 2
        if e1 > limit and e2 > limit:
            return
        s = -1 if m & 1 else 1
        if e1 <= limit:
            yield e1, s
        if e2 <= limit:
            yield e2, s
        m += 1


def pochhammer(k: int, ring: Ring, order: int) -> TruncatedSeries:
    """f_k to the given order, from its pentagonal-number support."""
    if k < 1:
        raise ValueError(f"subscript must be >= 1, got {k}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    coeffs = [0] * (order + 1)
    for e, s in _generalized_pentagonal(order // k):
        coeffs[k * e] = ring.reduce(s)
    return TruncatedSeries(ring, coeffs)


def _binomial_range_product(k: int, lo: int, hi: int, cap: int, ring: Ring) -> list[int]:
    # prod_{i=lo..hi} (1 - q^{k i}) truncated to cap+1 coefficients.
    # When every cross term k(i+j) already exceeds the cap the product
    # collapses to 1 - sum q^{k i}; otherwise split and convolve.
    if lo > hi or k * lo > cap:
        return [ring.reduce(1)]
    if k * (2 * lo + 1) > cap:
        top = min(hi, cap // k)
        out = [0] * (k * top + 1)
        out[0] = ring.reduce(1)
        neg_one = ring.reduce(-1)
        for i in range(lo, top + 1):
            out[k * i] = neg_one
        return out
    if lo == hi:
        out = [0] * (k * lo + 1)
        out[0] = ring.reduce(1)
        out[k * lo] = ring.reduce(-1)
        return out
    mid = (lo + hi) // 2
    left = _binomial_range_product(k, lo, mid, cap, ring)
    right = _binomial_range_product(k, mid + 1, hi, cap, ring)
    n_out = min(len(left) + len(right) - 1, cap + 1)
    if ring.modulus is None:
        return _convolve.conv(left, right, n_out)
    return _convolve.conv_mod(left, right, n_out, ring.modulus)


def _band_symmetric_poly(k: int, lo: int, hi: int, j_max: int, cap: int) -> list[int]:
    # prod_{i=lo..hi} (1 - q^{k i}) truncated to cap, given that no
    # product of more than j_max distinct factors survives truncation.
    # Expand through elementary symmetric polynomials e_t of the q^{ki},
    # built from the sparse power sums p_t = sum q^{k t i} by Newton's
    # identities; the divisions by t are exact over Z.
    n = cap + 1
    power_sums = []
    for t in range(1, j_max + 1):
        p = [0] * n
        for i in range(lo, hi + 1):
            e = k * t * i
            if e > cap:
                break
            p[e] = 1
        power_sums.append(p)
    out = [0] * n
    out[0] = 1
    elementary = [out[:]]  # e_0 = 1
    for t in range(1, j_max + 1):
        acc = [0] * n
        sign = 1
        for u in range(1, t + 1):
            term = _convolve.conv(elementary[t - u], power_sums[u - 1], n)
            if sign > 0:
                acc = [a + b for a, b in zip(acc, term)]
            else:
                acc = [a - b for a, b in zip(acc, term)]
            sign = -sign
        e_t = [c // t for c in acc]
        elementary.append(e_t)
        if t % 2:
            out = [a - b for a, b in zip(out, e_t)]
        else:
            out = [a + b for a, b in zip(out, e_t)]
    return out


def _sequential_head_mod(k: int, head_hi: int, order: int, m: int) -> list[int]:
    # prod_{i<=head_hi} (1 - q^{ki}) mod m by a vectorized subtract-shift
    # sweep, reducing before int64 headroom (values < m * 2^w) runs out.
    c = np.zeros(order + 1, dtype=np.int64)
    c[0] = 1
    w = max(1, 62 - (m - 1).bit_length() - 1)
    steps = 0
    for i in range(k, k * head_hi + 1, k):
        c[i:] -= c[:-i]
        steps += 1
        if steps == w:
            c %= m
            steps = 0
    c %= m
    return c.tolist()


def _product_via_bands(k: int, ring: Ring, order: int) -> list[int]:
    # Split the factor indices at order/(k j): in the band above the
    # j-th cut at most j factors survive truncation, so each band
    # collapses to a short alternating sum of elementary symmetric
    # polynomials; only the head range needs factor-by-factor work.
    m = ring.modulus
    vector_head = m is not None and not ring.big_modulus and order > 20000
    # deeper bands shrink the head; the vectorized head is cheap enough
    # that extra band convolutions stop paying for themselves
    bands = 4 if vector_head else 8
    cuts = [order // (k * j) for j in range(1, bands + 2)]
    head_hi = cuts[bands]
    if vector_head:
        out = _sequential_head_mod(k, head_hi, order, m)
    else:
        out = _binomial_range_product(k, 1, head_hi, order, ring)
        if len(out) < order + 1:
            out.extend([0] * (order + 1 - len(out)))
    for j in range(bands, 0, -1):
        lo, hi = cuts[j] + 1, cuts[j - 1]
        if lo > hi:
            continue
        band = _band_symmetric_poly(k, lo, hi, j, order)
        if m is None:
            out = _convolve.conv(out, band, order + 1)
        else:
            out = _convolve.conv_mod(out, [v % m for v in band], order + 1, m)
    return out


def pochhammer_product(k: int, ring: Ring, order: int) -> TruncatedSeries:
    """f_k by direct truncated product of the binomials (1 - q^{ki}).

    Independent of the pentagonal support; serves as the oracle side of
    the identity suite.  Small factor indices are combined by a balanced
    split; the sparse upper bands, where only a bounded number of
    factors survive truncation, are expanded through their elementary
    symmetric polynomials.
    """
    if k < 1:
        raise ValueError(f"subscript must be >= 1, got {k}")
    if order < 0:
        raise ValueError(f"order must be >= 0, got {order}")
    if order // k <= 64:
        out = _binomial_range_product(k, 1, order // k, order, ring)
        if len(out) < order + 1:
            out.extend([0] * (order + 1 - len(out)))
    else:
        out = _product_via_bands(k, ring, order)
    return TruncatedSeries(ring, out)


def eta_quotient(spec: EtaQuotientSpec, ring: Ring, order: int) -> TruncatedSeries:
    """Expand prod f_{k_i}^{e_i} to the given order.

    Positive-exponent factors are multiplied first; all negative
    exponents are combined into a single denominator which is inverted
    once (its constant term is 1, so inversion is always possible).
    """
    numerator = constant_one(ring, order)
    denominator = None
    for k, e in spec.factors:
        base = pochhammer(k, ring, order)
        if e > 0:
            numerator = numerator.mul(base.pow(e))
        else:
            piece = base.pow(-e)
            denominator = piece if denominator is None else denominator.mul(piece)
    if denominator is None:
        return numerator
    return numerator.mul(denominator.inv())


def theta_cube(ring: Ring, order: int) -> TruncatedSeries:
    """f1^3 as the triangular-number sum with weights (-1)^m (2m+1)."""
    coeffs = [0] * (order + 1)
    m = 0
    while m * (m + 1) // 2 <= order:
        w = 2 * m + 1
        coeffs[m * (m + 1) // 2] = ring.reduce(-w if m & 1 else w)
        m += 1
    return TruncatedSeries(ring, coeffs)


def theta_sextic(ring: Ring, order: int) -> TruncatedSeries:
    """f1^5/f2^2 as the sum of (6m+1) q^{m(3m+1)/2} over m in Z."""
    coeffs = [0] * (order + 1)
    coeffs[0] = ring.reduce(1)
    m = 1
    while True:
        e_pos = m * (3 * m + 1) // 2
        e_neg = m * (3 * m - 1) // 2  # exponent for -m
        if e_pos > order and e_neg > order:
            break
        if e_pos <= order:
            coeffs[e_pos] = ring.reduce(6 * m + 1)
        if e_neg <= order:
            coeffs[e_neg] = ring.reduce(-6 * m + 1)
        m += 1
    return TruncatedSeries(ring, coeffs)


def theta_square(ring: Ring, order: int) -> TruncatedSeries:
    """f1^2/f2 = 1 + 2 sum (-1)^n q^{n^2}."""
    coeffs = [0] * (order + 1)
    coeffs[0] = ring.reduce(1)
    n = 1
    while n * n <= order:
        coeffs[n * n] = ring.reduce(-2 if n & 1 else 2)
        n += 1
    return TruncatedSeries(ring, coeffs)


def neg_q_pochhammer(ring: Ring, order: int) -> TruncatedSeries:
    """(-q;-q)_infinity, expanded as the quotient f2^3 / (f1 f4)."""
    return eta_quotient(EtaQuotientSpec(((2, 3), (1, -1), (4, -1))), ring, order)


def identity_suite(ring: Ring, order: int) -> list[tuple[str, bool]]:
    """Run the six dual-path identity checks at the given order.

    Each entry pairs a closed-form theta construction with an
    independent product/quotient construction; the result records
    whether the two expansions agree coefficientwise.
    """
    f1_theta = pochhammer(1, ring, order)
    results = [
        ("pentagonal-product", f1_theta == pochhammer_product(1, ring, order)),
        ("cube-triangular", theta_cube(ring, order) == f1_theta.pow(3)),
        (
            "sextic-quotient",
            theta_sextic(ring, order) == eta_quotient(EtaQuotientSpec(((1, 5), (2, -2))), ring, order),
        ),
        ("negated-q", neg_q_pochhammer(ring, order) == f1_theta.negate_q()),
        (
            "square-quotient",
            theta_square(ring, order) == eta_quotient(EtaQuotientSpec(((1, 2), (2, -1))), ring, order),
        ),
        (
            "square-dilated",
            theta_square(ring, order).dilate(2)
            == eta_quotient(EtaQuotientSpec(((2, 2), (4, -1))), ring, order),
        ),
    ]
    return results
