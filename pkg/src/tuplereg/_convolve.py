"""Exact truncated convolution of integer coefficient vectors.

Products are evaluated by Kronecker substitution: each coefficient is
packed into a fixed-width bit slot of one huge integer, the two integers
are multiplied with GMP, and the slots of the product are read back.  As
long as every convolution sum fits its slot the result is exact, so the
slot width is always derived from the actual operand magnitudes, never
assumed.  GMP's subquadratic multiplication makes this orders of
magnitude faster than coefficient loops at the lengths used here
(up to a few hundred thousand terms).

Negative coefficients never enter a packed integer.  A signed operand is
either lifted by a power-of-two offset (when the other operand is
nonnegative, one multiply plus a prefix-sum correction) or split into
positive and negative parts (three multiplies).
"""

from __future__ import annotations

import numpy as np
from gmpy2 import pack, unpack

# Slot widths that numpy can view directly when decoding the product.
_NUMPY_SLOTS = {8: "<u1", 16: "<u2", 32: "<u4", 64: "<u8"}


def _slot_width(bound: int) -> int:
    """Smallest byte-aligned slot that holds values up to `bound`."""
    bits = bound.bit_length() + 1
    for w in (8, 16, 32, 64):
        if bits <= w:
            return w
    return (bits + 7) & ~7


def _unpack(product, slot: int, n_out: int) -> list[int]:
    """Read the first n_out slots of a packed product."""
    if product == 0:
        return [0] * n_out
    if slot in _NUMPY_SLOTS:
        nbytes = (n_out * slot) // 8
        raw = int(product).to_bytes(max(nbytes, (product.bit_length() + 7) // 8), "little")
        out = np.frombuffer(raw[:nbytes], dtype=_NUMPY_SLOTS[slot]).tolist()
    else:
        out = [int(v) for v in unpack(product, slot)[:n_out]]
    if len(out) < n_out:
        out.extend([0] * (n_out - len(out)))
    return out


def _conv_nonneg(a: list[int], b: list[int], n_out: int, maxa: int, maxb: int) -> list[int]:
    nterms = min(len(a), len(b), n_out)
    slot = _slot_width(nterms * maxa * maxb)
    return _unpack(pack(a, slot) * pack(b, slot), slot, n_out)


def _conv_offset(a: list[int], b: list[int], n_out: int, mina: int, maxa: int, maxb: int) -> list[int]:
    # a signed, b nonnegative: shift a up by a power of two so it packs,
    # then subtract the offset times the running prefix sums of b.
    shift = (-mina).bit_length()
    c = 1 << shift
    if len(a) < n_out:
        a = a + [0] * (n_out - len(a))
    lifted = [x + c for x in a]
    out = _conv_nonneg(lifted, b, n_out, maxa + c, maxb)
    run = 0
    lb = len(b)
    for k in range(n_out):
        if k < lb:
            run += b[k]
        out[k] -= run << shift
    return out


def _conv_split(a: list[int], b: list[int], n_out: int, maxa: int, maxb: int) -> list[int]:
    # Both operands signed: a = a+ - a-, b = b+ - b-, three products via
    # (a+ + a-)(b+ + b-) = (a+ b+) + (a- b-) + cross terms.
    ap = [x if x > 0 else 0 for x in a]
    an = [-x if x < 0 else 0 for x in a]
    bp = [x if x > 0 else 0 for x in b]
    bn = [-x if x < 0 else 0 for x in b]
    nterms = min(len(a), len(b), n_out)
    slot = _slot_width(nterms * maxa * maxb)
    p1 = pack(ap, slot) * pack(bp, slot)
    p2 = pack(an, slot) * pack(bn, slot)
    p3 = pack([x + y for x, y in zip(ap, an)], slot) * pack([x + y for x, y in zip(bp, bn)], slot)
    u1 = _unpack(p1, slot, n_out)
    u2 = _unpack(p2, slot, n_out)
    u3 = _unpack(p3, slot, n_out)
    return [2 * (x + y) - z for x, y, z in zip(u1, u2, u3)]


def conv(a: list[int], b: list[int], n_out: int) -> list[int]:
    """Exact convolution of integer vectors, truncated to n_out terms."""
    if n_out <= 0:
        return []
    if not a or not b:
        return [0] * n_out
    mina, maxa = min(a), max(a)
    minb, maxb = min(b), max(b)
    if maxa == 0 == mina or maxb == 0 == minb:
        return [0] * n_out
    if mina >= 0 and minb >= 0:
        return _conv_nonneg(a, b, n_out, maxa, maxb)
    if minb >= 0:
        return _conv_offset(a, b, n_out, mina, max(maxa, -mina), maxb)
    if mina >= 0:
        return _conv_offset(b, a, n_out, minb, max(maxb, -minb), maxa)
    return _conv_split(a, b, n_out, max(maxa, -mina), max(maxb, -minb))


def conv_mod(a: list[int], b: list[int], n_out: int, m: int) -> list[int]:
    """Convolution of canonically reduced vectors, reduced mod m.

    Both inputs must already lie in [0, m); the exact convolution is
    computed first and reduced afterwards, so no wraparound can occur.
    """
    if n_out <= 0:
        return []
    if not a or not b:
        return [0] * n_out
    maxa, maxb = max(a), max(b)
    if maxa == 0 or maxb == 0:
        return [0] * n_out
    nterms = min(len(a), len(b), n_out)
    slot = _slot_width(nterms * maxa * maxb)
    product = pack(a, slot) * pack(b, slot)
    if product == 0:
        return [0] * n_out
    if slot in _NUMPY_SLOTS:
        nbytes = (n_out * slot) // 8
        raw = int(product).to_bytes(max(nbytes, (product.bit_length() + 7) // 8), "little")
        arr = np.frombuffer(raw[:nbytes], dtype=_NUMPY_SLOTS[slot])
        # slot sizing keeps every value below 2^63, so int64 is lossless
        # and avoids dtype overflow when m exceeds the narrow slot type
        out = (arr.astype(np.int64) % m).tolist()
        if len(out) < n_out:
            out.extend([0] * (n_out - len(out)))
        return out
    out = [int(v) % m for v in unpack(product, slot)[:n_out]]
    if len(out) < n_out:
        out.extend([0] * (n_out - len(out)))
    return out


