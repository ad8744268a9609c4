"""Truncated formal power series over Z and Z/mZ.

A series is stored as a dense coefficient vector c[0..N] together with
its ring; the variable q is implicit, exponent i lives at index i.  All
operations are pure: they never mutate their arguments and always return
freshly built series, so values can be shared freely between threads.

Arithmetic is exact.  Over Z the coefficients are arbitrary-precision
integers; over Z/mZ every stored coefficient is canonically reduced into
[0, m) and intermediate products are carried at full width before
reduction, so no modulus ever wraps silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _convolve

_WORD = 1 << 64


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: Z when modulus is None, else Z/mZ."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")

    @classmethod
    def integers(cls) -> "Ring":
        return cls(None)

    @classmethod
    def mod(cls, m: int) -> "Ring":
        return cls(m)

    @property
    def is_integers(self) -> bool:
        return self.modulus is None

    @property
    def big_modulus(self) -> bool:
        """True when the modulus does not fit a 64-bit word."""
        return self.modulus is not None and self.modulus >= _WORD

    def reduce(self, value: int) -> int:
        return value if self.modulus is None else value % self.modulus

    def is_unit(self, value: int) -> bool:
        if self.modulus is None:
            return value in (1, -1)
        return math.gcd(value, self.modulus) == 1

    def unit_inverse(self, value: int) -> int:
        if self.modulus is None:
            return value  # +-1 are self-inverse
        return pow(value, -1, self.modulus)

    def __repr__(self) -> str:
        return "Z" if self.modulus is None else f"Z/{self.modulus}Z"


class TruncatedSeries:
    """Dense truncated power series; known for exponents 0..order."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: list[int]):
        if not coeffs:
            raise ValueError("coefficient vector must be nonempty")
        self.ring = ring
        self.coeffs = coeffs  # owned; callers must not mutate

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __getitem__(self, n: int) -> int:
        return self.coefficient(n)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries({self.ring}, order={self.order}, [{head}{tail}])"

    # -- arithmetic ----------------------------------------------------

    def _require_same_ring(self, other: "TruncatedSeries") -> None:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        n = min(len(self.coeffs), len(other.coeffs))
        red = self.ring.reduce
        return TruncatedSeries(self.ring, [red(x + y) for x, y in zip(self.coeffs[:n], other.coeffs[:n])])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_ring(other)
        n = min(len(self.coeffs), len(other.coeffs))
        red = self.ring.reduce
        return TruncatedSeries(self.ring, [red(x - y) for x, y in zip(self.coeffs[:n], other.coeffs[:n])])

    def __neg__(self) -> "TruncatedSeries":
        red = self.ring.reduce
        return TruncatedSeries(self.ring, [red(-x) for x in self.coeffs])

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Truncated Cauchy product; output order is the minimum order."""
        self._require_same_ring(other)
        n_out = min(len(self.coeffs), len(other.coeffs))
        m = self.ring.modulus
        if m is None:
            out = _convolve.conv(self.coeffs, other.coeffs, n_out)
        else:
            out = _convolve.conv_mod(self.coeffs, other.coeffs, n_out, m)
        return TruncatedSeries(self.ring, out)

    __mul__ = mul

    def pow(self, e: int) -> "TruncatedSeries":
        """Repeated-squaring power, truncated to this series' order."""
        if e < 0:
            raise ValueError("exponent must be nonnegative; invert first for negative powers")
        result = constant_one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                result = result.mul(base)
            e >>= 1
            if e:
                base = base.mul(base)
        return result

    __pow__ = pow

    def inv(self) -> "TruncatedSeries":
        """Multiplicative inverse up to the truncation order.

        The constant term must be a unit: +-1 over Z, coprime to m over
        Z/mZ.  Short series use the forward linear recurrence

            c'_n = -c0^{-1} * sum_{i=1..n} c_i c'_{n-i}

        skipping zero c_i, which is fast for sparse inputs.  Long series
        switch to Newton iteration x -> x(2 - ax), doubling the number
        of correct coefficients per step with two big products.
        """
        c0 = self.coeffs[0]
        if not self.ring.is_unit(c0):
            if self.ring.modulus is None:
                raise ValueError(f"constant term {c0} is not a unit in Z (must be +1 or -1)")
            g = math.gcd(c0, self.ring.modulus)
            raise ValueError(
                f"constant term {c0} is not invertible mod {self.ring.modulus}: gcd(c0, m) = {g}"
            )
        if self.order <= 512:
            return TruncatedSeries(self.ring, self._inv_recurrence())
        return TruncatedSeries(self.ring, self._inv_newton())

    def _inv_recurrence(self) -> list[int]:
        ring = self.ring
        red = ring.reduce
        c0_inv = ring.unit_inverse(self.coeffs[0])
        support = [(i, c) for i, c in enumerate(self.coeffs) if c != 0 and i > 0]
        out = [red(c0_inv)]
        for n in range(1, len(self.coeffs)):
            acc = 0
            for i, c in support:
                if i > n:
                    break
                acc += c * out[n - i]
            out.append(red(-c0_inv * acc))
        return out

    def _inv_newton(self) -> list[int]:
        target = len(self.coeffs)
        m = self.ring.modulus
        a = self.coeffs
        x = [self.ring.reduce(self.ring.unit_inverse(a[0]))]
        n = 1
        while n < target:
            n2 = min(2 * n, target)
            if m is None:
                s = _convolve.conv(a[:n2], x, n2)
                v = [2 - s[0]] + [-c for c in s[1:]]
                x = _convolve.conv(v, x, n2)
            else:
                s = _convolve.conv_mod(a[:n2], x, n2, m)
                v = [(2 - s[0]) % m] + [(-c) % m for c in s[1:]]
                x = _convolve.conv_mod(v, x, n2, m)
            n = n2
        return x

    def dilate(self, j: int) -> "TruncatedSeries":
        """Substitute q -> q^j; coefficients past the order are dropped."""
        if j < 1:
            raise ValueError(f"dilation factor must be >= 1, got {j}")
        if j == 1:
            return TruncatedSeries(self.ring, list(self.coeffs))
        out = [0] * len(self.coeffs)
        for i in range(0, (len(self.coeffs) - 1) // j + 1):
            out[i * j] = self.coeffs[i]
        return TruncatedSeries(self.ring, out)

    def negate_q(self) -> "TruncatedSeries":
        """Substitute q -> -q, negating odd-index coefficients."""
        red = self.ring.reduce
        out = list(self.coeffs)
        for i in range(1, len(out), 2):
            out[i] = red(-out[i])
        return TruncatedSeries(self.ring, out)

    def extract_progression(self, step: int, offset: int) -> "TruncatedSeries":
        """Coefficients along indices step*n + offset as a new series."""
        if step < 1:
            raise ValueError(f"step must be >= 1, got {step}")
        if not 0 <= offset < step:
            raise ValueError(f"offset must satisfy 0 <= offset < step, got offset={offset}, step={step}")
        if offset > self.order:
            raise ValueError(f"series of order {self.order} too short for offset {offset}")
        return TruncatedSeries(self.ring, self.coeffs[offset::step])


def make_series(ring: Ring, coeffs: list[int]) -> TruncatedSeries:
    """Build a series from raw integers, reducing into the ring."""
    if not coeffs:
        raise ValueError("coefficient vector must be nonempty")
    red = ring.reduce
    return TruncatedSeries(ring, [red(c) for c in coeffs])


def constant_one(ring: Ring, order: int) -> TruncatedSeries:
    return TruncatedSeries(ring, [ring.reduce(1)] + [0] * order)
