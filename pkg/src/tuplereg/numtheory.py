"""Elementary arithmetic helpers: primality, Legendre symbols, p-adic
valuations, modular inverses, triangular-number tests, and brute-force
representation checks for the two binary quadratic forms x^2 + 2y^2 and
x^2 + y^2."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion: a^((p-1)/2) mod p.

    Some sources attach an L subscript to the symbol; it is the same
    quantity.  Raises unless p is an odd prime.
    """
    if p == 2 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def nu_p(n: int, p: int) -> int:
    """Exponent of the highest power of p dividing n (n >= 1)."""
    if n < 1:
        raise ValueError(f"nu_p expects n >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def inv_mod(a: int, m: int) -> int:
    """Multiplicative inverse of a mod m, in [0, m)."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible mod {m}: gcd = {math.gcd(a, m)}") from None


def is_triangular(n: int) -> int | None:
    """Return m with n = m(m+1)/2, or None if n is not triangular."""
    if n < 0:
        return None
    m = (math.isqrt(8 * n + 1) - 1) // 2
    return m if m * (m + 1) // 2 == n else None


class Form(Enum):
    """Binary quadratic forms used by the valuation obstructions."""

    X2_PLUS_2Y2 = 2
    X2_PLUS_Y2 = 1

    @property
    def y_coefficient(self) -> int:
        return self.value


@dataclass(frozen=True)
class FormRepresentation:
    """All nonnegative solutions (x, y) of x^2 + c*y^2 = n."""

    n: int
    form: Form
    solutions: tuple[tuple[int, int], ...]

    @property
    def representable(self) -> bool:
        return bool(self.solutions)


def represent(n: int, form: Form) -> FormRepresentation:
    """Exhaustive search for x^2 + c*y^2 = n with x, y >= 0.

    Signs are folded into the nonnegative quadrant; the solution list is
    complete and sorted by (x, y).
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    c = form.y_coefficient
    sols = []
    for x in range(math.isqrt(n) + 1):
        rest = n - x * x
        if rest % c:
            continue
        y2 = rest // c
        y = math.isqrt(y2)
        if y * y == y2:
            sols.append((x, y))
    return FormRepresentation(n, form, tuple(sols))


def residue_of_family_offset(n_param: int, t: int) -> int:
    """Residue of (N*t^2 - 1)/8 mod 9 for N in {33, 57} and gcd(t,6)=1.

    Comes out to 4 for N=33 and 7 for N=57 for every admissible t; the
    value is computed, not looked up.
    """
    if n_param not in (33, 57):
        raise ValueError(f"N must be 33 or 57, got {n_param}")
    if math.gcd(t, 6) != 1:
        raise ValueError(f"t must be coprime to 6, got {t}")
    num = n_param * t * t - 1
    if num % 8:
        raise ValueError(f"{n_param}*{t}^2 - 1 is not divisible by 8")
    return (num // 8) % 9


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; adequate for n <= ~10^12."""
    if n < 1:
        raise ValueError(f"factorize expects n >= 1, got {n}")
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out
