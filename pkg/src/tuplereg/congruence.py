"""Congruence families T(An + B) = 0 (mod M) and their verifier.

A family is a declarative claim about an arithmetic progression of
coefficients; check_family tests it exhaustively against a precomputed
series and reports every violation.  Builder functions construct the
families of the proved theorems, the inherited results, and the
conjecture, validating their hypotheses so that a family object always
carries honest provenance.  Builders refuse out-of-hypothesis
parameters unless force=True, which exists for exploratory use and taints
the provenance label.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .numtheory import is_prime, legendre
from .series import TruncatedSeries
from .tuples import TuplePartitionSpec

PASS = "PASS"
FAIL = "FAIL"
PASS_WITH_EXCEPTIONS = "PASS_WITH_EXCEPTIONS"


@dataclass(frozen=True)
class NFilter:
    """Predicate on the progression index n: all n, or n avoiding divisors."""

    kind: str = "all"  # "all" | "not_div" | "not_div_both"
    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in ("all", "not_div", "not_div_both"):
            raise ValueError(f"unknown filter kind {self.kind!r}")
        expected = {"all": 0, "not_div": 1, "not_div_both": 2}[self.kind]
        if len(self.divisors) != expected:
            raise ValueError(f"filter {self.kind} takes {expected} divisor(s)")
        if any(d < 2 for d in self.divisors):
            raise ValueError(f"filter divisors must be >= 2, got {self.divisors}")

    @classmethod
    def all(cls) -> "NFilter":
        return cls("all", ())

    @classmethod
    def not_div(cls, d: int) -> "NFilter":
        return cls("not_div", (d,))

    @classmethod
    def not_div_both(cls, d1: int, d2: int) -> "NFilter":
        return cls("not_div_both", (d1, d2))

    def admits(self, n: int) -> bool:
        return all(n % d != 0 for d in self.divisors)

    def __str__(self) -> str:
        if not self.divisors:
            return "all"
        return f"{self.kind}:" + ",".join(str(d) for d in self.divisors)

    @classmethod
    def parse(cls, text: str) -> "NFilter":
        kind, _, rest = text.partition(":")
        divisors = tuple(int(d) for d in rest.split(",")) if rest else ()
        return cls(kind, divisors)


@dataclass(frozen=True)
class CongruenceFamily:
    """Claim: T(A n + B) = 0 (mod M) for every admissible n >= 0.

    spec identifies the counting function; None means the series is
    supplied externally (used for the classical partition-function
    sanity families).  B may exceed A: deep families have large offsets.
    """

    spec: TuplePartitionSpec | None
    A: int
    B: int
    M: int
    n_filter: NFilter = field(default_factory=NFilter.all)
    provenance: str = ""

    def __post_init__(self):
        if self.A < 1:
            raise ValueError(f"progression step must be >= 1, got {self.A}")
        if self.B < 0:
            raise ValueError(f"progression offset must be >= 0, got {self.B}")
        if self.M < 2:
            raise ValueError(f"modulus must be >= 2, got {self.M}")

    def index(self, n: int) -> int:
        return self.A * n + self.B

    def max_n(self, order: int) -> int:
        """Largest n whose index fits a series of the given order."""
        return (order - self.B) // self.A


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of testing one family on a range of n."""

    family: CongruenceFamily
    n_max_tested: int
    exceptions: tuple[tuple[int, int, int], ...]  # (n, index, residue mod M)
    status: str

    @property
    def passed(self) -> bool:
        return self.status == PASS


def check_family(
    family: CongruenceFamily,
    series: TruncatedSeries,
    n_max: int | None = None,
) -> VerificationReport:
    """Test the family against a series; the exception list is exhaustive.

    The series must either be over Z or over a modulus divisible by M.
    n_max defaults to everything the series covers; asking beyond the
    series is an error rather than a silent truncation.
    """
    m = series.ring.modulus
    if m is not None and m % family.M != 0:
        raise ValueError(f"series modulus {m} is not divisible by family modulus {family.M}")
    available = family.max_n(series.order)
    if available < 0:
        raise ValueError(
            f"series order {series.order} is too short for offset {family.B}"
        )
    if n_max is None:
        n_max = available
    elif n_max > available:
        raise ValueError(
            f"series order {series.order} is too short: need index {family.index(n_max)}"
        )
    coeffs = series.coeffs
    admits = family.n_filter.admits
    step, offset, modulus = family.A, family.B, family.M
    exceptions = []
    if m is not None and m < 2**31:
        # Small-modulus coefficients fit int64; test the whole progression
        # vectorized and only walk the (usually few) nonzero residues.
        lane = np.asarray(coeffs[offset : offset + step * n_max + 1 : step], dtype=np.int64)
        residues = lane % modulus
        for n in np.nonzero(residues)[0].tolist():
            if admits(n):
                exceptions.append((n, step * n + offset, int(residues[n])))
    else:
        for n in range(n_max + 1):
            if not admits(n):
                continue
            r = coeffs[step * n + offset] % modulus
            if r:
                exceptions.append((n, step * n + offset, r))
    status = PASS if not exceptions else FAIL
    return VerificationReport(family, n_max, tuple(exceptions), status)


# -- family builders -------------------------------------------------------
#
# Each builder mirrors one catalogued congruence statement.  Hypothesis
# checks raise ValueError naming the violated condition; force=True skips
# them and marks the provenance as unproved.

_T2 = TuplePartitionSpec(2, 3)


def _forced(label: str, force: bool) -> str:
    return f"{label} (forced, hypotheses unchecked)" if force else label


def family_nss_13(variant: str, alpha: int, force: bool = False) -> CongruenceFamily:
    """Inherited mod-24 families at step 3^(4a+2).

    The offset is sum_{i=0..2a} 9^i plus 3^(4a+1) (first variant) or
    2*3^(4a+1) (second variant).
    """
    if variant not in ("first", "second"):
        raise ValueError(f"variant must be 'first' or 'second', got {variant!r}")
    if alpha < 0 and not force:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    step = 3 ** (4 * alpha + 2)
    c = 1 if variant == "first" else 2
    offset = (9 ** (2 * alpha + 1) - 1) // 8 + c * 3 ** (4 * alpha + 1)
    label = _forced(f"nss1.{2 if variant == 'first' else 3} alpha={alpha}", force)
    return CongruenceFamily(_T2, step, offset, 24, NFilter.all(), label)


def family_thm12(n_param: int, t: int, force: bool = False) -> CongruenceFamily:
    """T_2(9n + (N t^2 - 1)/8) = 0 (mod 24) for N in {33, 57}, gcd(t,6)=1."""
    if not force:
        if n_param not in (33, 57):
            raise ValueError(f"N must be 33 or 57, got {n_param}")
        if math.gcd(t, 6) != 1:
            raise ValueError(f"t must be coprime to 6, got {t}")
    num = n_param * t * t - 1
    if num % 8:
        raise ValueError(f"(N t^2 - 1) = {num} is not divisible by 8")
    return CongruenceFamily(
        _T2, 9, num // 8, 24, NFilter.all(), _forced(f"thm1.2 N={n_param} t={t}", force)
    )


def family_conj11(p: int, t: int, j: int, force: bool = False) -> CongruenceFamily:
    """Conjectural-form mod-6 family at step 9t^2 (subsumed by thm1.2).

    Hypotheses as originally stated: p >= 5 prime with (-2/p) = -1,
    gcd(t, 6) = 1, p | t, and 1 <= j <= p-1.
    """
    if not force:
        if p < 5 or not is_prime(p):
            raise ValueError(f"p must be a prime >= 5, got {p}")
        if legendre(-2, p) != -1:
            raise ValueError(f"(-2/{p}) = {legendre(-2, p)}, need -1")
        if math.gcd(t, 6) != 1:
            raise ValueError(f"t must be coprime to 6, got {t}")
        if t % p != 0:
            raise ValueError(f"p = {p} must divide t = {t}")
        if not 1 <= j <= p - 1:
            raise ValueError(f"j must satisfy 1 <= j <= p-1, got {j}")
    if (9 * t * t * j) % p or (57 * t * t - 1) % 8:
        raise ValueError("offset is not integral for these parameters")
    offset = 9 * t * t * j // p + (57 * t * t - 1) // 8
    return CongruenceFamily(
        _T2, 9 * t * t, offset, 6, NFilter.all(), _forced(f"conj1.1 p={p} t={t} j={j}", force)
    )


def family_thm13(p: int, alpha: int, strength: str = "mod8", force: bool = False) -> CongruenceFamily:
    """T_2(p^(2a+1) n + (p^(2a+2)-1)/8) = 0 mod 8 (p not dividing n),
    and mod 24 when additionally 3 does not divide n."""
    if strength not in ("mod8", "mod24"):
        raise ValueError(f"strength must be 'mod8' or 'mod24', got {strength!r}")
    if not force:
        if not is_prime(p) or p % 8 not in (3, 5, 7):
            raise ValueError(f"p must be a prime with p = 3, 5 or 7 (mod 8), got {p}")
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
    step = p ** (2 * alpha + 1)
    offset = (p ** (2 * alpha + 2) - 1) // 8
    if strength == "mod8":
        mod, filt = 8, NFilter.not_div(p)
    else:
        mod, filt = 24, (NFilter.not_div_both(p, 3) if p != 3 else NFilter.not_div(3))
    return CongruenceFamily(
        _T2, step, offset, mod, filt, _forced(f"thm1.3 p={p} alpha={alpha} {strength}", force)
    )


def family_cor14(p: int, alpha: int, force: bool = False) -> CongruenceFamily:
    """T_2(9 p^(2a+1) n + (9 p^(2a+2)-1)/8) = 0 (mod 24), p != 3."""
    if not force:
        if not is_prime(p) or p % 8 not in (3, 5, 7):
            raise ValueError(f"p must be a prime with p = 3, 5 or 7 (mod 8), got {p}")
        if p == 3:
            raise ValueError("p = 3 is explicitly excluded from this family")
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
    step = 9 * p ** (2 * alpha + 1)
    offset = (9 * p ** (2 * alpha + 2) - 1) // 8
    return CongruenceFamily(
        _T2, step, offset, 24, NFilter.not_div(p), _forced(f"cor1.4 p={p} alpha={alpha}", force)
    )


def family_nss_16(p: int, alpha: int, force: bool = False) -> CongruenceFamily:
    """Inherited mod-6 family 9 p^(2a+1) n + (9 p^(2a+2)-1)/8, p = 5,7 (mod 8)."""
    if not force:
        if not is_prime(p) or p % 8 not in (5, 7):
            raise ValueError(f"p must be a prime with p = 5 or 7 (mod 8), got {p}")
        if alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {alpha}")
    step = 9 * p ** (2 * alpha + 1)
    offset = (9 * p ** (2 * alpha + 2) - 1) // 8
    return CongruenceFamily(
        _T2, step, offset, 6, NFilter.not_div(p), _forced(f"nss1.6 p={p} alpha={alpha}", force)
    )


def family_gen_thm29(
    p: int, alpha: int, s: int, m: int, ell: int, r: int, force: bool = False
) -> CongruenceFamily:
    """T_{ell, p^a m}(p^s n + r) = 0 (mod p^(a-s+1)) for 1 <= r <= p^s - 1."""
    if not force:
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if alpha < 1 or s < 1:
            raise ValueError(f"alpha and s must be >= 1, got alpha={alpha}, s={s}")
        if alpha - s < 0:
            raise ValueError(f"need alpha >= s, got alpha={alpha} < s={s}")
        if not 1 <= r <= p**s - 1:
            raise ValueError(f"r must satisfy 1 <= r <= p^s - 1 = {p**s - 1}, got {r}")
        if m < 1:
            raise ValueError(f"m must be >= 1, got {m}")
    spec = TuplePartitionSpec(ell, p**alpha * m)
    return CongruenceFamily(
        spec,
        p**s,
        r,
        p ** (alpha - s + 1),
        NFilter.all(),
        _forced(f"thm2.9 p={p} alpha={alpha} s={s} m={m} ell={ell} r={r}", force),
    )


def family_eq28(ell: int, p: int, r: int, force: bool = False) -> CongruenceFamily:
    """T_{ell,p}(p n + r) = 0 (mod p) for 1 <= r <= p - 1."""
    if not force:
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if not 1 <= r <= p - 1:
            raise ValueError(f"r must satisfy 1 <= r <= p-1, got {r}")
    spec = TuplePartitionSpec(ell, p)
    return CongruenceFamily(spec, p, r, p, NFilter.all(), _forced(f"eq2.8 ell={ell} p={p} r={r}", force))


def ramanujan_families() -> list[CongruenceFamily]:
    """The classical partition-function congruences, used as a sanity suite.

    These are claims about p(n) itself, so spec is None and callers must
    supply the partition-number series (the inverse of f1).
    """
    return [
        CongruenceFamily(None, 5, 4, 5, NFilter.all(), "ramanujan mod 5"),
        CongruenceFamily(None, 7, 5, 7, NFilter.all(), "ramanujan mod 7"),
        CongruenceFamily(None, 11, 6, 11, NFilter.all(), "ramanujan mod 11"),
    ]
