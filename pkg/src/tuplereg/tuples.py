"""Counting k-tuple l-regular partitions.

T(n) counts k-tuples (lam_1, ..., lam_k) of partitions whose sizes sum
to n, where every part of every component avoids multiples of l.  The
generating function is f_l^k / f_1^k, which the series path expands
directly; an independent backtracking enumeration provides exact values
for small n as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .etaq import EtaQuotientSpec, eta_quotient
from .numtheory import is_triangular
from .series import Ring, TruncatedSeries

ORACLE_LIMIT = 40  # enumeration is exponential-ish; keep it honest and small

Parity = Literal["odd", "even"]


@dataclass(frozen=True)
class TuplePartitionSpec:
    """Which T_{l,k} is under study: regularity l >= 2, tuple length k >= 1."""

    ell: int
    k: int

    def __post_init__(self):
        if self.ell < 2:
            raise ValueError(f"regularity parameter must be >= 2, got {self.ell}")
        if self.k < 1:
            raise ValueError(f"tuple length must be >= 1, got {self.k}")

    @classmethod
    def parse(cls, text: str) -> "TuplePartitionSpec":
        """Parse 'l,k'."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'l,k', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def __str__(self) -> str:
        return f"{self.ell},{self.k}"


def t_series(spec: TuplePartitionSpec, ring: Ring, order: int) -> TruncatedSeries:
    """Series whose coefficient at n is T_{l,k}(n), reduced into the ring."""
    quotient = EtaQuotientSpec(((spec.ell, spec.k), (1, -spec.k)))
    return eta_quotient(quotient, ring, order)


def _regular_partition_counts(ell: int, n_max: int) -> list[int]:
    # Counts of l-regular partitions of every size <= n_max, by explicit
    # backtracking over parts in decreasing order.  Deliberately avoids
    # the series machinery: this is the oracle's foundation.
    counts = [0] * (n_max + 1)

    def descend(remaining: int, max_part: int) -> None:
        counts[n_max - remaining] += 1  # the parts chosen so far form a partition
        for part in range(min(remaining, max_part), 0, -1):
            if part % ell == 0:
                continue
            descend(remaining - part, part)

    # Enumerate partitions of every total <= n_max in one sweep: a
    # partition of s is a partial sum state with remaining = n_max - s.
    descend(n_max, n_max)
    return counts


def t_oracle(spec: TuplePartitionSpec, n: int) -> int:
    """Exact T_{l,k}(n) by enumeration, for n <= ORACLE_LIMIT.

    Component counts come from backtracking enumeration of l-regular
    partitions; the k components are then combined by convolving the
    per-size counts with plain integer loops.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > ORACLE_LIMIT:
        raise ValueError(f"oracle guard: n = {n} exceeds enumeration limit {ORACLE_LIMIT}")
    counts = _regular_partition_counts(spec.ell, n)
    total = [1] + [0] * n  # k = 0: only the empty tuple of size 0
    for _ in range(spec.k):
        nxt = [0] * (n + 1)
        for size_so_far, ways in enumerate(total):
            if ways == 0:
                continue
            for size in range(n + 1 - size_so_far):
                nxt[size_so_far + size] += ways * counts[size]
        total = nxt
    return total[n]


def t2_parity(n: int) -> Parity:
    """Parity of T_2(n) = T_{2,3}(n): odd exactly at triangular n."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return "odd" if is_triangular(n) is not None else "even"
