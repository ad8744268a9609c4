"""Discovery scanner for congruence candidates and exception audits.

scan() sweeps every residue class B of every step A in a range against
a list of candidate moduli and reports the classes whose tested
coefficients all vanish.  It works on one precomputed series whose
modulus must cover every candidate (compute it mod lcm of the
candidates); each (A, B, M) test is then a cheap residue check.  The
(A, B) grid is split into independent per-A work units; results are
merged by sorting on (A, B, M), so the output is byte-identical no
matter how many workers ran.

Scanner output is conjectural by construction: a family that passes on
the tested range carries a provenance label saying exactly that, never
a claim of proof.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .congruence import (
    PASS,
    PASS_WITH_EXCEPTIONS,
    CongruenceFamily,
    NFilter,
    VerificationReport,
    check_family,
)
from .series import Ring, TruncatedSeries
from .tuples import TuplePartitionSpec, t_series

THREADS_ENV = "TUPLEREG_THREADS"


def worker_count() -> int:
    """Worker override from the environment; defaults to 1."""
    raw = os.environ.get(THREADS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass(frozen=True)
class ScanJob:
    """Grid description for one scan sweep."""

    spec: TuplePartitionSpec
    A_range: tuple[int, int]  # inclusive
    M_candidates: tuple[int, ...]
    n_max: int
    min_support: int = 50

    def __post_init__(self):
        lo, hi = self.A_range
        if lo < 1 or hi < lo:
            raise ValueError(f"A range must be a nonempty range of positive steps, got {self.A_range}")
        if not self.M_candidates or any(m < 2 for m in self.M_candidates):
            raise ValueError(f"moduli must all be >= 2, got {self.M_candidates}")
        if self.min_support < 10:
            raise ValueError(f"min_support must be >= 10, got {self.min_support}")

    @property
    def lcm(self) -> int:
        return math.lcm(*self.M_candidates)


def _maximal_moduli(passing: list[int]) -> list[int]:
    """Drop any modulus that divides another passing modulus."""
    return [m for m in passing if not any(m != o and o % m == 0 for o in passing)]


def _scan_step(arr: np.ndarray, A: int, job: ScanJob, n_limit: int) -> list[CongruenceFamily]:
    found = []
    candidates = sorted(set(job.M_candidates))
    for B in range(A):
        lane = arr[B : B + A * n_limit + 1 : A]
        if len(lane) < job.min_support:
            continue
        passing = [m for m in candidates if not (lane % m).any()]
        for m in _maximal_moduli(passing):
            found.append(
                CongruenceFamily(
                    job.spec,
                    A,
                    B,
                    m,
                    NFilter.all(),
                    f"scan candidate (conjectural, tested n <= {len(lane) - 1})",
                )
            )
    return found


def scan(job: ScanJob, series: TruncatedSeries) -> list[CongruenceFamily]:
    """Return every progression in the grid that vanishes on the range.

    For each (A, B) only maximal passing moduli are reported: if the
    coefficients vanish mod 64 then 32 and 16 are implied and omitted.
    """
    m = series.ring.modulus
    if m is not None and m % job.lcm != 0:
        raise ValueError(f"series modulus {m} does not cover candidate lcm {job.lcm}")
    lo, hi = job.A_range
    worst = (series.order - (hi - 1)) // hi + 1
    if worst < job.min_support:
        raise ValueError(
            f"series order {series.order} gives only {worst} tested indices at step {hi}, "
            f"need min_support = {job.min_support}"
        )
    if m is not None and m < 2**31:
        arr = np.asarray(series.coeffs, dtype=np.int64)
    else:
        arr = np.asarray([c % job.lcm for c in series.coeffs], dtype=np.int64)
    steps = list(range(lo, hi + 1))
    workers = worker_count()
    n_limit = job.n_max

    def unit(A: int) -> list[CongruenceFamily]:
        limit = min(n_limit, (series.order - (A - 1)) // A)
        return _scan_step(arr, A, job, limit)

    if workers == 1:
        chunks = [unit(A) for A in steps]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(unit, steps))
    merged = [fam for chunk in chunks for fam in chunk]
    merged.sort(key=lambda f: (f.A, f.B, f.M))
    return merged


def audit_exceptions(
    spec: TuplePartitionSpec,
    A: int,
    B: int,
    M: int,
    n_max: int,
    series: TruncatedSeries | None = None,
) -> VerificationReport:
    """Exhaustive exception list for T(An+B) mod M over n <= n_max.

    Unlike check_family this never treats exceptions as failure: the
    result is PASS_WITH_EXCEPTIONS when violations exist, because the
    congruence under audit is only claimed to hold with exceptions.
    A suitable series is computed on demand if none is supplied.
    """
    if series is None:
        series = t_series(spec, Ring.mod(M), A * n_max + B)
    family = CongruenceFamily(spec, A, B, M, NFilter.all(), f"audit A={A} B={B} M={M}")
    report = check_family(family, series, n_max)
    if report.exceptions:
        return VerificationReport(family, report.n_max_tested, report.exceptions, PASS_WITH_EXCEPTIONS)
    return report


def scan_thm13_alpha0(
    p: int, n_max: int, series: TruncatedSeries | None = None
) -> list[VerificationReport]:
    """Check the step-p^2 mod-8 window: offsets r = p*s + (p^2-1)/8.

    Proved for primes p = 3, 5, 7 (mod 8); larger primes in those
    residue classes are accepted but reported as conjectural.
    """
    if p % 8 not in (3, 5, 7):
        raise ValueError(f"p must be 3, 5 or 7 (mod 8), got {p}")
    base = (p * p - 1) // 8
    offsets = [p * s + base for s in range(1, p)]
    if series is None:
        series = t_series(TuplePartitionSpec(2, 3), Ring.mod(8), p * p * n_max + offsets[-1])
    label = "thm1.3 window" if p <= 7 else "thm1.3 window (conjectural, p > 7)"
    reports = []
    for r in offsets:
        family = CongruenceFamily(
            TuplePartitionSpec(2, 3), p * p, r, 8, NFilter.all(), f"{label} p={p} r={r}"
        )
        n_top = min(n_max, family.max_n(series.order))
        reports.append(check_family(family, series, n_top))
    return reports
