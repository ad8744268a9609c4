#!/usr/bin/env python3
"""Rediscover the observed mod-32 windows and audit the mod-512 near-miss.

The scanner sweeps every residue class of a step range against a list
of candidate moduli on one precomputed series; only maximal passing
moduli are reported.  The audit lists every violation of a congruence
that holds with exceptions.
"""

from tuplereg import Ring, ScanJob, TuplePartitionSpec, audit_exceptions, scan, t_series

spec = TuplePartitionSpec(2, 3)
series = t_series(spec, Ring.mod(64), 100_000)

for step in (25, 49):
    job = ScanJob(spec, (step, step), (32, 64), (100_000 - step + 1) // step)
    for fam in scan(job, series):
        print(f"step {fam.A:>2}: class {fam.B:>2} vanishes mod {fam.M}")

# T_2(7n+6) is divisible by 512 for most but not all n
report = audit_exceptions(spec, 7, 6, 512, 2000)
print()
print(f"audit T_2(7n+6) mod 512, n <= 2000: status {report.status}")
print(f"{len(report.exceptions)} exceptions; first few n:",
      [n for n, _, _ in report.exceptions[:8]])
