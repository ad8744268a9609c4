#!/usr/bin/env python3
"""Verify the headline congruence families on a medium range.

One series mod 24 serves every mod-24/8/6 family; each family is an
arithmetic progression An + B whose coefficients must all vanish mod M
for admissible n.
"""

from tuplereg import (
    Ring,
    TuplePartitionSpec,
    check_family,
    family_cor14,
    family_nss_13,
    family_nss_16,
    family_thm12,
    family_thm13,
    t_series,
)
from tuplereg.records import format_report, summary_table

series = t_series(TuplePartitionSpec(2, 3), Ring.mod(24), 50_000)

families = [
    family_nss_13("first", 0),
    family_nss_13("second", 0),
    family_thm12(33, 1),
    family_thm12(57, 5),
    family_thm13(3, 0, "mod8"),
    family_thm13(5, 0, "mod24"),
    family_cor14(7, 0),
    family_nss_16(5, 0),
]

reports = [check_family(fam, series) for fam in families]
for report in reports:
    fam = report.family
    print(f"{report.status:<5} A={fam.A:<3} B={fam.B:<4} M={fam.M:<3} [{fam.provenance}]")

print()
print(summary_table(reports))

# the line-oriented records format, for machine diffing
print()
for line in format_report(reports[2]):
    print(line)
