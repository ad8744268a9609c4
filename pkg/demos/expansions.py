#!/usr/bin/env python3
"""Build a few q-series expansions and cross-check one against brute force.

Everything here is exact: integer coefficients over Z, canonical
residues over Z/mZ.
"""

from tuplereg import Ring, TuplePartitionSpec, eta_quotient, pochhammer, t_oracle, t_series
from tuplereg.etaq import EtaQuotientSpec

Z = Ring.integers()

# The q-Pochhammer factor f1 = (q;q)_inf has pentagonal-number support.
f1 = pochhammer(1, Z, 12)
print("f1          :", f1.coeffs)

# Its inverse generates the partition numbers p(n).
partitions = eta_quotient(EtaQuotientSpec.parse("1:-1"), Z, 12)
print("p(n)        :", partitions.coeffs)

# Triples of partitions into odd parts: the tuple-count series T_{2,3}.
spec = TuplePartitionSpec(2, 3)
t2 = t_series(spec, Z, 12)
print("T_{2,3}(n)  :", t2.coeffs)

# The same numbers by explicit enumeration of 2-regular partitions,
# a completely independent code path.
oracle = [t_oracle(spec, n) for n in range(13)]
print("enumeration :", oracle)
assert oracle == t2.coeffs

# Reduction mod 24 exposes the congruence at index 4 = 9*0 + 4.
t2_mod = t_series(spec, Ring.mod(24), 12)
print("T mod 24    :", t2_mod.coeffs)
