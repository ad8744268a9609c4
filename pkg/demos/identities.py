#!/usr/bin/env python3
"""Check the classical theta-style expansions against product expansions.

Each identity is computed two independent ways: once from its sparse
closed-form support (pentagonal or triangular numbers, squares), once
as a product or quotient of Pochhammer factors.  Exact equality of the
coefficient vectors is the whole point.
"""

import time

from tuplereg import Ring, identity_suite

for ring, order in ((Ring.integers(), 5000), (Ring.mod(24), 100_000)):
    t0 = time.perf_counter()
    results = identity_suite(ring, order)
    dt = time.perf_counter() - t0
    print(f"ring {ring}, order {order} ({dt:.2f}s)")
    for name, ok in results:
        print(f"  {'PASS' if ok else 'FAIL'}  {name}")
