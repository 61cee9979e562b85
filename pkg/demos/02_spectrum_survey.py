"""
Which complexities occur in S_n?
================================

Scan every permutation for small n, print the achieved values with the
lexicographically first witness, and check the classification statements.
"""

import time

from msv_complexity.survey import TheoremId, spectrum, verify

for n in range(3, 8):
    t0 = time.perf_counter()
    res = spectrum(n)
    dt = time.perf_counter() - t0
    print(f"n={n}: {res.total_enumerated} permutations in {dt:.2f}s")
    print("   achieved:", list(res.achieved))
    print("   maximizers:", [w.one_line() for w in res.maximizers][:3])
    if n >= 4:
        for tid in TheoremId:
            print("  ", verify(tid, n, result=res).line())

# how often each value occurs in S_6
res = spectrum(6)
for d in res.achieved:
    print(f"{d:>3} {'#' * max(1, res.counts[d] // 5)} {res.counts[d]}")
