#!/usr/bin/env python3
"""Build the omega matching on the Taylor complex and check it.

Every nonface cell is paired by toggling one vertex chosen from its
class. The matching should be acyclic, keep lcm labels, and leave
exactly the Scarf faces unmatched.
"""

import time

from scarflab.morse import (
    build_matching,
    class_stability,
    classify_nonface,
    omega,
    ordered_nonfaces,
    sample_nonfaces,
    verify_matching,
)

q = 4
print(f"largest minimal nonfaces of the cube case, q={q}:")
for sigma in ordered_nonfaces(q)[:5]:
    c = classify_nonface(sigma)
    print(f"  {[list(p) for p in sigma]}  type {c.type}, omega {list(omega(sigma))}")

for q in range(2, 5):
    t = time.perf_counter()
    v = verify_matching(build_matching(q))
    print(
        f"q={q}: {v.cells} cells, {v.matched_pairs} pairs, {v.critical} critical"
        f" (Scarf faces {v.scarf_faces}); acyclic={v.acyclic} homogeneous={v.homogeneous}"
        f" [{time.perf_counter() - t:.1f}s]"
    )

# q = 5 has 2^35 cells; sample nonfaces and test class stability instead
cells = sample_nonfaces(5, 10_000, seed=7)
ok = class_stability(5, cells)
print(f"q=5: {int(ok.sum())}/{len(ok)} sampled nonfaces keep their class under the toggle")
