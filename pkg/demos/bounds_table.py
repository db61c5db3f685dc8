#!/usr/bin/env python3
"""Compare the Scarf count with the L-complex and Taylor counts.

Prints the q = 6 table, the exact ratios, and the shape of the betti
vectors up to q = 8. Everything is exact integer arithmetic.
"""

from scarflab.bounds import bound_table, betti_vector, pd_bound, ratio_diagnostics

print(f"{'i':>3} {'scarf':>8} {'L':>16} {'Taylor':>18}")
for row in bound_table(6, 3, [2, 3, 4, 19, 20, 39, 40]):
    print(f"{row.i:>3} {row.scarf:>8} {row.l:>16} {row.taylor:>18}")

d = ratio_diagnostics(6)
print(f"\nlargest Taylor/Scarf ratio at q=6: {float(d['max_taylor_ratio']):.4g}")
print(f"largest L/Scarf ratio at q=6: {float(d['max_l_ratio']):.4g}")

print("\nq  pd  top  log-concave  unimodal")
for q in range(1, 9):
    bv = betti_vector(q, 3)
    print(f"{q:<2} {pd_bound(q, 3):>3} {bv.top_value:>4}  {bv.log_concave!s:<11}  {bv.unimodal}")
