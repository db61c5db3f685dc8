#!/usr/bin/env python3
"""Tour of the cube case: facets, minimal nonfaces and the f-vector.

For r = 3 every vertex is 3e_a, 2e_a+e_b or a square-free triple. The
catalog below lists facets by family and checks it against the
geometric face test, then counts faces by dimension.
"""

from collections import Counter

from scarflab.bounds import beta_bound
from scarflab.r3 import f_vector_enumerated, facets_r3, minimal_nonfaces_r3
from scarflab.scarfgeo import is_scarf_face_geometric

for q in range(3, 7):
    facets = facets_r3(q)
    fams = Counter(d.family for d, _ in facets)
    nonfaces = Counter(d.template for d, _ in minimal_nonfaces_r3(q))
    sound = all(is_scarf_face_geometric(f) for _, f in facets)
    print(f"q={q}: {len(facets)} facets {dict(fams)}")
    print(f"  all facets pass the geometric test: {sound}")
    print(f"  minimal nonfaces: {sum(nonfaces.values())} across {len(nonfaces)} templates")
    f = f_vector_enumerated(q)
    formula = [beta_bound(q, 3, i) for i in range(len(f))]
    print(f"  f-vector {f}")
    print(f"  closed form agrees: {f == formula}")

# the first facets outside the U-complex appear at q = 5
W = [(d, f) for d, f in facets_r3(5) if d.family == "W_{P,a}"]
d, f = W[0]
print(f"\nexample W facet, P={d.params[0]}, a={d.params[1]}:")
for p in f:
    print("  ", p)
