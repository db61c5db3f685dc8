#!/usr/bin/env python3
"""Walk through the face test on a few small vertex sets.

A set of exponent vectors is a Scarf face exactly when no sub-collection
traps another lattice point between its min and max dot products. The
script prints the verdict of both oracles and, for nonfaces, the point
that gets trapped.
"""

from scarflab.ideal import extremal_power, is_scarf_face_by_labels
from scarflab.lattice import Face, enumerate_points
from scarflab.scarfgeo import find_witness, polytope_lattice_points, u_complex_facets

CASES = [
    ("parallelogram in N^2_3", [(0, 0, 2), (1, 1, 0)]),
    ("central triangle in N^2_3", [(1, 1, 0), (1, 0, 1), (0, 1, 1)]),
    ("corner against a far vertex", [(3, 0, 0, 0), (1, 0, 1, 1)]),
    ("a triangle in N^4_4", [(2, 1, 1, 0), (2, 0, 1, 1), (1, 1, 1, 1)]),
    ("the lone triangle nonface", [(2, 1, 0, 0, 0), (1, 2, 0, 0, 0), (0, 0, 1, 1, 1)]),
]


def show(title, pts):
    face = Face(pts)
    index = {p: k for k, p in enumerate(enumerate_points(face.q, face.r))}
    by_labels = is_scarf_face_by_labels(extremal_power(face.q, face.r), [index[p] for p in face])
    rep = find_witness(face)
    print(f"{title}: {[list(p) for p in face]}")
    print(f"  labels say {'face' if by_labels else 'nonface'}; geometry says {'face' if rep is None else 'nonface'}")
    if rep is not None:
        sub = [list(face.points[k]) for k in rep.subset]
        print(f"  {list(rep.witness)} sits between the bounds of {sub}")
    pts_inside = sorted(polytope_lattice_points(face), reverse=True)
    print(f"  lattice points in the sandwich: {[list(p) for p in pts_inside]}")


if __name__ == "__main__":
    for title, pts in CASES:
        show(title, pts)
    print()
    for q, r in [(3, 2), (4, 3)]:
        facets = u_complex_facets(q, r)
        sizes = sorted(len(f) for f in facets)
        print(f"U-complex facets for q={q}, r={r}: {len(facets)} facets, sizes {sizes}")
