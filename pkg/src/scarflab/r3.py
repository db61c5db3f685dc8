"""The combinatorial catalog of the Scarf complex of E_q^3.

Every point of N^3_q is one of three kinds:
  T(a)        = 3e_a
  D(a, b)     = 2e_a + e_b
  S({i,j,k})  = e_i + e_j + e_k

Facets, minimal nonfaces and edge templates are written in those terms.
Indices are 0-based; template strings use the usual letters.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations

from .errors import DomainError, InvariantViolation, ResourceLimitError
from .lattice import Face, enumerate_points
from .scarfgeo import submask_f_vector

FVECTOR_Q_CAP = 6


def T(q, a):
    p = [0] * q
    p[a] = 3
    return tuple(p)


def D(q, a, b):
    p = [0] * q
    p[a], p[b] = 2, 1
    return tuple(p)


def S(q, idx):
    p = [0] * q
    for i in idx:
        p[i] = 1
    return tuple(p)


def kind(p):
    """('T', a), ('D', a, b) or ('S', frozenset of support)."""
    top = max(p)
    if top == 3:
        return ("T", p.index(3))
    if top == 2:
        return ("D", p.index(2), p.index(1))
    return ("S", frozenset(i for i, x in enumerate(p) if x))


# --- edges ----------------------------------------------------------------

@dataclass(frozen=True)
class EdgeType:
    is_edge: bool
    template: str


def edge_type(a, b) -> EdgeType:
    """Match a pair of distinct points of N^3_q against the edge templates."""
    a, b = tuple(a), tuple(b)
    if sum(a) != 3 or sum(b) != 3:
        raise DomainError("edge_type is defined for r = 3 only")
    if len(a) != len(b) or a == b:
        raise DomainError("edge_type needs two distinct points with the same q")
    order = {"T": 0, "D": 1, "S": 2}
    x, y = sorted((kind(a), kind(b)), key=lambda k: order[k[0]])
    edge = lambda t: EdgeType(True, t)  # noqa: E731
    non = lambda t: EdgeType(False, t)  # noqa: E731

    if x[0] == "T" and y[0] == "T":
        return non("{3e_a, 3e_b}")
    if x[0] == "T" and y[0] == "D":
        u, (i, j) = x[1], y[1:]
        if i == u:
            return edge("{3e_u, 2e_u+e_j}")
        if j == u:
            return non("{3e_a, e_a+2e_b}")
        return non("{3e_a, 2e_b+e_c}")
    if x[0] == "T":
        return non("{3e_a, e_a+e_b+e_c}" if x[1] in y[1] else "{3e_a, e_b+e_c+e_d}")
    if x[0] == "D" and y[0] == "D":
        (u, i), (v, j) = x[1:], y[1:]
        if u == v:
            return edge("{2e_u+e_i, 2e_u+e_j}")
        if i == v and j == u:
            return edge("{2e_u+e_i, 2e_i+e_u}")
        if i == v or j == u:
            return non("{2e_a+e_b, 2e_b+e_c}")
        if i == j:
            return non("{2e_a+e_b, e_b+2e_c}")
        return non("{2e_a+e_b, 2e_c+e_d}")
    if x[0] == "D":
        (u, i), sup = x[1:], y[1]
        if u in sup and i in sup:
            return edge("{2e_u+e_i, e_u+e_i+e_j}")
        if u in sup:
            return edge("{2e_u+e_i, e_u+e_j+e_k}")
        if i in sup:
            return non("{2e_a+e_b, e_b+e_c+e_d}")
        return edge("{2e_i+e_j, e_u+e_v+e_w}")
    shared = len(x[1] & y[1])
    return edge(
        ("{e_i+e_j+e_k, e_u+e_v+e_w}", "{e_u+e_i+e_j, e_u+e_v+e_w}", "{e_u+e_v+e_i, e_u+e_v+e_j}")[shared]
    )


EDGE_TEMPLATES = (
    "{3e_u, 2e_u+e_j}",
    "{2e_u+e_i, 2e_u+e_j}",
    "{2e_u+e_i, 2e_i+e_u}",
    "{2e_u+e_i, e_u+e_i+e_j}",
    "{2e_u+e_i, e_u+e_j+e_k}",
    "{2e_i+e_j, e_u+e_v+e_w}",
    "{e_i+e_j+e_k, e_u+e_v+e_w}",
    "{e_u+e_i+e_j, e_u+e_v+e_w}",
    "{e_u+e_v+e_i, e_u+e_v+e_j}",
)


def edge_instances(q: int) -> set:
    """All Scarf edges of E_q^3 generated directly from the templates."""
    out = set()
    idx = range(q)
    for u, j in permutations(idx, 2):
        out.add(frozenset((T(q, u), D(q, u, j))))
        out.add(frozenset((D(q, u, j), D(q, j, u))))
    for u, i, j in permutations(idx, 3):
        out.add(frozenset((D(q, u, i), D(q, u, j))))
        out.add(frozenset((D(q, u, i), S(q, (u, i, j)))))
    for u, i in permutations(idx, 2):
        rest = [x for x in idx if x not in (u, i)]
        for j, k in combinations(rest, 2):
            out.add(frozenset((D(q, u, i), S(q, (u, j, k)))))
        for trip in combinations(rest, 3):
            out.add(frozenset((D(q, u, i), S(q, trip))))
    for s, t in combinations(list(combinations(idx, 3)), 2):
        if len(set(s) & set(t)) in (0, 1, 2):
            out.add(frozenset((S(q, s), S(q, t))))
    return out


# --- facets ---------------------------------------------------------------

@dataclass(frozen=True)
class FacetDescriptor:
    family: str
    params: tuple
    q: int


def w_facet(P, a: int, q: int) -> Face:
    """W_{P,a}: D(a, j) for j in P - a, triples off P, triples through a."""
    P = set(P)
    if a not in P or not P <= set(range(q)):
        raise DomainError("w_facet needs a in P, P inside the coordinates")
    pts = [D(q, a, j) for j in sorted(P - {a})]
    pts += [S(q, t) for t in combinations(sorted(set(range(q)) - P), 3)]
    others = [x for x in range(q) if x != a]
    pts += [S(q, (a, j, k)) for j, k in combinations(others, 2)]
    return Face(pts, q, 3)


def _facets(q):
    out = []
    for a in range(q):
        out.append((FacetDescriptor("U_{2e_a}", (a,), q), Face([D(q, a, i) if i != a else T(q, a) for i in range(q)], q, 3)))
    if q >= 2:
        for a, b in combinations(range(q), 2):
            pts = [tuple(int(x == a) + int(x == b) + int(x == i) for x in range(q)) for i in range(q)]
            out.append((FacetDescriptor("U_{e_a+e_b}", (a, b), q), Face(pts, q, 3)))
    if q >= 3:
        for a in range(q):
            pts = [tuple(int(x == a) + int(x == i) + int(x == j) for x in range(q)) for i, j in combinations(range(q), 2)]
            out.append((FacetDescriptor("U_{e_a}", (a,), q), Face(pts, q, 3)))
    if q >= 4:
        out.append((FacetDescriptor("U_q", (), q), Face([S(q, t) for t in combinations(range(q), 3)], q, 3)))
    if q >= 5:
        for size in range(2, q - 2):
            for P in combinations(range(q), size):
                for a in P:
                    out.append((FacetDescriptor("W_{P,a}", (P, a), q), w_facet(P, a, q)))
    seen, uniq = set(), []
    for desc, face in out:
        if face not in seen:
            seen.add(face)
            uniq.append((desc, face))
    return uniq


# --- minimal nonfaces -----------------------------------------------------

@dataclass(frozen=True)
class NonfaceDescriptor:
    template: str
    params: tuple


def _nonfaces(q):
    out = {}

    def put(tmpl, params, pts):
        out.setdefault(Face(pts, q, 3), NonfaceDescriptor(tmpl, params))

    idx = range(q)
    for a, b in combinations(idx, 2):
        put("{3e_a, 3e_b}", (a, b), [T(q, a), T(q, b)])
    for a, b in permutations(idx, 2):
        put("{3e_a, e_a+2e_b}", (a, b), [T(q, a), D(q, b, a)])
    for a, b, c in permutations(idx, 3):
        put("{3e_a, 2e_b+e_c}", (a, b, c), [T(q, a), D(q, b, c)])
        put("{2e_a+e_b, 2e_b+e_c}", (a, b, c), [D(q, a, b), D(q, b, c)])
        if a < c:
            put("{2e_a+e_b, e_b+2e_c}", (a, b, c), [D(q, a, b), D(q, c, b)])
    for a in idx:
        rest = [x for x in idx if x != a]
        for b, c in combinations(rest, 2):
            put("{3e_a, e_a+e_b+e_c}", (a, b, c), [T(q, a), S(q, (a, b, c))])
        for t in combinations(rest, 3):
            put("{3e_a, e_b+e_c+e_d}", (a,) + t, [T(q, a), S(q, t)])
    for a, b, c, d in permutations(idx, 4):
        put("{2e_a+e_b, 2e_c+e_d}", (a, b, c, d), [D(q, a, b), D(q, c, d)])
    for a, b in permutations(idx, 2):
        rest = [x for x in idx if x not in (a, b)]
        for c, d in combinations(rest, 2):
            put("{2e_a+e_b, e_b+e_c+e_d}", (a, b, c, d), [D(q, a, b), S(q, (b, c, d))])
    for a, b in combinations(idx, 2):
        rest = [x for x in idx if x not in (a, b)]
        for t in combinations(rest, 3):
            put("{2e_a+e_b, e_a+2e_b, e_c+e_d+e_e}", (a, b) + t, [D(q, a, b), D(q, b, a), S(q, t)])
    return list(out.items())


# --- the cached catalog ---------------------------------------------------

@dataclass(frozen=True)
class Catalog:
    q: int
    points: tuple
    index: dict
    facets: tuple  # (FacetDescriptor, Face)
    nonfaces: tuple  # (NonfaceDescriptor, Face)
    facet_masks: tuple
    nonface_masks: tuple

    def mask(self, face: Face) -> int:
        return sum(1 << self.index[p] for p in face)

    def face(self, mask: int) -> Face:
        return Face([p for k, p in enumerate(self.points) if mask >> k & 1], self.q, 3)


@lru_cache(maxsize=None)
def catalog(q: int) -> Catalog:
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    pts = enumerate_points(q, 3)
    index = {p: k for k, p in enumerate(pts)}
    facets = tuple(_facets(q))
    nonfaces = tuple(_nonfaces(q))
    fm = tuple(sum(1 << index[p] for p in f) for _, f in facets)
    nm = tuple(sum(1 << index[p] for p in f) for f, _ in nonfaces)
    return Catalog(q, pts, index, facets, tuple((d, f) for f, d in nonfaces), fm, nm)


def facets_r3(q: int) -> list:
    return list(catalog(q).facets)


def minimal_nonfaces_r3(q: int) -> list:
    return list(catalog(q).nonfaces)


def is_face_r3(face: Face) -> bool:
    """Face test by the catalog, computed two ways that must agree."""
    if face.r != 3:
        raise DomainError("is_face_r3 needs r = 3")
    cat = catalog(face.q)
    m = cat.mask(face)
    inside_facet = any(m & f == m for f in cat.facet_masks)
    avoids_nonfaces = not any(m & n == n for n in cat.nonface_masks)
    if inside_facet != avoids_nonfaces:
        raise InvariantViolation(f"facet and nonface routes disagree on {face}")
    return inside_facet


def f_vector_enumerated(q: int) -> list:
    """f-vector of the Scarf complex of E_q^3 by scanning every facet."""
    if q > FVECTOR_Q_CAP:
        raise ResourceLimitError(f"enumeration is capped at q <= {FVECTOR_Q_CAP}")
    return submask_f_vector(catalog(q).facet_masks)
