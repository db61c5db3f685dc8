"""Half-space geometry of faces: witnesses, polytope lattice points, U-complexes.

A face sigma of the Taylor complex of E_q^r is Scarf iff for every subset C
of sigma the only lattice points w of N^r_q with

    min_{a in C} a.e_A <= w.e_A <= max_{a in C} a.e_A   for all A

are the points of C. Any other such w is a witness against sigma.

Subsets A of the coordinates are bitmasks (bit i is coordinate i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import DomainError, ResourceLimitError
from .lattice import Face, check_point, enumerate_points, orbit_key, point_key

Q_CAP = 12
FACE_CAP = 22
_CELLS_PER_CHUNK = 1 << 22


def dot_eA(a, A: Iterable[int]) -> int:
    return sum(a[i] for i in set(A))


def project_direction(A: Iterable[int], q: int) -> tuple:
    """e_A minus its component along the all-ones vector, exactly."""
    A = set(A)
    share = Fraction(len(A), q)
    return tuple((1 if i in A else 0) - share for i in range(q))


@lru_cache(maxsize=None)
def _indicator(q: int) -> np.ndarray:
    """(2^q, q) matrix; row m is the indicator of mask m, row 0 is empty."""
    masks = np.arange(1 << q, dtype=np.int64)
    return ((masks[:, None] >> np.arange(q)) & 1).astype(np.int64)


def _check_size(face: Face):
    if face.q > Q_CAP:
        raise ResourceLimitError(f"q={face.q} exceeds the geometric-test cap {Q_CAP}")
    if len(face) > FACE_CAP:
        raise ResourceLimitError(f"face of size {len(face)} exceeds the cap {FACE_CAP}")


@dataclass(frozen=True)
class HalfspaceSystem:
    """Per-mask bounds lo[A] <= w.e_A <= hi[A] spanned by a face."""

    face: Face
    lo: tuple
    hi: tuple


def halfspace_system(face: Face) -> HalfspaceSystem:
    if not len(face):
        raise DomainError("the empty face spans no system")
    _check_size(face)
    dots = np.array(face.points) @ _indicator(face.q).T
    return HalfspaceSystem(face, tuple(int(x) for x in dots.min(0)), tuple(int(x) for x in dots.max(0)))


def box_points(lo, hi, r: int) -> list:
    """Integer vectors with lo <= w <= hi coordinatewise and sum r, largest first."""
    q = len(lo)
    # suffix sums for feasibility pruning
    lo_tail = [0] * (q + 1)
    hi_tail = [0] * (q + 1)
    for i in range(q - 1, -1, -1):
        lo_tail[i] = lo_tail[i + 1] + lo[i]
        hi_tail[i] = hi_tail[i + 1] + hi[i]
    out = []
    w = [0] * q

    def rec(i, left):
        if i == q:
            if left == 0:
                out.append(tuple(w))
            return
        for x in range(max(lo[i], left - hi_tail[i + 1]), min(hi[i], left - lo_tail[i + 1]) + 1):
            w[i] = x
            rec(i + 1, left - x)

    rec(0, r)
    out.sort(key=point_key, reverse=True)
    return out


class _Engine:
    """Vectorized sandwich tests for all subsets C of one face."""

    def __init__(self, face: Face):
        _check_size(face)
        self.face = face
        q, r = face.q, face.r
        P = np.array(face.points, dtype=np.int64).reshape(len(face), q)
        # singleton-A bounds of the whole face contain those of any subset
        self.cands = box_points(P.min(0).tolist(), P.max(0).tolist(), r)
        E = _indicator(q)
        self.PD = P @ E.T
        self.WD = np.array(self.cands, dtype=np.int64).reshape(len(self.cands), q) @ E.T
        where = {p: j for j, p in enumerate(face.points)}
        self.cand_pos = np.array([where.get(w, -1) for w in self.cands], dtype=np.int64)

    def witnesses(self, Cs: np.ndarray) -> np.ndarray:
        """Boolean (len(Cs), n_cands): candidate is a witness for subset C."""
        n, nA = len(Cs), self.PD.shape[1]
        lo = np.full((n, nA), np.iinfo(np.int64).max)
        hi = np.full((n, nA), -1)
        for j in range(len(self.face)):
            sel = ((Cs >> j) & 1).astype(bool)
            lo[sel] = np.minimum(lo[sel], self.PD[j])
            hi[sel] = np.maximum(hi[sel], self.PD[j])
        inside = ((self.WD[None] >= lo[:, None]) & (self.WD[None] <= hi[:, None])).all(-1)
        pos = np.where(self.cand_pos < 0, 0, self.cand_pos)
        member = (self.cand_pos >= 0)[None] & (((Cs[:, None] >> pos[None]) & 1) == 1)
        return inside & ~member

    def chunk(self) -> int:
        per = max(1, len(self.cands) * self.PD.shape[1])
        return max(1, _CELLS_PER_CHUNK // per)


@dataclass(frozen=True)
class WitnessReport:
    """A lattice point certifying that ``face`` is not Scarf.

    ``subset`` indexes ``face.points``; ``full_face`` says whether the
    subset is the whole face.
    """

    witness: tuple
    subset: tuple
    full_face: bool
    face: Face


def find_witness(face: Face):
    """First witness in a fixed order, or None when the face is Scarf.

    Subsets C go by decreasing size, then lexicographically; candidates
    for a given C are scanned from largest to smallest point.
    """
    if not len(face):
        raise DomainError("find_witness needs a nonempty face")
    d = len(face)
    if d < 2:
        return None
    eng = _Engine(face)
    step = eng.chunk()
    for k in range(d, 1, -1):
        combos = combinations(range(d), k)
        while True:
            block = [c for _, c in zip(range(step), combos)]
            if not block:
                break
            Cs = np.array([sum(1 << j for j in c) for c in block], dtype=np.int64)
            hits = eng.witnesses(Cs)
            rows = np.flatnonzero(hits.any(1))
            if len(rows):
                row = rows[0]
                w = eng.cands[int(np.flatnonzero(hits[row])[0])]
                return WitnessReport(w, block[row], k == d, face)
    return None


@lru_cache(maxsize=32)
def _masks_by_size(d: int) -> np.ndarray:
    masks = np.arange(1 << d, dtype=np.int64)
    size = np.zeros_like(masks)
    for j in range(d):
        size += (masks >> j) & 1
    order = np.argsort(size, kind="stable")
    masks, size = masks[order], size[order]
    return masks[size >= 2]


_status_cache: dict = {}


def is_scarf_face_geometric(face: Face, use_cache: bool = True) -> bool:
    """True iff no subset of the face admits a witness.

    Results are cached per ``orbit_key``; pass ``use_cache=False`` when the
    point is to test orbit invariance itself.
    """
    if len(face) < 2:
        return True
    key = orbit_key(face)
    hit = _status_cache.get(key) if use_cache else None
    if hit is not None:
        return hit
    eng = _Engine(face)
    masks = _masks_by_size(len(face))
    step = eng.chunk()
    ok = True
    # small subsets first: non-faces usually fail on an edge or triangle
    for start in range(0, len(masks), step):
        if eng.witnesses(masks[start:start + step]).any():
            ok = False
            break
    if use_cache:
        if len(_status_cache) > 500_000:
            _status_cache.clear()
        _status_cache[key] = ok
    return ok


def polytope_lattice_points(face: Face) -> set:
    """Lattice points of N^r_q inside the min-max sandwich of the face."""
    sys = halfspace_system(face)
    q = face.q
    singles = [1 << i for i in range(q)]
    cands = box_points([sys.lo[m] for m in singles], [sys.hi[m] for m in singles], face.r)
    if not cands:
        return set()
    WD = np.array(cands) @ _indicator(q).T
    ok = ((WD >= np.array(sys.lo)) & (WD <= np.array(sys.hi))).all(1)
    return {w for w, keep in zip(cands, ok) if keep}


def one_sided_points(face: Face) -> set:
    """Lattice points w with w.e_A <= max_a a.e_A for all A (upper bounds only)."""
    sys = halfspace_system(face)
    q = face.q
    cands = box_points([0] * q, [sys.hi[1 << i] for i in range(q)], face.r)
    if not cands:
        return set()
    WD = np.array(cands) @ _indicator(q).T
    ok = (WD <= np.array(sys.hi)).all(1)
    return {w for w, keep in zip(cands, ok) if keep}


# --- U-complexes ----------------------------------------------------------

def u_facet(a, r: int) -> Face:
    """a + (all square-free vectors with r - |a| ones)."""
    a = check_point(a)
    q, k = len(a), r - sum(a)
    if k < 1 or k > q:
        raise DomainError(f"no square-free layer of weight {k} in {q} coordinates")
    pts = []
    for S in combinations(range(q), k):
        p = list(a)
        for i in S:
            p[i] += 1
        pts.append(tuple(p))
    return Face(pts, q, r)


def u_complex_facets(q: int, r: int) -> list:
    """Generating facets U_a^r for r - q < |a| < r."""
    if q < 1 or r < 1:
        raise DomainError("u_complex_facets needs q, r >= 1")
    if q == 1:
        # the range r - 1 < |a| < r is empty, but the lone point is a vertex
        return [Face([(r,)], 1, r)]
    out = []
    for s in range(max(0, r - q + 1), r):
        for a in enumerate_points(q, s):
            out.append(u_facet(a, r))
    return list(dict.fromkeys(out))


def closure_f_vector(facets: Iterable[Face]) -> list:
    """f-vector of the simplicial complex generated by the given faces."""
    facets = list(facets)
    index = {}
    for f in facets:
        for p in f:
            index.setdefault(p, len(index))
    masks = [sum(1 << index[p] for p in f) for f in facets]
    return submask_f_vector(masks)


def submask_f_vector(masks: Iterable[int]) -> list:
    """Face counts by dimension of the union of all submasks (empty excluded)."""
    seen = set()
    for m in set(masks):
        s = m
        while s:
            seen.add(s)
            s = (s - 1) & m
    counts = {}
    for s in seen:
        k = s.bit_count()
        counts[k] = counts.get(k, 0) + 1
    top = max(counts, default=0)
    return [counts.get(k, 0) for k in range(1, top + 1)]
