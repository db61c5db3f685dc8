"""The omega-induced acyclic matching on the Taylor complex of E_q^3.

Nonfaces of the Scarf complex are split into classes Y(sigma): a cell
belongs to the class of the largest minimal nonface it contains. Inside
Y(sigma) the vertex omega(sigma) toggles, which pairs every nonface cell
with a partner. What is left unmatched is exactly the Scarf complex.

Cells are bitmasks over the points of N^3_q in decreasing order (bit k is
``enumerate_points(q, 3)[k]``). Every mask fits in an int64 for q <= 6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .errors import DomainError, InvariantViolation, ResourceLimitError
from .ideal import extremal_power, scarf_complex_bruteforce
from .lattice import Face, compare_points
from .r3 import D, catalog, kind

FULL_VERTEX_CAP = 20
MASK_Q_CAP = 6


@dataclass(frozen=True)
class NonfaceClass:
    """Type I, II or III together with the indices used by omega."""

    type: str
    i: int
    j: int | None
    n: tuple


def _in_Q(q, i, j, n) -> bool:
    k = kind(n)
    if k[0] == "D":
        a = k[1]
        return a != i and compare_points(D(q, i, j), n) > 0 and n != D(q, j, i)
    if k[0] == "S":
        return j in k[1] and i not in k[1]
    return False


def classify_nonface(sigma: Face) -> NonfaceClass:
    """Sort a minimal nonface into the three omega rules.

    Every matching rule is tried; exactly one must fire.
    """
    if sigma.r != 3:
        raise DomainError("classify_nonface is for r = 3")
    q = sigma.q
    if sigma not in _nonface_set(q):
        raise DomainError(f"{sigma} is not a minimal nonface")
    pts = sigma.points
    found = []
    if len(pts) == 2:
        top, n = pts
        kt = kind(top)
        if kt[0] == "T" and not (kind(n)[0] == "D" and kind(n)[1] == kt[1]):
            found.append(NonfaceClass("I", kt[1], None, n))
        for x, n in ((pts[0], pts[1]), (pts[1], pts[0])):
            kx = kind(x)
            if kx[0] == "D" and _in_Q(q, kx[1], kx[2], n):
                found.append(NonfaceClass("III", kx[1], kx[2], n))
    elif len(pts) == 3:
        for x in pts:
            kx = kind(x)
            if kx[0] != "D" or kx[1] > kx[2]:
                continue
            i, j = kx[1], kx[2]
            rest = [p for p in pts if p != x]
            if D(q, j, i) not in rest:
                continue
            n = next(p for p in rest if p != D(q, j, i))
            kn = kind(n)
            if kn[0] == "S" and not kn[1] & {i, j}:
                found.append(NonfaceClass("II", i, j, n))
    if len(found) != 1:
        raise InvariantViolation(f"{sigma} matched {len(found)} omega rules: {found}")
    return found[0]


def omega(sigma: Face, verbatim: bool = False) -> tuple:
    """The vertex that toggles inside the class of sigma.

    For Type III pairs {2e_i+e_j, 2e_c+e_d} with c, d outside {i, j} the
    third index must be c, the coordinate where n is 2: taking min(c, d)
    breaks divisibility of the label whenever d < c. ``verbatim=True``
    keeps the plain minimum for comparison.
    """
    c = classify_nonface(sigma)
    q = sigma.q
    supp = [k for k, x in enumerate(c.n) if x]
    w = [0] * q
    if c.type == "I":
        w[c.i] += 2
        w[min(k for k in supp if k != c.i)] += 1
    elif c.type == "II":
        w[c.i] += 1
        w[c.j] += 1
        w[min(supp)] += 1
    else:
        rest = [k for k in supp if k not in (c.i, c.j)]
        if not verbatim:
            top = max(c.n[k] for k in rest)
            rest = [k for k in rest if c.n[k] == top]
        w[c.i] += 1
        w[c.j] += 1
        w[min(rest)] += 1
    return tuple(w)


@lru_cache(maxsize=None)
def _nonface_set(q):
    return frozenset(f for _, f in catalog(q).nonfaces)


@lru_cache(maxsize=None)
def ordered_nonfaces(q: int) -> tuple:
    """Minimal nonfaces, largest first."""
    return tuple(sorted((f for _, f in catalog(q).nonfaces), reverse=True))


def partition_class(tau: Face, N=None) -> Face:
    """The largest minimal nonface contained in tau."""
    N = ordered_nonfaces(tau.q) if N is None else N
    pts = set(tau.points)
    for sigma in N:
        if set(sigma.points) <= pts:
            return sigma
    raise DomainError(f"{tau} is a Scarf face, it has no class")


# --- mask-level machinery -------------------------------------------------

@dataclass(frozen=True)
class _Tables:
    q: int
    n: int
    nonface_masks: np.ndarray  # largest first
    omega_bits: np.ndarray


@lru_cache(maxsize=None)
def _tables(q: int) -> _Tables:
    if q > MASK_Q_CAP:
        raise ResourceLimitError(f"cell masks are int64; q <= {MASK_Q_CAP}")
    cat = catalog(q)
    N = ordered_nonfaces(q)
    masks = np.array([cat.mask(f) for f in N], dtype=np.int64)
    bits = np.array([cat.index[omega(f)] for f in N], dtype=np.int64)
    return _Tables(q, len(cat.points), masks, bits)


def class_index(q: int, cells: np.ndarray) -> np.ndarray:
    """Index into ``ordered_nonfaces(q)`` of each cell's class, -1 for faces."""
    t = _tables(q)
    cells = np.asarray(cells, dtype=np.int64)
    out = np.full(len(cells), -1, dtype=np.int64)
    for k, nf in enumerate(t.nonface_masks):
        hit = (out < 0) & ((cells & nf) == nf)
        out[hit] = k
    return out


def class_stability(q: int, cells) -> np.ndarray:
    """Per nonface cell: adding and removing omega both keep the class."""
    t = _tables(q)
    cells = np.asarray(cells, dtype=np.int64)
    cls = class_index(q, cells)
    if (cls < 0).any():
        raise DomainError("class_stability takes nonface cells only")
    bit = np.left_shift(np.int64(1), t.omega_bits[cls])
    return (class_index(q, cells | bit) == cls) & (class_index(q, cells & ~bit) == cls)


def sample_nonfaces(q: int, count: int, seed: int) -> np.ndarray:
    """Random nonface cells: a random minimal nonface plus random extra vertices.

    Each sample draws its own inclusion density, so sizes spread from
    the bare nonface up to nearly every vertex.
    """
    t = _tables(q)
    rng = np.random.default_rng(seed)
    base = t.nonface_masks[rng.integers(len(t.nonface_masks), size=count)]
    density = rng.random(count)
    extra = rng.random((count, t.n)) < density[:, None]
    weights = np.left_shift(np.int64(1), np.arange(t.n, dtype=np.int64))
    return base | (extra.astype(np.int64) * weights).sum(1)


@dataclass(frozen=True)
class Matching:
    """Matched pairs (upper[k], lower[k]) with lower = upper minus one vertex.

    ``upper`` is sorted, so partner lookups are binary searches.
    """

    q: int
    upper: np.ndarray
    lower: np.ndarray

    def __len__(self):
        return len(self.upper)

    def pairs(self):
        cat = catalog(self.q)
        for u, d in zip(self.upper.tolist(), self.lower.tolist()):
            yield cat.face(u), cat.face(d)


def build_matching(q: int, cells=None) -> Matching:
    """Pair every nonface cell gamma with gamma xor omega(class).

    ``cells`` defaults to the whole Taylor complex (at most 20 vertices);
    otherwise it is an iterable of masks or Faces.
    """
    t = _tables(q)
    if cells is None:
        if t.n > FULL_VERTEX_CAP:
            raise ResourceLimitError(f"full enumeration needs at most {FULL_VERTEX_CAP} vertices, q={q} has {t.n}")
        cells = np.arange(1 << t.n, dtype=np.int64)
    else:
        cat = catalog(q)
        cells = np.array([cat.mask(c) if isinstance(c, Face) else int(c) for c in cells], dtype=np.int64)
    cls = class_index(q, cells)
    cells, cls = cells[cls >= 0], cls[cls >= 0]
    bit = np.left_shift(np.int64(1), t.omega_bits[cls])
    partner = cells ^ bit
    if (class_index(q, partner) != cls).any():
        bad = cells[class_index(q, partner) != cls][0]
        raise InvariantViolation(f"cell {int(bad):#x} would be matched twice")
    up = (cells & bit) != 0
    upper = np.unique(np.concatenate([cells[up], partner[~up]]))
    return Matching(q, upper, upper ^ np.left_shift(np.int64(1), t.omega_bits[class_index(q, upper)]))


def cell_labels(q: int, cells: np.ndarray) -> np.ndarray:
    """lcm labels of cells as rows of exponents over the x_A."""
    ideal = extremal_power(q, 3)
    G = ideal.matrix
    cells = np.asarray(cells, dtype=np.int64)
    out = np.zeros((len(cells), G.shape[1]), dtype=np.int64)
    for k in range(len(G)):
        on = ((cells >> k) & 1).astype(bool)
        out[on] = np.maximum(out[on], G[k])
    return out


def has_directed_cycle(cells: np.ndarray, upper: np.ndarray, lower: np.ndarray) -> bool:
    """Cycle test for the Hasse diagram with matched edges reversed.

    A directed cycle never climbs twice in a row, so it lives between two
    adjacent dimensions; each level pair is checked with a strongly
    connected component pass.
    """
    cells = np.unique(np.asarray(cells, dtype=np.int64))
    order = np.argsort(upper)
    upper, lower = np.asarray(upper)[order], np.asarray(lower)[order]
    size = np.zeros(len(cells), dtype=np.int64)
    nbits = int(cells.max()).bit_length() if len(cells) else 0
    for j in range(nbits):
        size += (cells >> j) & 1
    for k in range(1, int(size.max(initial=0)) + 1):
        top, bot = cells[size == k], cells[size == k - 1]
        if not len(top) or not len(bot):
            continue
        nodes = np.concatenate([top, bot])
        srt = np.argsort(nodes)
        src, dst = [], []
        for j in range(nbits):
            has = top[((top >> j) & 1) == 1]
            if not len(has):
                continue
            face = has ^ (np.int64(1) << j)
            pos = np.searchsorted(upper, has)
            pos_ok = pos < len(upper)
            matched = np.zeros(len(has), dtype=bool)
            matched[pos_ok] = (upper[pos[pos_ok]] == has[pos_ok]) & (lower[pos[pos_ok]] == face[pos_ok])
            src.append(np.where(matched, face, has))
            dst.append(np.where(matched, has, face))
        src, dst = np.concatenate(src), np.concatenate(dst)
        si = srt[np.searchsorted(nodes[srt], src)]
        di = srt[np.searchsorted(nodes[srt], dst)]
        if not (nodes[si] == src).all() or not (nodes[di] == dst).all():
            raise DomainError("cell set is not closed under taking facets")
        g = csr_matrix((np.ones(len(si), dtype=np.int8), (si, di)), shape=(len(nodes), len(nodes)))
        ncomp, _ = connected_components(g, directed=True, connection="strong")
        if ncomp < len(nodes):
            return True
    return False


@dataclass(frozen=True)
class Verdicts:
    acyclic: bool
    homogeneous: bool
    perfect: bool
    critical_equals_scarf: bool
    cells: int
    matched_pairs: int
    critical: int
    scarf_faces: int

    @property
    def ok(self) -> bool:
        return self.acyclic and self.homogeneous and self.perfect and self.critical_equals_scarf


def scarf_masks(q: int) -> np.ndarray:
    """Nonempty Scarf faces of E_q^3 by the label oracle, as sorted masks."""
    faces = scarf_complex_bruteforce(extremal_power(q, 3))
    return np.unique(np.array([sum(1 << v for v in f) for f in faces], dtype=np.int64))


def verify_matching(m: Matching, all_cells=None) -> Verdicts:
    """Acyclicity, label homogeneity and the critical-cell census."""
    t = _tables(m.q)
    if all_cells is None:
        if t.n > FULL_VERTEX_CAP:
            raise ResourceLimitError(f"full verification needs at most {FULL_VERTEX_CAP} vertices")
        all_cells = np.arange(1 << t.n, dtype=np.int64)
    all_cells = np.unique(np.asarray(all_cells, dtype=np.int64))
    homogeneous = bool((cell_labels(m.q, m.upper) == cell_labels(m.q, m.lower)).all())
    acyclic = not has_directed_cycle(all_cells, m.upper, m.lower)
    matched = np.concatenate([m.upper, m.lower])
    critical = np.setdiff1d(all_cells, matched)
    nonface = class_index(m.q, all_cells) >= 0
    perfect = bool(np.isin(all_cells[nonface], matched).all()) and len(np.unique(matched)) == len(matched)
    scarf = scarf_masks(m.q)
    crit = critical[critical != 0]
    return Verdicts(
        acyclic=acyclic,
        homogeneous=homogeneous,
        perfect=perfect,
        critical_equals_scarf=bool(np.array_equal(crit, scarf)),
        cells=len(all_cells),
        matched_pairs=len(m.upper),
        critical=len(crit),
        scarf_faces=len(scarf),
    )


def omega_divides_label(sigma: Face, verbatim: bool = False) -> bool:
    """epsilon^omega divides lcm(sigma); equivalently sigma + omega keeps the label."""
    ideal = extremal_power(sigma.q, 3)
    cat = catalog(sigma.q)
    idx = [cat.index[p] for p in sigma]
    w = cat.index[omega(sigma, verbatim)]
    label = ideal.matrix[idx].max(0)
    return bool((ideal.matrix[w] <= label).all())

