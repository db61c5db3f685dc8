"""Monomials, monomial ideals, lcm labels and homogenized chain complexes.

Monomials are dense exponent tuples over an ideal's variable list. For the
extremal ideal E_q the variables are x_A for the nonempty subsets A of the
q coordinates; x_A sits at index ``mask(A) - 1`` where bit i of the mask
marks coordinate i.

Faces in this module are sets of 0-based generator indices, so everything
here works for any monomial ideal, not just powers of E_q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, ResourceLimitError
from .lattice import check_point, enumerate_points

EXTREMAL_Q_CAP = 16


@dataclass(frozen=True)
class Monomial:
    exponents: tuple

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def from_powers(cls, names: Sequence[str], powers: Mapping[str, int]) -> "Monomial":
        idx = {n: i for i, n in enumerate(names)}
        exps = [0] * len(names)
        for name, k in powers.items():
            exps[idx[name]] += k
        return cls(tuple(exps))

    def divides(self, other: "Monomial") -> bool:
        return all(x <= y for x, y in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(x + y for x, y in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; raises when ``other`` does not divide ``self``."""
        out = tuple(x - y for x, y in zip(self.exponents, other.exponents))
        if any(x < 0 for x in out):
            raise DomainError("monomial quotient is not exact")
        return Monomial(out)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def support(self) -> dict:
        """Sparse view: variable index -> positive exponent."""
        return {i: e for i, e in enumerate(self.exponents) if e}

    def format(self, names: Sequence[str]) -> str:
        parts = []
        for i, e in self.support().items():
            parts.append(names[i] if e == 1 else f"{names[i]}^{e}")
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    generators: tuple
    names: tuple
    minimal: bool = False

    @classmethod
    def from_generators(cls, gens: Iterable[Monomial], names: Sequence[str]) -> "MonomialIdeal":
        gens = tuple(gens)
        for g in gens:
            if len(g.exponents) != len(names):
                raise DomainError("generator length does not match variable count")
        return cls(gens, tuple(names), _is_minimal(gens))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def __len__(self):
        return len(self.generators)

    @cached_property
    def matrix(self) -> np.ndarray:
        rows = [g.exponents for g in self.generators]
        return np.array(rows, dtype=np.int64).reshape(len(rows), self.nvars)

    def minimalized(self) -> "MonomialIdeal":
        keep = []
        for i, g in enumerate(self.generators):
            dominated = any(
                h.divides(g) and (h != g or j < i)
                for j, h in enumerate(self.generators) if j != i
            )
            if not dominated:
                keep.append(g)
        return MonomialIdeal(tuple(keep), self.names, True)


def _is_minimal(gens) -> bool:
    for g, h in combinations(gens, 2):
        if g.divides(h) or h.divides(g):
            return False
    return True


# --- extremal ideals ------------------------------------------------------

def subset_name(mask: int, q: int) -> str:
    idx = [str(i + 1) for i in range(q) if mask >> i & 1]
    return "x_" + ("".join(idx) if q < 10 else "{" + ",".join(idx) + "}")


def _check_q(q: int):
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    if q > EXTREMAL_Q_CAP:
        raise ResourceLimitError(f"q={q} exceeds the cap of {EXTREMAL_Q_CAP} (2^q - 1 variables)")


def subset_matrix(q: int) -> np.ndarray:
    """Row ``m - 1`` is the 0/1 indicator of the nonempty subset with mask m."""
    masks = np.arange(1, 1 << q, dtype=np.int64)
    return ((masks[:, None] >> np.arange(q)) & 1).astype(np.int64)


def extremal_names(q: int) -> tuple:
    return tuple(subset_name(m, q) for m in range(1, 1 << q))


def extremal_power_generator(q: int, r: int, a) -> Monomial:
    """epsilon^a: the exponent of x_A is the sum of a_i over i in A."""
    _check_q(q)
    a = check_point(a, q, r)
    return Monomial(tuple(int(x) for x in subset_matrix(q) @ np.array(a)))


def extremal_ideal(q: int) -> MonomialIdeal:
    _check_q(q)
    gens = [extremal_power_generator(q, 1, tuple(int(i == j) for j in range(q))) for i in range(q)]
    return MonomialIdeal(tuple(gens), extremal_names(q), True)


def extremal_power(q: int, r: int) -> MonomialIdeal:
    """E_q^r with generator k equal to epsilon^a for a = enumerate_points(q, r)[k].

    So generator index order is the decreasing point order.
    """
    _check_q(q)
    pts = enumerate_points(q, r)
    exps = np.array(pts, dtype=np.int64).reshape(len(pts), q) @ subset_matrix(q).T
    gens = tuple(Monomial(tuple(int(x) for x in row)) for row in exps)
    return MonomialIdeal(gens, extremal_names(q), True)


# --- labels ---------------------------------------------------------------

def lcm_label(ideal: MonomialIdeal, face: Iterable[int]) -> Monomial:
    face = sorted(face)
    if not face:
        return Monomial.one(ideal.nvars)
    return Monomial(tuple(int(x) for x in ideal.matrix[face].max(axis=0)))


def is_scarf_face_by_labels(ideal: MonomialIdeal, face: Iterable[int]) -> bool:
    """Is the face's lcm label shared by no other face of the Taylor complex?

    Only two local checks are needed:

    (a) no generator outside the face divides its label, and
    (b) deleting any one vertex changes the label.

    Faces with a given label are closed under union. So if G != F share a
    label, either G has a vertex v outside F (then F + v has the same label,
    breaking (a)) or G is inside F (then F - v has the same label for some
    v in F - G, breaking (b)).
    """
    if not ideal.minimal:
        raise DomainError("label test needs a minimally generated ideal")
    face = sorted(set(face))
    G = ideal.matrix
    if not face:
        return not bool((G == 0).all(axis=1).any())
    rows = G[face]
    label = rows.max(axis=0)
    outside = np.ones(len(G), dtype=bool)
    outside[face] = False
    if ((G <= label).all(axis=1) & outside).any():
        return False
    if len(face) == 1:
        return True
    for k in range(len(face)):
        rest = np.delete(rows, k, axis=0).max(axis=0)
        if (rest == label).all():
            return False
    return True


def scarf_complex_bruteforce(ideal: MonomialIdeal, dim_cap: int | None = None,
                             max_faces: int = 2_000_000) -> set:
    """All nonempty label-unique faces, as sorted index tuples.

    Grows level by level: a (k+1)-set is only tested when all of its
    k-subsets are already Scarf.
    """
    n = len(ideal)
    level = [(i,) for i in range(n) if is_scarf_face_by_labels(ideal, (i,))]
    found = set(level)
    dim = 0
    while level and (dim_cap is None or dim < dim_cap):
        nxt = []
        cur = set(level)
        for f in level:
            for v in range(f[-1] + 1, n):
                cand = f + (v,)
                if any(cand[:j] + cand[j + 1:] not in cur for j in range(len(cand) - 1)):
                    continue
                if is_scarf_face_by_labels(ideal, cand):
                    nxt.append(cand)
            if len(found) + len(nxt) > max_faces:
                raise ResourceLimitError(
                    f"more than {max_faces} Scarf faces", progress={"dim": dim + 1, "faces": len(found)}
                )
        found.update(nxt)
        level = nxt
        dim += 1
    return found


def restrict(ideal: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """The ideal generated by the generators dividing m."""
    gens = tuple(g for g in ideal.generators if g.divides(m))
    return MonomialIdeal(gens, ideal.names, ideal.minimal)


# --- homogenized chain complexes -----------------------------------------

@dataclass(frozen=True)
class ChainComplexRep:
    """Boundary maps of a labeled simplicial complex.

    ``bases[k]`` lists the k-faces (k = -1 is the empty face).
    ``boundary[k]`` maps (row, col) to (sign, monomial) for the map from
    k-faces to (k-1)-faces, where the monomial is m_col / m_row.
    """

    ideal: MonomialIdeal
    bases: dict
    boundary: dict = field(repr=False)

    @property
    def top(self) -> int:
        return max(self.bases)

    def composition_is_zero(self) -> bool:
        for k in range(1, self.top + 1):
            outer, inner = self.boundary[k - 1], self.boundary[k]
            by_mid = {}
            for (row, col), entry in outer.items():
                by_mid.setdefault(col, []).append((row, entry))
            acc = {}
            for (mid, col), (s1, m1) in inner.items():
                for row, (s2, m2) in by_mid.get(mid, ()):
                    key = (row, col, (m1 * m2).exponents)
                    acc[key] = acc.get(key, 0) + s1 * s2
            if any(acc.values()):
                return False
        return True

    def constant_entries(self) -> list:
        """(k, row, col) of every boundary entry equal to +-1."""
        return [
            (k, row, col)
            for k, entries in sorted(self.boundary.items())
            for (row, col), (_, m) in sorted(entries.items())
            if m.is_one()
        ]

    def matrix(self, k: int) -> list:
        """Dense rendering of boundary k as strings, rows = (k-1)-faces."""
        rows, cols = self.bases[k - 1], self.bases[k]
        out = [["0"] * len(cols) for _ in rows]
        for (i, j), (s, m) in self.boundary[k].items():
            text = m.format(self.ideal.names)
            out[i][j] = text if s > 0 else "-" + text
        return out


def homogenized_chain_complex(faces: Iterable[Iterable[int]], ideal: MonomialIdeal) -> ChainComplexRep:
    """Simplicial boundary with alternating signs, homogenized by labels.

    Vertices are ordered by generator index; for powers of E_q built by
    ``extremal_power`` that is the decreasing point order.
    """
    faces = {tuple(sorted(f)) for f in faces}
    faces.discard(())
    for f in faces:
        if len(f) > 1:
            for j in range(len(f)):
                if f[:j] + f[j + 1:] not in faces:
                    raise DomainError(f"complex is not closed under subsets: {f}")
    bases = {-1: [()]}
    for f in sorted(faces, key=lambda f: (len(f), f)):
        bases.setdefault(len(f) - 1, []).append(f)
    position = {k: {f: i for i, f in enumerate(b)} for k, b in bases.items()}
    labels = {f: lcm_label(ideal, f) for b in bases.values() for f in b}
    boundary = {}
    for k in sorted(bases):
        if k < 0:
            continue
        entries = {}
        for col, f in enumerate(bases[k]):
            for j in range(len(f)):
                sub = f[:j] + f[j + 1:]
                entries[(position[k - 1][sub], col)] = ((-1) ** j, labels[f] / labels[sub])
        boundary[k] = entries
    return ChainComplexRep(ideal, bases, boundary)
