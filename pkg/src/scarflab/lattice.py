"""Points of N^r_q, the total order on them, and face transformations.

A point is a plain tuple of nonnegative ints; its length is q and its sum
is r. Faces wrap a tuple of distinct points with common (q, r), stored in
strictly decreasing order so that comparing faces is sequence comparison.

Coordinates are 0-based throughout the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence, Union

from .errors import DomainError

Point = tuple  # tuple[int, ...]


def check_point(a, q=None, r=None) -> Point:
    a = tuple(int(x) for x in a)
    if not a:
        raise DomainError("a point needs at least one coordinate")
    if any(x < 0 for x in a):
        raise DomainError(f"negative coordinate in {a}")
    if q is not None and len(a) != q:
        raise DomainError(f"{a} has {len(a)} coordinates, expected {q}")
    if r is not None and sum(a) != r:
        raise DomainError(f"{a} has coordinate sum {sum(a)}, expected {r}")
    return a


def unit(q: int, i: int) -> Point:
    return tuple(int(j == i) for j in range(q))


def support(a: Point) -> tuple:
    return tuple(i for i, x in enumerate(a) if x)


def is_square_free(a: Point) -> bool:
    return all(x <= 1 for x in a)


def partition_form(a: Point) -> tuple:
    """Coordinates sorted non-increasingly with zeros dropped."""
    return tuple(sorted((x for x in a if x), reverse=True))


def point_key(a: Point) -> tuple:
    # ascending key order == ascending order under the total order
    return (partition_form(a), tuple(a))


def _same_shape(a, b):
    if len(a) != len(b) or sum(a) != sum(b):
        raise DomainError(f"points {a} and {b} do not share (q, r)")


def compare_points(a: Point, b: Point) -> int:
    """Three-way comparison: 1 if a is larger, -1 if b is, 0 if equal.

    Partition forms are compared lexicographically first, then the
    vectors themselves.
    """
    _same_shape(a, b)
    ka, kb = point_key(a), point_key(b)
    return (ka > kb) - (ka < kb)


@lru_cache(maxsize=None)
def _points(q: int, r: int) -> tuple:
    pts = []
    # stars and bars: bar positions among q + r - 1 slots
    for bars in combinations(range(q + r - 1), q - 1):
        prev, a = -1, []
        for b in bars:
            a.append(b - prev - 1)
            prev = b
        a.append(q + r - 1 - prev - 1)
        pts.append(tuple(a))
    pts.sort(key=point_key, reverse=True)
    return tuple(pts)


def enumerate_points(q: int, r: int) -> tuple:
    """All of N^r_q, largest first."""
    if q < 1:
        raise DomainError(f"q must be positive, got {q}")
    if r < 0:
        raise DomainError(f"r must be nonnegative, got {r}")
    pts = _points(q, r)
    assert len(pts) == comb(q + r - 1, r)
    return pts


@dataclass(frozen=True, init=False)
class Face:
    """A set of distinct points of N^r_q kept in decreasing order.

    Faces are hashable and totally ordered; ``Face.empty(q, r)`` is the
    empty face.
    """

    points: tuple
    q: int
    r: int

    def __init__(self, points: Iterable, q: int | None = None, r: int | None = None):
        pts = [tuple(int(x) for x in p) for p in points]
        if pts:
            q = len(pts[0]) if q is None else q
            r = sum(pts[0]) if r is None else r
        if q is None or r is None:
            raise DomainError("an empty face needs explicit q and r")
        pts = [check_point(p, q, r) for p in pts]
        uniq = sorted(set(pts), key=point_key, reverse=True)
        if len(uniq) != len(pts):
            raise DomainError("face has repeated points")
        object.__setattr__(self, "points", tuple(uniq))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def empty(cls, q: int, r: int) -> "Face":
        return cls((), q, r)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self.points

    def __lt__(self, other):
        return compare_faces(self, other) < 0

    def __le__(self, other):
        return compare_faces(self, other) <= 0

    def __gt__(self, other):
        return compare_faces(self, other) > 0

    def __ge__(self, other):
        return compare_faces(self, other) >= 0

    @property
    def dim(self) -> int:
        return len(self.points) - 1

    def key(self) -> tuple:
        return tuple(point_key(p) for p in self.points)

    def issubset(self, other: "Face") -> bool:
        return set(self.points) <= set(other.points)

    def add(self, p: Point) -> "Face":
        return Face(self.points + (tuple(p),), self.q, self.r)

    def remove(self, p: Point) -> "Face":
        p = tuple(p)
        if p not in self.points:
            raise DomainError(f"{p} is not in the face")
        return Face([x for x in self.points if x != p], self.q, self.r)

    def __repr__(self):
        inner = ", ".join("(" + ",".join(map(str, p)) + ")" for p in self.points)
        return f"Face({{{inner}}}, q={self.q}, r={self.r})"


def compare_faces(s: Face, t: Face) -> int:
    """Lexicographic comparison of the decreasing point sequences.

    A proper prefix counts as smaller, which never matters for antichains
    such as the set of minimal nonfaces.
    """
    if (s.q, s.r) != (t.q, t.r):
        raise DomainError("faces do not share (q, r)")
    ks, kt = s.key(), t.key()
    return (ks > kt) - (ks < kt)


# --- transforms -----------------------------------------------------------

@dataclass(frozen=True)
class Permute:
    """Move coordinate i to position ``image[i]`` (0-based)."""

    image: tuple

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise DomainError(f"{self.image} is not a permutation")

    @classmethod
    def from_cycles(cls, cycles: Sequence[Sequence[int]], q: int) -> "Permute":
        """Build from 1-based cycle notation, e.g. ``[(1, 3, 2)]``."""
        image = list(range(q))
        for cyc in cycles:
            for x, y in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                image[x - 1] = y - 1
        return cls(tuple(image))

    def apply(self, a: Point) -> Point:
        if len(a) != len(self.image):
            raise DomainError("permutation size does not match q")
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[self.image[i]] = x
        return tuple(out)


@dataclass(frozen=True)
class PadRight:
    p: int

    def apply(self, a: Point) -> Point:
        return tuple(a) + (0,) * self.p


@dataclass(frozen=True)
class PadLeft:
    p: int

    def apply(self, a: Point) -> Point:
        return (0,) * self.p + tuple(a)


@dataclass(frozen=True)
class Shift:
    v: tuple

    def apply(self, a: Point) -> Point:
        if len(a) != len(self.v):
            raise DomainError("shift vector size does not match q")
        out = tuple(x + y for x, y in zip(a, self.v))
        if any(x < 0 for x in out):
            raise DomainError(f"shift by {self.v} makes {a} negative")
        return out


Action = Union[Permute, PadRight, PadLeft, Shift]


def transform(face: Face, action: Action) -> Face:
    """Apply one of the Scarf-status-preserving moves to every point."""
    pts = [action.apply(p) for p in face.points]
    q = face.q
    r = face.r
    if isinstance(action, (PadLeft, PadRight)):
        q += action.p
    elif isinstance(action, Shift):
        r += sum(action.v)
    return Face(pts, q, r)


def meet(a: Point, b: Point) -> Point:
    return tuple(min(x, y) for x, y in zip(a, b))


def normalize_pair(a: Point, b: Point) -> tuple:
    """Canonical edge-orbit data: (lambda(a'), lambda(b'), r').

    a' and b' are what is left after removing the common part a ∩ b; the
    larger partition comes first.
    """
    _same_shape(a, b)
    c = meet(a, b)
    la = partition_form(tuple(x - y for x, y in zip(a, c)))
    lb = partition_form(tuple(x - y for x, y in zip(b, c)))
    if la < lb:
        la, lb = lb, la
    return la, lb, sum(a) - sum(c)


def orbit_key(face: Face) -> tuple:
    """A face in the same transform orbit, usable as a cache key.

    Subtract the coordinatewise minimum, drop columns that are zero on
    every point, sort the remaining columns. Equal keys imply equal Scarf
    status; distinct keys may still share an orbit.
    """
    if not face.points:
        return (face.q, face.r, ())
    lo = tuple(min(col) for col in zip(*face.points))
    pts = [tuple(x - m for x, m in zip(p, lo)) for p in face.points]
    cols = [c for c in zip(*pts) if any(c)]
    if not cols:
        return (1, 0, ((0,),))
    cols.sort()
    pts = sorted(zip(*cols), key=point_key, reverse=True)
    return (len(cols), sum(pts[0]), tuple(pts))
