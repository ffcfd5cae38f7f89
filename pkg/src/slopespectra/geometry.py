"""Points, directions, configurations and the base predicates.

Directions are canonical representatives of parallelism classes: on the
exact backend an integer-primitive pair (dx, dy) with dx > 0 (or dx = 0,
dy > 0); on the float backend a unit vector whose angle lies in [0, pi).
Two directions are parallel iff their cross product is (tolerance-)zero.

Indices are 0-based throughout the library.  Cyclic index arithmetic is
taken modulo n wherever an operation documents it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    CoincidentPoints,
    DuplicatePoints,
    NotConvexPosition,
    TooFewPoints,
)
from .scalars import Backend


@dataclass(frozen=True)
class Point:
    """A planar point; both coordinates share one backend's scalar type."""

    x: object
    y: object

    def __iter__(self):
        yield self.x
        yield self.y

    def as_floats(self) -> tuple[float, float]:
        return float(self.x), float(self.y)


@dataclass(frozen=True)
class Direction:
    """Canonical representative of a parallelism class of segments."""

    dx: object
    dy: object
    exact: bool
    angle: float = field(compare=False, default=0.0)

    def as_floats(self) -> tuple[float, float]:
        return float(self.dx), float(self.dy)

    def __str__(self):
        if self.exact:
            return f"({self.dx},{self.dy})"
        return f"angle={self.angle:.12g}"


def _canonical_int_pair(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    den = math.lcm(dx.denominator, dy.denominator)
    ix = int(dx * den)
    iy = int(dy * den)
    g = math.gcd(abs(ix), abs(iy))
    ix //= g
    iy //= g
    if ix < 0 or (ix == 0 and iy < 0):
        ix, iy = -ix, -iy
    return ix, iy


def direction_from_vector(dx, dy, backend: Backend) -> Direction:
    """Canonical Direction of the (nonzero) vector (dx, dy)."""
    if backend.exact:
        fx, fy = Fraction(dx), Fraction(dy)
        if fx == 0 and fy == 0:
            raise CoincidentPoints("zero vector has no direction")
        ix, iy = _canonical_int_pair(fx, fy)
        return Direction(ix, iy, exact=True, angle=math.atan2(iy, ix) % math.pi)
    fx, fy = float(dx), float(dy)
    if fx == 0.0 and fy == 0.0:
        raise CoincidentPoints("zero vector has no direction")
    if fy < 0.0 or (fy == 0.0 and fx < 0.0):
        fx, fy = -fx, -fy
    h = math.hypot(fx, fy)
    fx, fy = fx / h, fy / h
    ang = math.atan2(fy, fx)
    if ang >= math.pi:
        ang -= math.pi
    if ang < 0.0:
        ang = 0.0
    return Direction(fx, fy, exact=False, angle=ang)


def direction(p: Point, q: Point, backend: Backend) -> Direction:
    """Canonical Direction of segment PQ; symmetric in its arguments."""
    if points_equal(p, q, backend):
        raise CoincidentPoints(f"{p} and {q} coincide")
    return direction_from_vector(q.x - p.x, q.y - p.y, backend)


def directions_parallel(d1: Direction, d2: Direction, backend: Backend) -> bool:
    """Direction equality: cross product (tolerance-)zero."""
    cross = d1.dx * d2.dy - d1.dy * d2.dx
    if backend.exact:
        return cross == 0
    # unit vectors: cross = sin of the angle between them
    return abs(cross) <= backend.eps_rel


def points_equal(p: Point, q: Point, backend: Backend) -> bool:
    return backend.eq(p.x, q.x) and backend.eq(p.y, q.y)


def orientation(p: Point, q: Point, r: Point, backend: Backend) -> int:
    """Sign of the cross product (Q-P) x (R-P): +1 ccw, -1 cw, 0 collinear."""
    t1 = (q.x - p.x) * (r.y - p.y)
    t2 = (q.y - p.y) * (r.x - p.x)
    return backend.cmp(t1, t2)


def segments_parallel(p: Point, q: Point, r: Point, s: Point, backend: Backend) -> bool:
    """Whether segment PQ is parallel to segment RS."""
    t1 = (q.x - p.x) * (s.y - r.y)
    t2 = (q.y - p.y) * (s.x - r.x)
    return backend.cmp(t1, t2) == 0


@dataclass(frozen=True)
class Configuration:
    """An immutable indexed set of pairwise-distinct planar points."""

    points: tuple[Point, ...]
    backend: Backend

    def __post_init__(self):
        pts = self.points
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if points_equal(pts[i], pts[j], self.backend):
                    raise DuplicatePoints(i, j)

    @classmethod
    def from_coords(cls, coords: Iterable, backend: Backend) -> "Configuration":
        pts = tuple(Point(backend.coerce(x), backend.coerce(y)) for x, y in coords)
        return cls(pts, backend)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @property
    def n(self) -> int:
        return len(self.points)

    def reordered(self, order: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self.points[i] for i in order), self.backend)

    def subset(self, indices: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self.points[i] for i in indices), self.backend)


def is_general_position(config: Configuration) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """Whether no three points are collinear.

    On failure, also returns the lexicographically first collinear triple.
    """
    n = len(config)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    pts = config.points
    b = config.backend
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(pts[i], pts[j], pts[k], b) == 0:
                    return False, (i, j, k)
    return True, None


def convex_position_order(config: Configuration) -> tuple[int, ...]:
    """Counterclockwise convex-polygon order of the point indices.

    The order starts at the lexicographically smallest point (lowest x,
    then lowest y).  Requires general position; raises NotConvexPosition
    with the smallest offending index when some point is not a hull vertex.
    """
    n = len(config)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    pts = config.points
    b = config.backend
    order = sorted(range(n), key=lambda i: (pts[i].x, pts[i].y))

    def build(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and orientation(pts[chain[-2]], pts[chain[-1]], pts[i], b) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < n:
        missing = sorted(set(range(n)) - set(hull))
        raise NotConvexPosition(missing[0])
    return tuple(hull)
