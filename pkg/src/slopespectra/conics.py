"""Conics, the chord-tangent group law, and the parallel-hexagon certificate.

A conic is the zero set of  a x^2 + b xy + c y^2 + d x + e y + f.  The
representation is affine on purpose: the constructions here never need
points at infinity, and a chord direction that meets the conic only once
surfaces as NoSecondIntersection instead of an ideal point.

For a non-degenerate conic with a base point O, defining P + Q as the
second intersection with the conic of the line through O parallel to the
chord PQ (tangent when P = Q) makes the conic an abelian group with
identity O.  Second intersections are computed by Vieta's formulas, so the
exact backend stays closed over the rationals: no square roots anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    BackendMismatch,
    CollinearTriple,
    DegenerateConic,
    DegenerateInput,
    DuplicatePoints,
    NoSecondIntersection,
    OperandOffConic,
    RankDeficient,
    SingularPoint,
)
from .geometry import (
    Direction,
    Point,
    direction,
    direction_from_vector,
    orientation,
    points_equal,
    segments_parallel,
)
from .scalars import Backend


def _normalize_coeffs(raw, backend: Backend):
    vals = list(raw)
    if backend.exact:
        vals = [Fraction(v) for v in vals]
        if all(v == 0 for v in vals):
            raise DegenerateConic("all six coefficients are zero")
        den = math.lcm(*[v.denominator for v in vals])
        ints = [int(v * den) for v in vals]
        g = math.gcd(*[abs(v) for v in ints])
        ints = [v // g for v in ints]
        first = next(v for v in ints if v != 0)
        if first < 0:
            ints = [-v for v in ints]
        return tuple(ints)
    vals = [float(v) for v in vals]
    norm = math.sqrt(sum(v * v for v in vals))
    if norm == 0.0:
        raise DegenerateConic("all six coefficients are zero")
    vals = [v / norm for v in vals]
    first = next((v for v in vals if abs(v) > backend.eps_rel), None)
    if first is None:
        first = next(v for v in vals if v != 0.0)
    if first < 0:
        vals = [-v for v in vals]
    return tuple(vals)


def _det3_terms(a, b, c, d, e, f):
    # symmetric matrix [[a, b/2, d/2], [b/2, c, e/2], [d/2, e/2, f]],
    # cofactor expansion kept as a term list for tolerance scaling
    half = Fraction(1, 2) if isinstance(a, (int, Fraction)) else 0.5
    b2, d2, e2 = b * half, d * half, e * half
    return [
        a * c * f,
        -a * e2 * e2,
        -b2 * b2 * f,
        b2 * e2 * d2,
        d2 * b2 * e2,
        -d2 * c * d2,
    ]


@dataclass(frozen=True)
class Conic:
    """A normalized 6-coefficient conic with cached degeneracy status."""

    coeffs: tuple
    backend: Backend
    degenerate: bool

    @classmethod
    def from_coeffs(cls, raw, backend: Backend) -> "Conic":
        coeffs = _normalize_coeffs(raw, backend)
        degenerate = backend.sum_is_zero(_det3_terms(*coeffs))
        return cls(coeffs, backend, degenerate)

    def terms_at(self, p: Point) -> list:
        a, b, c, d, e, f = self.coeffs
        x, y = p.x, p.y
        return [a * x * x, b * x * y, c * y * y, d * x, e * y, f]

    def evaluate(self, p: Point):
        return sum(self.terms_at(p))

    def gradient(self, p: Point) -> tuple:
        a, b, c, d, e, _ = self.coeffs
        x, y = p.x, p.y
        return (2 * a * x + b * y + d, b * x + 2 * c * y + e)


def is_on_conic(conic: Conic, p: Point) -> bool:
    """Whether the quadratic form is (tolerance-)zero at P."""
    return conic.backend.sum_is_zero(conic.terms_at(p))


def _incidence_row(p: Point):
    x, y = p.x, p.y
    return [x * x, x * y, y * y, x, y, 1 if isinstance(x, (int, Fraction)) else 1.0]


def _check_distinct_no3collinear(points, backend: Backend):
    n = len(points)
    for i in range(n):
        for j in range(i + 1, n):
            if points_equal(points[i], points[j], backend):
                raise DuplicatePoints(i, j)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if orientation(points[i], points[j], points[k], backend) == 0:
                    raise CollinearTriple((i, j, k))


def _exact_nullvector(rows):
    """One nonzero kernel vector of a 5x6 exact matrix of rank 5."""
    m = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for col in range(6):
        pr = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][col]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [vi - factor * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    if r < 5:
        raise RankDeficient(f"incidence matrix has rank {r} < 5")
    free = next(c for c in range(6) if c not in pivots)
    x = [Fraction(0)] * 6
    x[free] = Fraction(1)
    for row, pc in zip(m[:r], pivots):
        x[pc] = -row[free]
    return x


def conic_through_5(points, backend: Backend) -> Conic:
    """The unique conic through five points, no three collinear."""
    points = list(points)
    if len(points) != 5:
        raise DegenerateInput(f"need exactly 5 points, got {len(points)}")
    _check_distinct_no3collinear(points, backend)
    rows = [_incidence_row(p) for p in points]
    if backend.exact:
        coeffs = _exact_nullvector(rows)
        return Conic.from_coeffs(coeffs, backend)
    mat = np.array(rows, dtype=float)
    _, s, vt = np.linalg.svd(mat, full_matrices=True)
    if s[-1] <= backend.eps_rel * s[0]:
        raise RankDeficient("five points do not determine a unique conic")
    return Conic.from_coeffs(vt[-1], backend)


def coconic_determinant(points, backend: Backend):
    """The 6x6 determinant of incidence rows (x^2, xy, y^2, x, y, 1)."""
    rows = [_incidence_row(p) for p in points]
    if backend.exact:
        m = [[Fraction(v) for v in row] for row in rows]
        det = Fraction(1)
        for col in range(6):
            pr = next((i for i in range(col, 6) if m[i][col] != 0), None)
            if pr is None:
                return Fraction(0)
            if pr != col:
                m[col], m[pr] = m[pr], m[col]
                det = -det
            det *= m[col][col]
            inv = 1 / m[col][col]
            for i in range(col + 1, 6):
                if m[i][col] != 0:
                    factor = m[i][col] * inv
                    m[i] = [vi - factor * vc for vi, vc in zip(m[i], m[col])]
        return det
    return float(np.linalg.det(np.array(rows, dtype=float)))


def coconic_6(points, backend: Backend) -> bool:
    """Whether six points lie on a common (possibly degenerate) conic."""
    points = list(points)
    if len(points) != 6:
        raise DegenerateInput(f"need exactly 6 points, got {len(points)}")
    det = coconic_determinant(points, backend)
    if backend.exact:
        return det == 0
    # scale-aware zero test via the Hadamard bound on the determinant
    rows = np.array([_incidence_row(p) for p in points], dtype=float)
    bound = float(np.prod(np.linalg.norm(rows, axis=1)))
    return abs(det) <= backend.eps_rel * max(1.0, bound)


def tangent_direction(conic: Conic, p: Point) -> Direction:
    """Direction of the tangent line at a point of the conic."""
    gx, gy = conic.gradient(p)
    b = conic.backend
    if b.sum_is_zero([gx]) and b.sum_is_zero([gy]):
        raise SingularPoint(f"conic gradient vanishes at {p}")
    return direction_from_vector(-gy, gx, b)


def second_intersection(conic: Conic, p: Point, d: Direction) -> Point:
    """The other point where the line through P with direction d meets the
    conic; P itself when that line is tangent at P.

    P is assumed on the conic, so the parameter quadratic has root 0 and the
    second root is read off by Vieta, keeping rational inputs rational.
    """
    a, b, c, dd, e, _ = conic.coeffs
    backend = conic.backend
    dx, dy = d.dx, d.dy
    if backend.exact and not isinstance(dx, (int, Fraction)):
        raise BackendMismatch("direction backend does not match conic backend")
    x0, y0 = p.x, p.y
    alpha_terms = [a * dx * dx, b * dx * dy, c * dy * dy]
    beta_terms = [2 * a * x0 * dx, b * (x0 * dy + y0 * dx), 2 * c * y0 * dy, dd * dx, e * dy]
    alpha = sum(alpha_terms)
    beta = sum(beta_terms)
    if backend.sum_is_zero(alpha_terms):
        if backend.sum_is_zero(beta_terms):
            raise NoSecondIntersection("line is contained in the conic")
        raise NoSecondIntersection("direction meets the conic only at the base point")
    if backend.sum_is_zero(beta_terms):
        return p  # tangent at P
    t = -beta / alpha
    return Point(x0 + t * dx, y0 + t * dy)


@dataclass(frozen=True)
class ConicGroup:
    """The abelian group of a non-degenerate conic with identity O."""

    conic: Conic
    base: Point

    def __post_init__(self):
        if self.conic.degenerate:
            raise DegenerateConic("group law is undefined on a degenerate conic")
        if not is_on_conic(self.conic, self.base):
            raise OperandOffConic(f"base point {self.base} is not on the conic")

    def _require_on_conic(self, p: Point):
        if not is_on_conic(self.conic, p):
            raise OperandOffConic(f"{p} is not on the conic")

    def add(self, p: Point, q: Point) -> Point:
        self._require_on_conic(p)
        self._require_on_conic(q)
        b = self.conic.backend
        if points_equal(p, q, b):
            d = tangent_direction(self.conic, p)
        else:
            d = direction(p, q, b)
        return second_intersection(self.conic, self.base, d)

    def neg(self, p: Point) -> Point:
        self._require_on_conic(p)
        d = tangent_direction(self.conic, self.base)
        return second_intersection(self.conic, p, d)

    def scalar_mul(self, k: int, p: Point) -> Point:
        self._require_on_conic(p)
        if k < 0:
            return self.neg(self.scalar_mul(-k, p))
        result = self.base
        addend = p
        while k:
            if k & 1:
                result = self.add(result, addend)
            if k > 1:
                addend = self.add(addend, addend)
            k >>= 1
        return result


def group_add(group: ConicGroup, p: Point, q: Point) -> Point:
    """P + Q: the point R on the conic with chord RO parallel to PQ."""
    return group.add(p, q)


def group_neg(group: ConicGroup, p: Point) -> Point:
    """The inverse of P: chord through P parallel to the tangent at O."""
    return group.neg(p)


def group_scalar_mul(group: ConicGroup, k: int, p: Point) -> Point:
    """k-fold group sum of P by double-and-add; 0*P = O."""
    return group.scalar_mul(k, p)


@dataclass(frozen=True)
class Applicable:
    """All three chord parallelisms hold; coconic is the 6x6 verdict."""

    coconic: bool


@dataclass(frozen=True)
class NotApplicable:
    """Some required chord parallelism fails."""

    failed: str


_PASCAL_CONDITIONS = (
    ((0, 5), (1, 4), "P1P6 || P2P5"),
    ((1, 2), (0, 3), "P2P3 || P1P4"),
    ((3, 4), (2, 5), "P4P5 || P3P6"),
)


def pascal_parallel_coconic(points, backend: Backend):
    """Check the three-parallel-chord hexagon condition.

    When P1P6 || P2P5, P2P3 || P1P4 and P4P5 || P3P6 all hold, the six
    points must lie on a common conic; the returned Applicable carries the
    6x6 incidence verdict, and a False there indicates a tolerance or
    predicate bug rather than a property of valid input.
    """
    points = list(points)
    if len(points) != 6:
        raise DegenerateInput(f"need exactly 6 points, got {len(points)}")
    try:
        _check_distinct_no3collinear(points, backend)
    except (DuplicatePoints, CollinearTriple) as exc:
        raise DegenerateInput(str(exc)) from exc
    for (i1, j1), (i2, j2), label in _PASCAL_CONDITIONS:
        if not segments_parallel(points[i1], points[j1], points[i2], points[j2], backend):
            return NotApplicable(label)
    return Applicable(coconic_6(points, backend))
