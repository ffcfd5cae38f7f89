"""Constructors for test and verification inputs.

Every random constructor takes an explicit seed and drives a SplitMix64
generator, so outputs are reproducible across platforms and implementations.
SplitMix64 state update (all arithmetic mod 2^64):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output = z ^ (z >> 31)

Test vectors: seed 0 -> 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4;
seed 42 -> 0xBDD732262FEB6E95, 0x28EFE333B266F103, 0x47526757130F9F52.
Random rational coordinates use bounded numerators and denominators
(default <= 1000) so downstream exact determinants stay fast.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from .errors import (
    GenerationExhausted,
    InvalidSpec,
    PolygonTooSmall,
    TooFewRemaining,
)
from .geometry import Configuration, Point, orientation
from .regularity import AffineMap
from .scalars import Backend, EXACT, float_backend

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Portable 64-bit generator; see the module docstring for the algorithm."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def uniform(self, lo: float = 0.0, hi: float = 1.0) -> float:
        u = (self.next_u64() >> 11) * (2.0 ** -53)  # 53-bit mantissa in [0, 1)
        return lo + (hi - lo) * u

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] (modulo reduction; bias is irrelevant
        at the ranges used here and keeps the draw count deterministic)."""
        return lo + self.next_u64() % (hi - lo + 1)

    def fraction(self, bound: int) -> Fraction:
        """A rational with |numerator| <= bound and denominator in [1, bound]."""
        return Fraction(self.randint(-bound, bound), self.randint(1, bound))

    def shuffle(self, seq: list) -> None:
        for i in range(len(seq) - 1, 0, -1):
            j = self.randint(0, i)
            seq[i], seq[j] = seq[j], seq[i]


def regular_polygon(m: int, backend: Optional[Backend] = None) -> Configuration:
    """The regular m-gon (cos 2*pi*k/m, sin 2*pi*k/m), counterclockwise."""
    if m < 3:
        raise PolygonTooSmall(f"need m >= 3, got {m}")
    b = backend if backend is not None else float_backend()
    coords = []
    for k in range(m):
        ang = 2.0 * math.pi * k / m
        coords.append((math.cos(ang), math.sin(ang)))
    return Configuration.from_coords(coords, b)


def delete_vertices(config: Configuration, indices: Sequence[int]) -> Configuration:
    """The order-preserving subconfiguration without the given indices."""
    drop = set(indices)
    for i in drop:
        if not 0 <= i < len(config):
            raise IndexError(f"vertex index {i} out of range")
    keep = [i for i in range(len(config)) if i not in drop]
    if len(keep) < 3:
        raise TooFewRemaining(f"only {len(keep)} points would remain")
    return config.subset(keep)


def apply_affine(config: Configuration, T: AffineMap) -> Configuration:
    """Pointwise affine image; the backend is preserved."""
    pts = tuple(T.apply(p, config.backend) for p in config.points)
    return Configuration(pts, config.backend)


def perturb(config: Configuration, delta, seed: int) -> Configuration:
    """Displace every coordinate by a seeded uniform value in [-delta, delta].

    The exact backend draws rational displacements (resolution 1/10^6 of
    delta) so the result stays rational; delta = 0 returns an equal copy.
    """
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    rng = SplitMix64(seed)
    b = config.backend
    res = 10 ** 6
    # keep rational deltas small-denominator: floats go through their
    # decimal string, not their binary expansion
    delta_q = Fraction(str(delta)) if isinstance(delta, float) else Fraction(delta)
    coords = []
    for p in config.points:
        if b.exact:
            dx = Fraction(rng.randint(-res, res), res) * delta_q
            dy = Fraction(rng.randint(-res, res), res) * delta_q
        else:
            dx = rng.uniform(-float(delta), float(delta))
            dy = rng.uniform(-float(delta), float(delta))
        coords.append((p.x + dx, p.y + dy))
    return Configuration.from_coords(coords, b)


def _has_collinear_with(pts, candidate, backend) -> bool:
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if orientation(pts[i], pts[j], candidate, backend) == 0:
                return True
    return False


def random_general_position(n: int, seed: int, bound: int = 1000,
                            max_tries: int = 100_000) -> Configuration:
    """n random rational points with no three collinear; deterministic per seed."""
    if n < 3:
        raise TooFewRemaining(f"need n >= 3, got {n}")
    rng = SplitMix64(seed)
    pts: list[Point] = []
    tries = 0
    while len(pts) < n:
        if tries >= max_tries:
            raise GenerationExhausted(f"no general-position configuration after {max_tries} draws")
        tries += 1
        cand = Point(rng.fraction(bound), rng.fraction(bound))
        if any(p == cand for p in pts):
            continue
        if _has_collinear_with(pts, cand, EXACT):
            continue
        pts.append(cand)
    return Configuration(tuple(pts), EXACT)


def random_noncollinear(n: int, seed: int, bound: int = 1000,
                        max_tries: int = 100_000) -> Configuration:
    """n distinct random rational points, not all on one line.

    Collinear triples are allowed (unlike random_general_position), which
    exercises bounds that only assume the set is not fully collinear.
    """
    if n < 3:
        raise TooFewRemaining(f"need n >= 3, got {n}")
    rng = SplitMix64(seed)
    tries = 0
    while True:
        if tries >= max_tries:
            raise GenerationExhausted(f"no non-collinear configuration after {max_tries} draws")
        tries += 1
        pts: list[Point] = []
        ok = True
        for _ in range(n):
            cand = Point(rng.fraction(bound), rng.fraction(bound))
            if any(p == cand for p in pts):
                ok = False
                break
            pts.append(cand)
        if not ok:
            continue
        if all(orientation(pts[0], pts[1], p, EXACT) == 0 for p in pts[2:]):
            continue
        return Configuration(tuple(pts), EXACT)


def _angle_class(v: tuple[Fraction, Fraction]) -> int:
    # half-plane index for exact angular sorting: 0 for upper (dy > 0 or
    # dy = 0, dx > 0), 1 for lower
    dx, dy = v
    if dy > 0 or (dy == 0 and dx > 0):
        return 0
    return 1


def _angle_cmp(a, b) -> int:
    ha, hb = _angle_class(a), _angle_class(b)
    if ha != hb:
        return -1 if ha < hb else 1
    cross = a[0] * b[1] - a[1] * b[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def random_convex_position(n: int, seed: int, bound: int = 1000,
                           max_tries: int = 200) -> Configuration:
    """A random rational strictly convex polygon (general position).

    Uses Valtr's construction: random x- and y-increments are paired,
    angularly sorted exactly, and prefix-summed into a convex chain.
    Draws are rejected until no two edge vectors are parallel, which rules
    out collinear triples.
    """
    if n < 3:
        raise TooFewRemaining(f"need n >= 3, got {n}")
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        xs = sorted(rng.fraction(bound) for _ in range(n))
        ys = sorted(rng.fraction(bound) for _ in range(n))

        def increments(vals):
            lo, hi = vals[0], vals[-1]
            a = lo
            b = lo
            out = []
            for v in vals[1:-1]:
                if rng.next_u64() & 1:
                    out.append(v - a)
                    a = v
                else:
                    out.append(b - v)
                    b = v
            out.append(hi - a)
            out.append(b - hi)
            return out

        dx = increments(xs)
        dy = increments(ys)
        rng.shuffle(dy)
        vecs = list(zip(dx, dy))
        if any(v == (0, 0) for v in vecs):
            continue
        vecs.sort(key=cmp_to_key(_angle_cmp))
        if any(_angle_cmp(vecs[i], vecs[(i + 1) % n]) == 0 for i in range(n)):
            continue  # parallel edges would create a collinear triple
        pts = []
        x = Fraction(0)
        y = Fraction(0)
        for vx, vy in vecs:
            pts.append(Point(x, y))
            x += vx
            y += vy
        return Configuration(tuple(pts), EXACT)
    raise GenerationExhausted(f"no convex configuration after {max_tries} attempts")


def random_with_interior_point(n: int, seed: int, bound: int = 1000,
                               max_tries: int = 2000) -> Configuration:
    """A general-position configuration of n points, one of which lies
    strictly inside the convex hull of the others."""
    if n < 4:
        raise TooFewRemaining(f"need n >= 4, got {n}")
    outer = random_general_position(n - 1, seed, bound)
    pts = list(outer.points)
    rng = SplitMix64(seed ^ 0x9E3779B97F4A7C15)
    # a strict convex combination of any three non-collinear points lies
    # strictly inside the hull
    a, b, c = pts[0], pts[1], pts[2]
    for _ in range(max_tries):
        w1 = Fraction(rng.randint(1, 97), 100)
        w2 = Fraction(rng.randint(1, int((1 - w1) * 100) - 1), 100)
        w3 = 1 - w1 - w2
        if w3 <= 0:
            continue
        cand = Point(w1 * a.x + w2 * b.x + w3 * c.x, w1 * a.y + w2 * b.y + w3 * c.y)
        if any(p == cand for p in pts):
            continue
        if _has_collinear_with(pts, cand, EXACT):
            continue
        return Configuration(tuple(pts) + (cand,), EXACT)
    raise GenerationExhausted(f"no interior point found after {max_tries} attempts")


def random_affine_map(seed: int, bound: int = 5) -> AffineMap:
    """A seeded invertible affine map with small rational entries."""
    rng = SplitMix64(seed)
    while True:
        a, b, c, d = (rng.fraction(bound) for _ in range(4))
        if a * d - b * c != 0:
            break
    tx, ty = rng.fraction(bound), rng.fraction(bound)
    return AffineMap(((a, b), (c, d)), (tx, ty))


@dataclass(frozen=True)
class GeneratorSpec:
    """A composable generation pipeline: source, then optional transforms.

    Exactly one of polygon/random must be set; deletion, affine image and
    perturbation are applied in that order.  Every random step is driven by
    the explicit seed.
    """

    polygon: Optional[int] = None
    random: Optional[int] = None
    delete: tuple[int, ...] = field(default=())
    affine: Optional[AffineMap] = None
    perturb_delta: Optional[object] = None
    seed: int = 0
    bound: int = 1000

    def build(self) -> Configuration:
        if (self.polygon is None) == (self.random is None):
            raise InvalidSpec("exactly one of polygon/random must be given")
        if self.polygon is not None:
            config = regular_polygon(self.polygon)
        else:
            config = random_general_position(self.random, self.seed, self.bound)
        if self.delete:
            config = delete_vertices(config, self.delete)
        if self.affine is not None:
            config = apply_affine(config, self.affine)
        if self.perturb_delta is not None:
            config = perturb(config, self.perturb_delta, self.seed)
        return config
