"""Shared fixtures and oracle helpers for the test suite."""

from __future__ import annotations

from fractions import Fraction

import pytest

from slopespectra import (
    Configuration,
    EXACT,
    Point,
    SplitMix64,
    float_backend,
)


@pytest.fixture
def approx():
    return float_backend()


def exact_config(coords) -> Configuration:
    return Configuration.from_coords(coords, EXACT)


def float_config(coords) -> Configuration:
    return Configuration.from_coords(coords, float_backend())


def parabola_points(ts) -> list[Point]:
    """Rational points (t, t^2) on the standard parabola."""
    return [Point(Fraction(t), Fraction(t) ** 2) for t in ts]


def parabola_config(ts) -> Configuration:
    return Configuration(tuple(parabola_points(ts)), EXACT)


def brute_slope_count(config) -> int:
    """Independent spectrum-size oracle: count distinct reduced slope values
    (dy/dx as a Fraction, None for vertical) over all point pairs.

    Exact backend only; shares no code with the canonical-direction path.
    """
    slopes = set()
    pts = config.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dx = pts[j].x - pts[i].x
            dy = pts[j].y - pts[i].y
            slopes.add(None if dx == 0 else Fraction(dy, dx))
    return len(slopes)


def random_fractions(seed: int, count: int, bound: int = 9) -> list[Fraction]:
    rng = SplitMix64(seed)
    return [rng.fraction(bound) for _ in range(count)]
