"""Slope spectra, forbidden slopes, and the convex-chord dichotomy.

The slope spectrum of a configuration is the partition of all point pairs
into parallelism classes.  On the exact backend classes are keyed by the
canonical integer direction pair; on the float backend all pair angles in
[0, pi) are sorted and adjacent angles within eps_angle are merged, with the
pi/0 wraparound pair merged explicitly.  Merging is adjacency-based, not
transitively closed beyond the sorted order, which keeps the output
deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AllCollinear, IndexOrder, LemmaViolation, TooFewPoints
from .geometry import (
    Configuration,
    Direction,
    direction,
    is_general_position,
    orientation,
    segments_parallel,
)


@dataclass(frozen=True)
class SlopeClass:
    """One parallelism class: a canonical direction and its point pairs."""

    direction: Direction
    pairs: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SlopeSpectrum:
    """All parallelism classes of a configuration, deterministically ordered."""

    classes: tuple[SlopeClass, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of_pair(self, i: int, j: int) -> int:
        key = (min(i, j), max(i, j))
        for ci, cls in enumerate(self.classes):
            if key in cls.pairs:
                return ci
        raise KeyError(key)


@dataclass(frozen=True)
class ForbiddenSlopeTable:
    """Per point index, the spectrum directions realized by no segment there."""

    per_point: tuple[tuple[Direction, ...], ...]


def slope_spectrum(config: Configuration) -> SlopeSpectrum:
    """Partition all n(n-1)/2 pair directions into parallelism classes."""
    n = len(config)
    if n < 2:
        raise TooFewPoints(f"need at least 2 points, got {n}")
    b = config.backend
    pts = config.points
    if b.exact:
        groups: dict[tuple[int, int], list[tuple[int, int]]] = {}
        reps: dict[tuple[int, int], Direction] = {}
        for i in range(n):
            for j in range(i + 1, n):
                d = direction(pts[i], pts[j], b)
                key = (d.dx, d.dy)
                groups.setdefault(key, []).append((i, j))
                reps.setdefault(key, d)
        classes = tuple(
            SlopeClass(reps[key], tuple(groups[key]))
            for key in sorted(groups)
        )
        return SlopeSpectrum(classes)

    items = []
    for i in range(n):
        for j in range(i + 1, n):
            d = direction(pts[i], pts[j], b)
            items.append((d.angle, i, j, d))
    items.sort(key=lambda t: (t[0], t[1], t[2]))
    groups_f: list[list] = [[items[0]]]
    for item in items[1:]:
        if item[0] - groups_f[-1][-1][0] <= b.eps_angle:
            groups_f[-1].append(item)
        else:
            groups_f.append([item])
    # explicit pi/0 wraparound: the last group may continue into the first
    import math

    if len(groups_f) > 1:
        gap = groups_f[0][0][0] + math.pi - groups_f[-1][-1][0]
        if gap <= b.eps_angle:
            groups_f[0] = groups_f.pop() + groups_f[0]
    classes_f = []
    for grp in groups_f:
        rep = min(grp, key=lambda t: (t[0], t[1], t[2]))[3]
        pairs = tuple(sorted((i, j) for _, i, j, _ in grp))
        classes_f.append(SlopeClass(rep, pairs))
    classes_f.sort(key=lambda c: c.direction.angle)
    return SlopeSpectrum(tuple(classes_f))


def forbidden_slopes_at(config: Configuration, spectrum: SlopeSpectrum, i: int) -> list[Direction]:
    """Spectrum directions not realized by any segment incident to point i."""
    if not 0 <= i < len(config):
        raise IndexError(f"point index {i} out of range")
    out = []
    for cls in spectrum.classes:
        if not any(i in pair for pair in cls.pairs):
            out.append(cls.direction)
    return out


def forbidden_slope_table(config: Configuration, spectrum: SlopeSpectrum) -> ForbiddenSlopeTable:
    return ForbiddenSlopeTable(
        tuple(tuple(forbidden_slopes_at(config, spectrum, i)) for i in range(len(config)))
    )


@dataclass(frozen=True)
class Forbidden:
    """Dichotomy verdict: the chord's slope is forbidden at the middle point."""


@dataclass(frozen=True)
class ParallelWitness:
    """Dichotomy verdict: A_i A_k is parallel to A_j A_p with i < p < k."""

    p: int


def lemma1_dichotomy(config: Configuration, i: int, j: int, k: int):
    """For a convex-ordered configuration and i < j < k, decide whether the
    slope of A_i A_k is forbidden at A_j or realized by a unique A_j A_p with
    i < p < k.

    Exactly one branch holds on general-position convex input.  The witness
    branch additionally checks that the witnessed slope is not the slope of
    any other segment at A_i or at A_j; any inconsistency raises
    LemmaViolation, which signals a predicate or tolerance bug.
    """
    n = len(config)
    if not (0 <= i < j < k < n):
        raise IndexOrder(f"need 0 <= i < j < k < n, got ({i}, {j}, {k}), n={n}")
    pts = config.points
    b = config.backend
    Ai, Aj, Ak = pts[i], pts[j], pts[k]

    witnesses = [
        l for l in range(n)
        if l != j and segments_parallel(Ai, Ak, Aj, pts[l], b)
    ]
    if not witnesses:
        return Forbidden()
    if len(witnesses) > 1:
        raise LemmaViolation(
            f"slope of A{i}A{k} realized at A{j} by several segments {witnesses}"
        )
    p = witnesses[0]
    if not (i < p < k):
        raise LemmaViolation(
            f"witness p={p} for ({i},{j},{k}) lies outside the open range ({i},{k})"
        )
    # the witnessed slope must match no other chord at A_i or at A_j
    for l in range(n):
        if l not in (i, j, k) and segments_parallel(Aj, pts[p], Ai, pts[l], b):
            raise LemmaViolation(
                f"witness slope A{j}A{p} equals A{i}A{l}"
            )
        if l not in (i, j, k, p) and segments_parallel(Aj, pts[p], pts[l], Aj, b):
            raise LemmaViolation(
                f"witness slope A{j}A{p} equals A{l}A{j}"
            )
    return ParallelWitness(p)


class Criticality(Enum):
    CRITICAL = "Critical"
    NEAR_CRITICAL = "NearCritical"
    GENERAL_POSITION_MINIMAL = "GeneralPositionMinimal"
    N_PLUS_ONE = "NPlusOne"
    OTHER = "Other"


@dataclass(frozen=True)
class CriticalityReport:
    verdict: Criticality
    count: int
    n: int
    general_position: bool


def classify_criticality(config: Configuration) -> CriticalityReport:
    """Compare the spectrum count against n-1, n and n+1.

    Critical: count = n-1.  Count = n splits into GeneralPositionMinimal
    (general position) and NearCritical (some collinear triple).  Counts
    other than n-1, n, n+1 are reported as Other rather than an error.
    """
    n = len(config)
    if n < 3:
        raise TooFewPoints(f"need at least 3 points, got {n}")
    pts = config.points
    b = config.backend
    if all(orientation(pts[0], pts[1], pts[k], b) == 0 for k in range(2, n)):
        raise AllCollinear("all points lie on one line")
    gp, _ = is_general_position(config)
    count = slope_spectrum(config).count
    if count == n - 1:
        verdict = Criticality.CRITICAL
    elif count == n:
        verdict = Criticality.GENERAL_POSITION_MINIMAL if gp else Criticality.NEAR_CRITICAL
    elif count == n + 1:
        verdict = Criticality.N_PLUS_ONE
    else:
        verdict = Criticality.OTHER
    return CriticalityReport(verdict, count, n, gp)
