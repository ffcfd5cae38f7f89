"""Deterministic SVG figures: points, labels, parallel-class highlighting
with one dash pattern per class, forbidden-slope markers, and fitted conics.

The view box is the configuration's bounding box with a 10% margin; all
numbers are written with fixed four-decimal formatting so identical inputs
produce byte-identical documents.
"""

from __future__ import annotations

import math

import numpy as np

from .conics import Conic, conic_through_5
from .errors import RenderTooLarge, SlopeSpectraError
from .geometry import Configuration, Direction, direction_from_vector, directions_parallel
from .slopes import SlopeSpectrum, forbidden_slopes_at, slope_spectrum

POINT_CAP = 1000  # documented limit for cmd_render
_CANVAS = 600.0
_DASHES = ("none", "8,4", "2,3", "10,3,2,3", "5,5", "1,4", "12,2", "6,2,2,2")


def _fmt(v: float) -> str:
    s = f"{v:.4f}"
    return "0.0000" if s == "-0.0000" else s


class _Frame:
    """World-to-SVG transform with a 10% margin and flipped y axis."""

    def __init__(self, config: Configuration):
        xs = [float(p.x) for p in config.points]
        ys = [float(p.y) for p in config.points]
        self.minx, self.maxx = min(xs), max(xs)
        self.miny, self.maxy = min(ys), max(ys)
        span = max(self.maxx - self.minx, self.maxy - self.miny, 1e-9)
        self.margin = 0.1 * span
        self.scale = _CANVAS / (span + 2 * self.margin)
        self.width = (self.maxx - self.minx + 2 * self.margin) * self.scale
        self.height = (self.maxy - self.miny + 2 * self.margin) * self.scale

    def to_svg(self, x: float, y: float) -> tuple[float, float]:
        sx = (x - self.minx + self.margin) * self.scale
        sy = (self.maxy + self.margin - y) * self.scale
        return sx, sy

    def inside(self, x: float, y: float) -> bool:
        return (self.minx - self.margin <= x <= self.maxx + self.margin
                and self.miny - self.margin <= y <= self.maxy + self.margin)


def _segment(frame: _Frame, p, q, stroke: str, dash: str, cls: str) -> str:
    x1, y1 = frame.to_svg(*p)
    x2, y2 = frame.to_svg(*q)
    dash_attr = f' stroke-dasharray="{dash}"' if dash != "none" else ""
    return (f'<line class="{cls}" x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
            f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="{stroke}" '
            f'stroke-width="1.5"{dash_attr}/>')


def _conic_ellipse_params(conic: Conic):
    a, b, c, d, e, f = (float(v) for v in conic.coeffs)
    m33 = np.array([[a, b / 2], [b / 2, c]])
    mq = np.array([[a, b / 2, d / 2], [b / 2, c, e / 2], [d / 2, e / 2, f]])
    center = np.linalg.solve(m33, [-d / 2, -e / 2])
    evals, evecs = np.linalg.eigh(m33)
    k = -np.linalg.det(mq) / np.linalg.det(m33)
    if k <= 0 or any(ev <= 0 for ev in k / evals):
        raise SlopeSpectraError("not an ellipse")
    r1, r2 = np.sqrt(k / evals)
    theta = math.atan2(evecs[1, 0], evecs[0, 0])
    return center[0], center[1], r1, r2, theta


def _conic_svg(conic: Conic, frame: _Frame) -> str:
    a, b, c, _, _, _ = (float(v) for v in conic.coeffs)
    disc = b * b - 4 * a * c
    if disc < 0:
        try:
            cx, cy, r1, r2, theta = _conic_ellipse_params(conic)
        except (SlopeSpectraError, np.linalg.LinAlgError):
            return _conic_path(conic, frame)
        sx, sy = frame.to_svg(cx, cy)
        # y flip negates the rotation angle
        deg = -math.degrees(theta)
        return (f'<ellipse id="conic" cx="{_fmt(sx)}" cy="{_fmt(sy)}" '
                f'rx="{_fmt(r1 * frame.scale)}" ry="{_fmt(r2 * frame.scale)}" '
                f'transform="rotate({_fmt(deg)} {_fmt(sx)} {_fmt(sy)})" '
                f'fill="none" stroke="#2060c0" stroke-width="1.0"/>')
    return _conic_path(conic, frame)


def _conic_path(conic: Conic, frame: _Frame, samples: int = 256) -> str:
    """Sampled polyline branches for parabolas/hyperbolas inside the frame."""
    a, b, c, d, e, f = (float(v) for v in conic.coeffs)
    branches: list[list[tuple[float, float]]] = [[], []]
    x0 = frame.minx - frame.margin
    x1 = frame.maxx + frame.margin
    for i in range(samples + 1):
        x = x0 + (x1 - x0) * i / samples
        qa, qb, qc = c, b * x + e, a * x * x + d * x + f
        if abs(qa) > 1e-14:
            disc = qb * qb - 4 * qa * qc
            ys = [] if disc < 0 else [(-qb + s * math.sqrt(disc)) / (2 * qa) for s in (1.0, -1.0)]
        elif abs(qb) > 1e-14:
            ys = [-qc / qb, None]
        else:
            ys = []
        for bi, y in enumerate(ys):
            if y is not None and frame.inside(x, y):
                branches[bi].append(frame.to_svg(x, y))
            elif bi < 2 and branches[bi] and branches[bi][-1] is not None:
                branches[bi].append(None)  # break the polyline
    parts = []
    for branch in branches:
        run: list[str] = []
        for pt in branch + [None]:
            if pt is None:
                if len(run) > 1:
                    parts.append("M" + "L".join(run))
                run = []
            else:
                run.append(f"{_fmt(pt[0])},{_fmt(pt[1])}")
    if not parts:
        return '<path id="conic" d="" fill="none"/>'
    return (f'<path id="conic" d="{" ".join(parts)}" fill="none" '
            f'stroke="#2060c0" stroke-width="1.0"/>')


def _parse_direction(text: str, config: Configuration) -> Direction:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"direction must look like (dx,dy), got {text!r}")
    from .pointfile import _parse_token

    parts = body[1:-1].split(",")
    if len(parts) != 2:
        raise ValueError(f"direction must have two components, got {text!r}")
    dx, _ = _parse_token(parts[0].strip(), 0)
    dy, _ = _parse_token(parts[1].strip(), 0)
    b = config.backend
    return direction_from_vector(b.coerce(dx), b.coerce(dy), b)


def render_svg(config: Configuration, highlight: str | None = None) -> str:
    """An SVG document for the configuration.

    highlight: None, "conic", "forbidden <i>", "parallel (dx,dy)", or
    "parallel all" (one dash pattern per class, cycled).
    """
    if len(config) > POINT_CAP:
        raise RenderTooLarge(f"{len(config)} points exceed the cap of {POINT_CAP}")
    frame = _Frame(config)
    body: list[str] = []
    spectrum: SlopeSpectrum | None = None

    if highlight:
        mode = highlight.split(None, 1)
        kind = mode[0]
        if kind == "conic":
            conic = conic_through_5(config.points[:5], config.backend)
            body.append(_conic_svg(conic, frame))
        elif kind == "parallel":
            if len(mode) != 2:
                raise ValueError("parallel highlight needs a direction or 'all'")
            spectrum = slope_spectrum(config)
            if mode[1].strip() == "all":
                selected = list(enumerate(spectrum.classes))
            else:
                want = _parse_direction(mode[1], config)
                selected = [
                    (ci, cls) for ci, cls in enumerate(spectrum.classes)
                    if directions_parallel(cls.direction, want, config.backend)
                ]
            for ci, cls in selected:
                dash = _DASHES[ci % len(_DASHES)]
                for (i, j) in cls.pairs:
                    body.append(_segment(frame, config.points[i].as_floats(),
                                         config.points[j].as_floats(),
                                         "#303030", dash, f"parallel-{ci}"))
        elif kind == "forbidden":
            if len(mode) != 2:
                raise ValueError("forbidden highlight needs a point index")
            idx = int(mode[1])
            spectrum = slope_spectrum(config)
            missing = forbidden_slopes_at(config, spectrum, idx)
            px, py = config.points[idx].as_floats()
            half = 0.15 * max(frame.maxx - frame.minx, frame.maxy - frame.miny)
            for di, d in enumerate(missing):
                dx, dy = d.as_floats()
                h = math.hypot(dx, dy)
                dx, dy = dx / h * half, dy / h * half
                body.append(_segment(frame, (px - dx, py - dy), (px + dx, py + dy),
                                     "#c03030", _DASHES[(di + 1) % len(_DASHES)],
                                     f"forbidden-{idx}"))
        else:
            raise ValueError(f"unknown highlight {highlight!r}")

    for i, p in enumerate(config.points):
        x, y = frame.to_svg(*p.as_floats())
        body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3.0" fill="#000000"/>')
    cx = sum(float(p.x) for p in config.points) / len(config)
    cy = sum(float(p.y) for p in config.points) / len(config)
    for i, p in enumerate(config.points):
        px, py = p.as_floats()
        vx, vy = px - cx, py - cy
        h = math.hypot(vx, vy) or 1.0
        off = 0.05 * max(frame.maxx - frame.minx, frame.maxy - frame.miny, 1e-9)
        lx, ly = frame.to_svg(px + vx / h * off, py + vy / h * off)
        body.append(f'<text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="12" '
                    f'font-family="monospace" text-anchor="middle">{i}</text>')

    w, h = _fmt(frame.width), _fmt(frame.height)
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">')
    return "\n".join([head] + body + ["</svg>"]) + "\n"
