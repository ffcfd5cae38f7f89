"""Emit SVG figures: parallel-class dashes, forbidden slopes, fitted conics.

Writes three files into demos/out/.

Run:  python3 demos/06_render_figures.py
"""

from pathlib import Path

from slopespectra import (
    Configuration,
    EXACT,
    delete_vertices,
    regular_polygon,
    render_svg,
)

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

# A parallel-chord hexagon on the parabola with its fitted conic.
hexagon = Configuration.from_coords([(t, t * t) for t in (0, 1, 3, 4, 5, 6)], EXACT)
(out / "parallel_hexagon.svg").write_text(render_svg(hexagon, "conic"))

# The 7-of-8 instance with every parallelism class in its own dash pattern.
instance = delete_vertices(regular_polygon(8), [0])
(out / "instance_classes.svg").write_text(render_svg(instance, "parallel all"))

# Forbidden slopes at one vertex of the instance, drawn through the point.
(out / "forbidden_at_0.svg").write_text(render_svg(instance, "forbidden 0"))

for name in ("parallel_hexagon", "instance_classes", "forbidden_at_0"):
    print(f"wrote {out / name}.svg")
