"""Three parallel chord pairs force six points onto one conic.

If P1P6 || P2P5, P2P3 || P1P4 and P4P5 || P3P6, the six points are always
coconic (a degenerate-Pascal argument: opposite sides of the hexagon
P1 P4 P5 P2 P3 P6 meet on the line at infinity).  The library certifies the
conclusion with an exact 6x6 incidence determinant.

Run:  python3 demos/03_parallel_hexagons.py
"""

from fractions import Fraction

from slopespectra import (
    EXACT,
    Point,
    coconic_determinant,
    pascal_parallel_coconic,
    random_affine_map,
)

F = Fraction


def pp(t):
    t = F(t)
    return Point(t, t * t)


# On the parabola the three conditions are linear in the parameters:
# t1+t6 = t2+t5, t2+t3 = t1+t4, t4+t5 = t3+t6 (the third follows from the
# first two).  Parameters (0, 1, 3, 4, 5, 6) solve them.
params = [0, 1, 3, 4, 5, 6]
pts = [pp(t) for t in params]
verdict = pascal_parallel_coconic(pts, EXACT)
det = coconic_determinant(pts, EXACT)
print(f"parabola parameters {params}")
print(f"  verdict: {verdict}, incidence determinant = {det}")

# The certificate is affine-invariant; push the hexagon through a shear and
# the determinant is still exactly zero.
T = random_affine_map(99, bound=4)
sheared = [T.apply(p, EXACT) for p in pts]
print(f"  after a random rational affine map: "
      f"{pascal_parallel_coconic(sheared, EXACT)}, "
      f"det = {coconic_determinant(sheared, EXACT)}")

# Break one parallelism and the test reports which condition failed.
bad = list(pts)
bad[5] = pp(7)
print(f"\nparameters {params[:5] + [7]}:"
      f" {pascal_parallel_coconic(bad, EXACT)}")
