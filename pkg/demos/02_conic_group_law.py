"""The chord-parallelism group law on conics, driven in exact arithmetic.

Fix a non-degenerate conic and a base point O on it.  Declaring P + Q to be
the second intersection with the conic of the line through O parallel to the
chord PQ (tangent when P = Q) turns the conic into an abelian group with
identity O.  On the parabola y = x^2 with O at the origin, this group is
nothing but addition of the x-parameters, which makes a perfect oracle.

Run:  python3 demos/02_conic_group_law.py
"""

from fractions import Fraction

from slopespectra import (
    ConicGroup,
    EXACT,
    Point,
    SplitMix64,
    conic_through_5,
    group_add,
    group_neg,
    group_scalar_mul,
    segments_parallel,
)

F = Fraction


def pp(t):
    t = F(t)
    return Point(t, t * t)


def fmt(p):
    return f"({p.x}, {p.y})"


parabola = conic_through_5([pp(t) for t in range(5)], EXACT)
print("conic through (t, t^2), t = 0..4:", parabola.coeffs)

group = ConicGroup(parabola, pp(0))

print("\nparameter arithmetic is the group law:")
print("  (1,1) + (2,4)  =", fmt(group_add(group, pp(1), pp(2))))
print("  -(2,4)         =", fmt(group_neg(group, pp(2))))
print("  3 * (1,1)      =", fmt(group_scalar_mul(group, 3, pp(1))))
print("  (1,1) + (-1,1) =", fmt(group_add(group, pp(1), pp(-1))),
      "(chord parallel to the tangent at O)")

# The defining equivalence: P + Q = R + S exactly when PQ is parallel to RS.
rng = SplitMix64(2)
agree = 0
for _ in range(2000):
    a, b, c, d = (rng.fraction(9) for _ in range(4))
    if a == b or c == d:
        continue
    sums_equal = (a + b) == (c + d)
    chords_parallel = segments_parallel(pp(a), pp(b), pp(c), pp(d), EXACT)
    assert sums_equal == chords_parallel
    agree += 1
print(f"\nparallelism law checked on {agree} random chord pairs: "
      "P+Q = R+S  <=>  PQ || RS")

# The parabola group is torsion-free: k*P never returns to O for k != 0.
# On an ellipse the group is a circle group and torsion abounds; that
# difference is exactly why the verifier can find order-(n+1) generators on
# deleted regular polygons but never on parabolic point runs.
P = pp(F(1, 3))
orders = ", ".join(fmt(group_scalar_mul(group, k, P)) for k in range(1, 5))
print("\nmultiples of (1/3, 1/9) never cycle:", orders)
