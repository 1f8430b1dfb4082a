"""Evaluating fractions on a matrix group.

Fixed points of loxodromic matrices become circle points; balanced
fractions of eigenvector pairings are scale-free numbers.  Periods match
widths, trace ratios converge to elementary functions at the girth rate,
and the length-function bracket reproduces the geometry of crossing axes.
"""

import math

import numpy as np

from swapalg import Representation, symmetric_square, wolpert_check

rep = Representation(
    {
        "a": np.diag([2.0, 0.5]),
        "b": [[math.cosh(1.0), math.sinh(1.0)], [math.sinh(1.0), math.cosh(1.0)]],
    }
)

# The classical cross ratio through the determinant pairing.
pts = [rep.boundary_point(t) for t in (None, 1.0, 0.0, -1.0)]
from swapalg import cross_fraction

print("cross ratio (oo, 1, 0, -1):", rep.eval_fraction(cross_fraction(*pts)))

# Period of a word = log of its extreme eigenvalue ratio, anchor-free.
anchor = rep.fixed_point("b", +1)
print("period:", rep.period("a b", anchor))
print("width: ", rep.width("a b"))

# The same identity persists on the irreducible three-dimensional copies.
rep3 = Representation(
    {
        "a": symmetric_square(np.array([[2.0, 0.3], [0.1, 0.515]])),
        "b": symmetric_square([[math.cosh(1.0), math.sinh(1.0)], [math.sinh(1.0), math.cosh(1.0)]]),
    }
)
anchor3 = rep3.fixed_point("b", +1)
print("period = width at n = 3:", abs(rep3.period("a", anchor3) - rep3.width("a")) < 1e-9)

# Trace ratios converge geometrically to the elementary function.  (For
# the perpendicular pair above the ratio is exactly 1/2 at every power, so
# use a generic word against a generator to see the decay.)
target = rep.elementary_value(("a b", "b a"))
print("girth:", rep.girth(["a b", "b a"]))
for p in (2, 5, 10, 20):
    print(f"  trace ratio p={p:2d}: error {abs(rep.wilson_ratio('a b', 'b a', p) - target):.2e}")

# Perpendicular axes: all four elementary values are 1/2 and the
# alternating sum vanishes; the angle oracle agrees.
lhs, rhs = wolpert_check(rep.matrix("a"), rep.matrix("b"))
print("perpendicular axes:", f"angle side {lhs:.2e}, bracket side {rhs:.2e}")

# Rank detection: 3x3 determinants of cross ratios vanish on a projective line.
coords = [-3.0, -1.2, -0.4, 0.6, 1.4, 2.2, 3.4, 4.4]
points = [rep.boundary_point(t) for t in coords]
print("chi(3+1 tuples):", f"{rep.chi(points[:4], points[4:]):.2e}")
print("chi(2+1 tuples):", f"{rep.chi(points[:3], points[4:7]):.2e}")
