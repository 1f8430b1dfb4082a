"""Points on the circle and the linking form.

Every quantity here is an exact rational; identities hold with equality,
not up to tolerance.
"""

from fractions import Fraction

from swapalg import PointConfig, cocycle_defect, linking_number, six_point_F

# A configuration is a set of labeled rational positions on R/Z.
config = PointConfig()
X = config.point("X", Fraction(1, 10))
x = config.point("x", Fraction(3, 10))
Y = config.point("Y", Fraction(2, 10))
y = config.point("y", Fraction(4, 10))

# The chords X->x and Y->y interleave, so they link once.
print("[Xx, Yy] =", linking_number(X, x, Y, y))

# Flipping one pair flips the sign; a repeated point gives a half-integer.
print("[Xx, yY] =", linking_number(X, x, y, Y))
print("[Xx, Yx] =", linking_number(X, x, Y, x))

# The cocycle identity holds for every quintuple, exactly.
Z = config.point("Z", Fraction(7, 10))
print("cocycle defect:", cocycle_defect(x, y, X, Y, Z))

# The six-point expression vanishes whenever the three pairs have no
# common point; with a triple repetition it takes the value 1/4.
c2 = PointConfig()
A = c2.point("X", Fraction(1, 10))
a = c2.point("x", Fraction(2, 10))
B = c2.point("Y", Fraction(3, 10))
C = c2.point("Z", Fraction(4, 10))
print("generic six-point value:", six_point_F(A, a, B, C, C, a))
print("degenerate six-point value:", six_point_F(A, a, B, a, C, a))
