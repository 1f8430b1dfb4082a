"""Periodic differential operators: monodromy, cross ratios, brackets.

The circle's round operator (constant coefficient pi^2) has holonomy -Id;
its projective curve gives the classical cross ratio.  Coordinate
observables pair parallel sections with dual-parallel covectors, and their
reduced Poisson bracket extends the swapping bracket of the corresponding
cross fractions.
"""

import math
from fractions import Fraction

import numpy as np

from swapalg import (
    coordinate_function,
    ds_crossfraction_bracket,
    frenet_validate,
    holonomy_class,
    integrate,
    oper_cross_fraction,
    solve_trivial_holonomy,
    veronese_oper,
    weak_cross_ratio,
)

M = 1024
sol = integrate(veronese_oper(2), M)
print("holonomy class:", holonomy_class(sol))
print("|holonomy + Id| =", float(np.max(np.abs(sol.holonomy + np.eye(2)))))
print("determinant drift:", sol.det_drift)

# Weak cross ratio vs the classical value through the cotangent chart.
quad = [Fraction(j, M) for j in (100, 300, 520, 860)]
cot = lambda t: math.cos(math.pi * t) / math.sin(math.pi * t)
p, q, r, s = (cot(float(t)) for t in quad)
classical = (p - q) * (r - s) / ((r - q) * (p - s))
print("weak cross ratio:", weak_cross_ratio(sol, *quad))
print("classical value: ", classical)

# Coordinate observables are transport-independent and recover the same
# cross ratios.
Y, y = Fraction(100, M), Fraction(417, M)
values = [coordinate_function(sol, Y, y, via=Fraction(k, M)) for k in (0, 256, 512)]
print("coordinate pairing spread over transports:", max(values) - min(values))
X, x, Yq, yq = quad
print(
    "coordinate cross fraction agrees:",
    abs(oper_cross_fraction(sol, X, x, Yq, yq) - weak_cross_ratio(sol, X, yq, Yq, x)),
)

# A fresh operator with the same trivial holonomy, found by adjusting the
# low harmonics, and the bracket consistency on it.
perturbed = solve_trivial_holonomy(veronese_oper(2), [(2, 0.9, -0.3), (3, 0.2, 0.4)], -1)
psol = integrate(perturbed, M)
print("perturbed holonomy class:", holonomy_class(psol))
q0 = tuple(Fraction(j, M) for j in (37, 205, 411, 700))
q1 = tuple(Fraction(j, M) for j in (120, 333, 590, 901))
ds_value, swap_value = ds_crossfraction_bracket(psol, q0, q1)
print("reduced bracket:  ", ds_value)
print("swapping bracket: ", swap_value)

# The curve is nowhere degenerate: jet wedges stay away from zero.
samples = [([Fraction(10, M), Fraction(600, M)], [1, 1]), ([Fraction(444, M)], [2])]
print("smallest jet wedge:", frenet_validate(psol, samples)["minimum"])
