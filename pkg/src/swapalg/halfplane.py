"""Upper half-plane geometry for hyperbolic 2x2 matrices.

An independent oracle used to cross-check bracket formulas: fixed points on
the boundary come from the quadratic formula applied to the matrix entries
(no eigenvector machinery), axes are vertical lines or semicircles, and
intersection angles are Euclidean angles (the metric is conformal).

The crossing angle of two axes is reported as the counterclockwise angle
from the first tangent line to the second, in (0, pi).  It does not depend
on how either geodesic is oriented.
"""

from __future__ import annotations

import cmath
import math

from .errors import SwapAlgError

INF = math.inf


def fixed_points(matrix) -> tuple[float, float]:
    """(attracting, repelling) boundary fixed points of a hyperbolic matrix.

    `matrix` is any 2x2 real matrix with positive determinant and
    |trace| / sqrt(det) > 2; points are returned as floats, with
    ``math.inf`` for the point at infinity.
    """
    (a, b), (c, d) = ((matrix[0][0], matrix[0][1]), (matrix[1][0], matrix[1][1]))
    det = a * d - b * c
    if det <= 0:
        raise SwapAlgError("matrix must have positive determinant")
    s = math.sqrt(det)
    a, b, c, d = a / s, b / s, c / s, d / s
    tr = a + d
    if abs(tr) <= 2:
        raise SwapAlgError("matrix is not hyperbolic")
    if c == 0:
        finite = b / (d - a)
        return (INF, finite) if abs(a) > abs(d) else (finite, INF)
    disc = math.sqrt(tr * tr - 4)
    z1 = ((a - d) + disc) / (2 * c)
    z2 = ((a - d) - disc) / (2 * c)
    # attracting fixed point has |derivative| = 1/(c z + d)^2 < 1
    if abs(c * z1 + d) > 1:
        return z1, z2
    return z2, z1


def axis(matrix):
    """The invariant geodesic, as ("vertical", x) or ("circle", center, radius)."""
    plus, minus = fixed_points(matrix)
    return geodesic_through(plus, minus)


def geodesic_through(p: float, q: float):
    if p == q:
        raise SwapAlgError("coincident endpoints")
    if math.isinf(p):
        return ("vertical", q)
    if math.isinf(q):
        return ("vertical", p)
    return ("circle", (p + q) / 2.0, abs(p - q) / 2.0)


def geodesic_intersection(g1, g2) -> complex:
    """The intersection point of two geodesics in the open half plane."""
    if g1[0] == "vertical" and g2[0] == "vertical":
        raise SwapAlgError("axes do not cross")
    if g1[0] == "vertical":
        _, x = g1
        _, c, r = g2
        h2 = r * r - (x - c) ** 2
        if h2 <= 0:
            raise SwapAlgError("axes do not cross")
        return complex(x, math.sqrt(h2))
    if g2[0] == "vertical":
        return geodesic_intersection(g2, g1)
    _, c1, r1 = g1
    _, c2, r2 = g2
    if c1 == c2:
        raise SwapAlgError("axes do not cross")
    x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1))
    h2 = r1 * r1 - (x - c1) ** 2
    if h2 <= 0:
        raise SwapAlgError("axes do not cross")
    return complex(x, math.sqrt(h2))


def _tangent_line(geodesic, z: complex) -> complex:
    """A unit tangent of the geodesic at z (orientation immaterial)."""
    if geodesic[0] == "vertical":
        return 1j
    _, c, r = geodesic
    return 1j * (z - c) / r


def crossing_angle(m1, m2) -> float:
    """Counterclockwise angle in (0, pi) from axis(m1) to axis(m2).

    The hyperbolic and Euclidean angles agree because the half-plane metric
    is conformal.  Raises when the axes do not meet transversally.
    """
    g1 = axis(m1)
    g2 = axis(m2)
    z = geodesic_intersection(g1, g2)
    u = _tangent_line(g1, z)
    v = _tangent_line(g2, z)
    phi = cmath.phase(v / u) % math.pi
    if phi == 0.0:
        raise SwapAlgError("axes are tangent")
    return phi
