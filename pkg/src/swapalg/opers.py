"""Periodic differential operators on the circle as numeric objects.

An operator of order n,

    D psi = psi^(n) + q_2 psi^(n-2) + ... + q_n psi,

with 1-periodic trigonometric-polynomial coefficients, is integrated as the
companion first-order system with a classical fixed-step fourth-order
Runge-Kutta scheme.  The companion matrix is trace free (there is no
psi^(n-1) term), so the frame determinant is conserved; the drift measures
integration error.

The frame at t has columns (psi_j, psi_j', ..., psi_j^(n-1)) for the basis
of solutions with frame(0) = Id; the holonomy is frame(1).  When the
holonomy is +-Id the solutions define a closed projective curve

    xi(t)  = first row of frame(t)           (the solution values),
    xi*(t) = last column of frame(t)^{-1}    (the osculating hyperplane),

and the weak cross ratio

    b(x, y, z, t) = <xi(x), xi*(y)> <xi(z), xi*(t)>
                    / (<xi(z), xi*(y)> <xi(x), xi*(t)>)

is independent of all scale choices.

Coordinate functions are parallel-transport pairings in the companion
trivialisation.  The flag structure filters jets by vanishing order, so
the distinguished section through y is the solution vanishing to maximal
order there (jet (0, ..., 0, 1) at y), and the distinguished covector
through Y reads off the solution value at Y.  Their pairing

    F_{Y,y} = <sigma*_Y, sigma_y> = <xi(Y), xi*(y)>

is independent of the transport parameter and vanishes exactly when Y = y
on the circle.  Lifts to the real line are handled through holonomy
powers.

Everything is deterministic: fixed step size, no adaptivity, and query
parameters must lie on the integration grid.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .circle import PointConfig, linking_number
from .errors import EvaluationError, SwapAlgError
from .multifraction import cross_fraction, fraction_bracket

TRIVIAL_HOLONOMY_TOLERANCE = 1e-6


class OperSpec:
    """Coefficients q_2..q_n of an order-n operator, as trigonometric
    polynomials: lists of (harmonic k, cosine amplitude, sine amplitude)."""

    def __init__(self, order: int, coefficients: dict | None = None):
        if order < 2:
            raise SwapAlgError("operator order must be at least 2")
        self.order = order
        self.coefficients: dict[int, tuple[tuple[int, float, float], ...]] = {}
        for index, harmonics in (coefficients or {}).items():
            if not 2 <= index <= order:
                raise SwapAlgError(f"coefficient index {index} outside 2..{order}")
            self.coefficients[index] = tuple(
                (int(k), float(c), float(s)) for k, c, s in harmonics
            )

    def coefficient_values(self, index: int, times: np.ndarray) -> np.ndarray:
        out = np.zeros_like(times)
        for k, c, s in self.coefficients.get(index, ()):
            w = 2.0 * math.pi * k * times
            out += c * np.cos(w) + s * np.sin(w)
        return out

    def __repr__(self):
        return f"OperSpec(order={self.order}, coefficients={self.coefficients})"

    @classmethod
    def from_text(cls, text: str) -> "OperSpec":
        """Parse lines ``n = <int>`` then ``q<i>: k=<int> cos=<real> sin=<real>``.

        Harmonic lines may repeat; ``#`` begins a comment.
        """
        order = None
        harmonics: dict[int, list] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.replace(" ", "").startswith("n="):
                order = int(line.split("=", 1)[1])
                continue
            if not line.startswith("q"):
                raise SwapAlgError(f"line {lineno}: expected 'n =' or 'q<i>:' line")
            head, _, rest = line.partition(":")
            index = int(head[1:])
            fields = dict(
                item.split("=", 1) for item in rest.split() if "=" in item
            )
            harmonics.setdefault(index, []).append(
                (
                    int(fields.get("k", "0")),
                    float(fields.get("cos", "0")),
                    float(fields.get("sin", "0")),
                )
            )
        if order is None:
            raise SwapAlgError("missing 'n = <int>' line")
        return cls(order, harmonics)

    @classmethod
    def from_file(cls, path) -> "OperSpec":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_text(handle.read())


def veronese_oper(order: int) -> OperSpec:
    """The oper of the circle's Veronese curve (base point of the family).

    Solutions are the degree-(n-1) monomials in (cos pi t, sin pi t); the
    holonomy is (-1)^(n-1) Id.  Supported for orders 2 and 3.
    """
    if order == 2:
        return OperSpec(2, {2: [(0, math.pi**2, 0.0)]})
    if order == 3:
        return OperSpec(3, {2: [(0, 4.0 * math.pi**2, 0.0)]})
    raise SwapAlgError("veronese_oper supports orders 2 and 3")


class FundamentalSolution:
    """Frames of a solution basis on a uniform grid over [0, 1]."""

    __slots__ = ("oper", "steps", "frames", "_inverses", "holonomy", "det_drift")

    def __init__(self, oper: OperSpec, steps: int, frames: np.ndarray):
        self.oper = oper
        self.steps = steps
        self.frames = frames
        self._inverses = [None] * (steps + 1)
        self.holonomy = frames[steps].copy()
        dets = np.linalg.det(frames)
        self.det_drift = float(np.max(np.abs(dets - 1.0)))

    # -- grid access -----------------------------------------------------

    def grid_index(self, t) -> int:
        """Index of a parameter on the grid; rejects off-grid values."""
        scaled = Fraction(t) * self.steps if isinstance(t, Fraction) else float(t) * self.steps
        j = round(float(scaled))
        if abs(float(scaled) - j) > 1e-9:
            raise SwapAlgError(f"parameter {t} does not lie on the {self.steps}-point grid")
        return j

    def frame(self, t) -> np.ndarray:
        """Frame at a lift t in R; uses holonomy powers outside [0, 1)."""
        j = self.grid_index(t)
        m, r = divmod(j, self.steps)
        base = self.frames[r]
        if m == 0:
            return base
        return base @ np.linalg.matrix_power(self.holonomy, m)

    def frame_inverse(self, t) -> np.ndarray:
        j = self.grid_index(t)
        m, r = divmod(j, self.steps)
        inv = self._inverses[r]
        if inv is None:
            inv = np.linalg.inv(self.frames[r])
            self._inverses[r] = inv
        if m == 0:
            return inv
        return np.linalg.matrix_power(self.holonomy, -m) @ inv

    # -- curve data --------------------------------------------------------

    def curve(self, t) -> np.ndarray:
        """xi(t): the vector of solution values."""
        return self.frame(t)[0, :]

    def hyperplane(self, t) -> np.ndarray:
        """xi*(t): the covector cutting out the osculating hyperplane."""
        return self.frame_inverse(t)[:, -1]

    def pairing(self, s, t) -> float:
        """<xi(s), xi*(t)>; vanishes exactly at s = t (mod 1)."""
        return float(self.curve(s) @ self.hyperplane(t))


def _companion_matrices(oper: OperSpec, times: np.ndarray) -> np.ndarray:
    n = oper.order
    count = len(times)
    mats = np.zeros((count, n, n))
    for i in range(n - 1):
        mats[:, i, i + 1] = 1.0
    for index in range(2, n + 1):
        # q_index multiplies psi^(n-index), i.e. state component n-index
        mats[:, n - 1, n - index] = -oper.coefficient_values(index, times)
    return mats


def integrate(oper: OperSpec, steps: int = 4096) -> FundamentalSolution:
    """Fixed-step classical fourth-order integration of the companion system."""
    if steps < 64:
        raise SwapAlgError("use at least 64 steps")
    n = oper.order
    h = 1.0 / steps
    times = np.arange(2 * steps + 1) * (h / 2.0)  # grid and half-grid points
    mats = _companion_matrices(oper, times)
    frames = np.empty((steps + 1, n, n))
    frames[0] = np.eye(n)
    y = frames[0]
    for k in range(steps):
        a0 = mats[2 * k]
        a1 = mats[2 * k + 1]
        a2 = mats[2 * k + 2]
        k1 = a0 @ y
        k2 = a1 @ (y + (h / 2.0) * k1)
        k3 = a1 @ (y + (h / 2.0) * k2)
        k4 = a2 @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        frames[k + 1] = y
    return FundamentalSolution(oper, steps, frames)


def richardson_error(oper: OperSpec, steps: int) -> float:
    """Step-halving estimate of the holonomy error at the given resolution."""
    coarse = integrate(oper, steps // 2).holonomy
    fine = integrate(oper, steps).holonomy
    return float(np.max(np.abs(fine - coarse)) / 15.0)


def holonomy_class(sol: FundamentalSolution, tolerance: float = TRIVIAL_HOLONOMY_TOLERANCE) -> str:
    """One of 'trivial-in-PSL', 'unipotent', 'loxodromic', 'elliptic-like'."""
    h = sol.holonomy
    n = h.shape[0]
    eye = np.eye(n)
    if np.max(np.abs(h - eye)) < tolerance or np.max(np.abs(h + eye)) < tolerance:
        return "trivial-in-PSL"
    values = np.linalg.eigvals(h)
    if np.max(np.abs(values.imag)) > 1e-8 * np.max(np.abs(values)):
        return "elliptic-like"
    mags = np.sort(np.abs(values.real))[::-1]
    if all(mags[i + 1] / mags[i] < 1.0 - tolerance for i in range(n - 1)):
        return "loxodromic"
    if np.max(np.abs(np.abs(values.real) - 1.0)) < 1e-6:
        return "unipotent"
    return "elliptic-like"


def is_psl_trivial(sol: FundamentalSolution, tolerance: float = TRIVIAL_HOLONOMY_TOLERANCE) -> bool:
    return holonomy_class(sol, tolerance) == "trivial-in-PSL"


def weak_cross_ratio(sol: FundamentalSolution, x, y, z, t) -> float:
    """b(x, y, z, t) from the Frenet data; requires +-Id holonomy."""
    if not is_psl_trivial(sol):
        raise EvaluationError("multivalued: holonomy is not trivial in PSL")
    ix, iy, iz, it = (sol.grid_index(v) % sol.steps for v in (x, y, z, t))
    if iz == iy or ix == it:
        raise SwapAlgError("need z != y and x != t")
    den = sol.pairing(z, y) * sol.pairing(x, t)
    if den == 0.0:
        raise EvaluationError("degenerate evaluation")
    return sol.pairing(x, y) * sol.pairing(z, t) / den


def coordinate_function(sol: FundamentalSolution, Y, y, via=None) -> float:
    """F_{Y,y}: value at Y of the solution vanishing to maximal order at y.

    Equivalently, the pairing of the dual-parallel covector that reads off
    solution values at Y with the parallel section whose jet at y is
    (0, ..., 0, 1).  `via` transports both sections to an explicit
    parameter first; the value does not depend on it.  Y and y are lifts
    in R (grid-aligned).
    """
    if via is None:
        return float(sol.frame(Y)[0, :] @ sol.frame_inverse(y)[:, -1])
    left = sol.frame(Y)[0, :] @ sol.frame_inverse(via)
    right = sol.frame(via) @ sol.frame_inverse(y)[:, -1]
    return float(left @ right)


def oper_cross_fraction(sol: FundamentalSolution, X, x, Y, y) -> float:
    """F_{X,y} F_{Y,x} / (F_{X,x} F_{Y,y}).

    Equals the weak cross ratio under the argument correspondence
    oper_cross_fraction(X, x, Y, y) = weak_cross_ratio(X, y, Y, x), and is
    unchanged when any lift is shifted by an integer.
    """
    if not is_psl_trivial(sol):
        raise EvaluationError("multivalued: holonomy is not trivial in PSL")
    iX, ix, iY, iy = (sol.grid_index(v) % sol.steps for v in (X, x, Y, y))
    if iX == ix or iY == iy:
        raise EvaluationError("degenerate evaluation: a denominator pairing vanishes")
    den = coordinate_function(sol, X, x) * coordinate_function(sol, Y, y)
    if den == 0.0:
        raise EvaluationError("degenerate evaluation")
    return coordinate_function(sol, X, y) * coordinate_function(sol, Y, x) / den


# -- Poisson brackets of coordinate observables ------------------------------


def _point_config(sol: FundamentalSolution, parameters) -> tuple[PointConfig, list]:
    config = PointConfig()
    points = []
    for name, value in parameters:
        pos = Fraction(value) % 1
        points.append(config.point(name, pos))
    return config, points


def ds_pair_bracket(sol: FundamentalSolution, first, second) -> float:
    """{F_{X,x}, F_{Y,y}} = [Xx, Yy] (F_{X,y} F_{Y,x} - F_{X,x} F_{Y,y} / n^2).

    The bracket of two coordinate observables under the reduced Poisson
    structure on operators; the linking number is taken on the circle
    positions of the four parameters.  The pairing order shown is the one
    under which these brackets extend the swapping bracket of the
    corresponding pair algebra (checked against the symbolic route in
    `ds_crossfraction_bracket`).
    """
    X, x = first
    Y, y = second
    config, (pX, px, pY, py) = _point_config(
        sol, [("X", X), ("x", x), ("Y", Y), ("y", y)]
    )
    if len({pX, px, pY, py}) != 4:
        raise SwapAlgError("points must be pairwise distinct")
    lk = linking_number(pX, px, pY, py)
    if lk == 0:
        return 0.0
    n = sol.oper.order
    F = lambda A, a: coordinate_function(sol, A, a)
    return float(lk) * (F(X, y) * F(Y, x) - F(X, x) * F(Y, y) / n**2)


def ds_crossfraction_bracket(sol: FundamentalSolution, q0, q1, alpha=0) -> tuple[float, float]:
    """Bracket of two cross-fraction observables, computed two ways.

    `q0` and `q1` are quadruples (X, x, Y, y) of grid parameters; the
    observable is F_{X,x} F_{Y,y} / (F_{Y,x} F_{X,y}).  The first return
    value applies the Leibniz and quotient rules directly over the sixteen
    pair brackets of `ds_pair_bracket`; the second expands the swapping
    bracket of the two cross fractions symbolically and evaluates every
    generator pair Zz as F_{Z,z}.  The two coincide for every alpha: on
    balanced fractions the alpha term and the -1/n^2 term both cancel.
    """
    if tuple(q0) == tuple(q1):
        return 0.0, 0.0  # bracket of an observable with itself, by antisymmetry
    params = list(q0) + list(q1)
    config, points = _point_config(
        sol,
        [(f"p{i}", v) for i, v in enumerate(params)],
    )
    if len(set(points)) != 8:
        raise SwapAlgError("the eight points must be pairwise distinct")
    X0, x0, Y0, y0, X1, x1, Y1, y1 = params

    # direct route: chain rule over pair brackets
    F = lambda A, a: coordinate_function(sol, A, a)

    def log_slots(quad):
        X, x, Y, y = quad
        return [((X, x), 1), ((Y, y), 1), ((X, y), -1), ((Y, x), -1)]

    def value(quad):
        X, x, Y, y = quad
        return F(X, x) * F(Y, y) / (F(X, y) * F(Y, x))

    v0 = value(q0)
    v1 = value(q1)
    ds_value = 0.0
    for (a, sa) in log_slots(q0):
        for (b, sb) in log_slots(q1):
            ds_value += sa * sb / (F(*a) * F(*b)) * ds_pair_bracket(sol, a, b)
    ds_value *= v0 * v1

    # symbolic route: swapping bracket, then pairwise evaluation
    pX0, px0, pY0, py0, pX1, px1, pY1, py1 = points
    cf0 = cross_fraction(pX0, pY0, px0, py0)
    cf1 = cross_fraction(pX1, pY1, px1, py1)
    bracket = fraction_bracket(cf0, cf1, alpha)
    swap_value = bracket.evaluate(
        lambda P, Q: coordinate_function(sol, P.position, Q.position)
    )
    return ds_value, swap_value


# -- Frenet validation --------------------------------------------------------


def frenet_validate(sol: FundamentalSolution, samples) -> dict:
    """Wedge volumes of jet blocks for weighted tuples.

    Each sample is (supports, weights) with distinct supports and total
    weight at most n.  The block of (t, j) is the first j rows of the frame
    at t (the jet of the solution curve); rows are normalized and the
    reported value is the p-dimensional volume they span, so 0 flags a
    degenerate tuple.  Returns the per-sample volumes and their minimum.
    """
    if not is_psl_trivial(sol):
        raise EvaluationError("multivalued: holonomy is not trivial in PSL")
    n = sol.oper.order
    volumes = []
    for supports, weights in samples:
        supports = list(supports)
        weights = list(weights)
        if len(supports) != len(weights):
            raise SwapAlgError("supports and weights must have equal length")
        if len({sol.grid_index(t) % sol.steps for t in supports}) != len(supports):
            raise SwapAlgError("supports must be pairwise distinct")
        if any(w < 1 for w in weights) or sum(weights) > n:
            raise SwapAlgError(f"weights must be positive with total at most {n}")
        rows = []
        for t, j in zip(supports, weights):
            block = sol.frame(t)[:j, :]
            rows.extend(block)
        g = np.array(rows)
        g = g / np.linalg.norm(g, axis=1, keepdims=True)
        gram = g @ g.T
        volumes.append(float(math.sqrt(max(np.linalg.det(gram), 0.0))))
    return {"volumes": volumes, "minimum": min(volumes) if volumes else None}


# -- constructing operators with trivial holonomy -----------------------------


def solve_trivial_holonomy(
    base: OperSpec,
    extra_harmonics,
    target_sign: int,
    stages=(1024, 4096),
    max_iterations: int = 25,
    tolerance: float = 1e-11,
) -> OperSpec:
    """Adjust (constant, cos 2pi t, sin 2pi t) parts of q_2 by Newton
    iteration until the holonomy equals target_sign * Id.

    `extra_harmonics` is a fixed list of (k, cos, sin) contributions to q_2
    with k >= 2; the three lowest modes are the unknowns.  Order 2 only:
    the holonomy condition is three equations (the fourth entry follows
    from det = 1), matching the three unknowns.  The solve runs through the
    grid resolutions in `stages`, so the final iterate is converged on the
    finest grid.
    """
    if base.order != 2:
        raise SwapAlgError("the Newton search is implemented for order 2")
    target = target_sign * np.eye(2)
    fixed = list(base.coefficients.get(2, ())) + list(extra_harmonics)

    def build(u):
        c0, a1, b1 = u
        return OperSpec(2, {2: fixed + [(0, c0, 0.0), (1, a1, b1)]})

    def residual(u, steps):
        h = integrate(build(u), steps).holonomy
        d = h - target
        return np.array([d[0, 0], d[0, 1], d[1, 0]])

    u = np.zeros(3)
    for steps in stages:
        r = residual(u, steps)
        for _ in range(max_iterations):
            if np.max(np.abs(r)) < tolerance:
                break
            jac = np.empty((3, 3))
            eps = 1e-6
            for col in range(3):
                du = np.zeros(3)
                du[col] = eps
                jac[:, col] = (residual(u + du, steps) - r) / eps
            u = u - np.linalg.solve(jac, r)
            r = residual(u, steps)
        else:
            raise SwapAlgError("holonomy search did not converge")
    return build(u)


def random_trivial_holonomy_opers(count: int, seed: int, amplitude: float = 2.0) -> list[OperSpec]:
    """Deterministic family of order-2 operators with holonomy -Id.

    Random harmonics of order >= 2 perturb the Veronese operator and the
    low modes are solved for; candidates are kept only when the final
    holonomy is trivial within `TRIVIAL_HOLONOMY_TOLERANCE` at 4096 steps.
    """
    import random as _random

    rng = _random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < 20 * count:
        attempts += 1
        extra = [
            (k, rng.uniform(-amplitude, amplitude), rng.uniform(-amplitude, amplitude))
            for k in (2, 3)
        ]
        try:
            oper = solve_trivial_holonomy(veronese_oper(2), extra, target_sign=-1)
        except SwapAlgError:
            continue
        if is_psl_trivial(integrate(oper, 4096)):
            out.append(oper)
    if len(out) < count:
        raise SwapAlgError("could not assemble enough trivial-holonomy operators")
    return out
