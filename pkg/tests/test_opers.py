import math
import random
from fractions import Fraction

import numpy as np
import pytest

from swapalg.errors import EvaluationError, SwapAlgError
from swapalg.opers import (
    OperSpec,
    coordinate_function,
    ds_crossfraction_bracket,
    ds_pair_bracket,
    frenet_validate,
    holonomy_class,
    integrate,
    oper_cross_fraction,
    random_trivial_holonomy_opers,
    richardson_error,
    solve_trivial_holonomy,
    veronese_oper,
    weak_cross_ratio,
)

PI2 = math.pi**2
M = 512


@pytest.fixture(scope="module")
def circle_solution():
    return integrate(veronese_oper(2), M)


def grid(j, steps=M):
    return Fraction(j, steps)


def cot_cross_ratio(a, b, c, d):
    cot = lambda t: math.cos(math.pi * t) / math.sin(math.pi * t)
    p, q, r, s = cot(a), cot(b), cot(c), cot(d)
    return (p - q) * (r - s) / ((r - q) * (p - s))


# -- integration and holonomy ------------------------------------------------


def test_constant_pi_squared_gives_minus_identity(circle_solution):
    assert np.max(np.abs(circle_solution.holonomy + np.eye(2))) < 1e-8
    assert holonomy_class(circle_solution) == "trivial-in-PSL"


def test_zero_coefficient_is_unipotent():
    sol = integrate(OperSpec(2), 128)
    assert holonomy_class(sol) == "unipotent"
    assert np.max(np.abs(sol.holonomy - [[1.0, 1.0], [0.0, 1.0]])) < 1e-10


def test_four_pi_squared_gives_plus_identity():
    sol = integrate(OperSpec(2, {2: [(0, 4 * PI2, 0.0)]}), M)
    assert np.max(np.abs(sol.holonomy - np.eye(2))) < 1e-8
    assert holonomy_class(sol) == "trivial-in-PSL"


def test_negative_constant_is_loxodromic():
    sol = integrate(OperSpec(2, {2: [(0, -1.0, 0.0)]}), 128)
    assert holonomy_class(sol) == "loxodromic"


def test_small_positive_constant_is_elliptic_like():
    sol = integrate(OperSpec(2, {2: [(0, 1.0, 0.0)]}), 128)
    assert holonomy_class(sol) == "elliptic-like"


def test_determinant_conserved(circle_solution):
    assert circle_solution.det_drift < 1e-8


def test_third_order_veronese():
    sol = integrate(veronese_oper(3), M)
    assert holonomy_class(sol) == "trivial-in-PSL"
    assert np.max(np.abs(sol.holonomy - np.eye(3))) < 1e-7
    assert sol.det_drift < 1e-8


def test_step_floor_and_grid_snapping(circle_solution):
    with pytest.raises(SwapAlgError):
        integrate(veronese_oper(2), 32)
    with pytest.raises(SwapAlgError, match="grid"):
        circle_solution.frame(0.1234567)
    assert circle_solution.grid_index(Fraction(3, M)) == 3
    assert circle_solution.grid_index(1.0) == M


def test_richardson_estimate_is_small():
    assert richardson_error(veronese_oper(2), 256) < 1e-8


# -- weak cross ratios -----------------------------------------------------------


def test_weak_cross_ratio_matches_classical(circle_solution):
    rng = random.Random(0)
    for _ in range(25):
        idx = rng.sample(range(1, M), 4)
        got = weak_cross_ratio(circle_solution, *(grid(j) for j in idx))
        want = cot_cross_ratio(*(j / M for j in idx))
        assert abs(got - want) <= 1e-7 * max(1.0, abs(want))


def test_weak_cross_ratio_normalisations(circle_solution):
    x, y, t = grid(10), grid(100), grid(400)
    assert weak_cross_ratio(circle_solution, x, y, x, t) == 1.0
    assert weak_cross_ratio(circle_solution, x, y, t, y) == 1.0


def test_weak_cross_ratio_cocycles(circle_solution):
    # the hyperplane slots are arguments 2 and 4, the curve slots 1 and 3;
    # each family satisfies its own multiplicative cocycle
    rng = random.Random(1)
    for _ in range(20):
        x, y, z, t, s = (grid(j) for j in rng.sample(range(1, M), 5))
        lhs = weak_cross_ratio(circle_solution, x, y, z, t)
        chained_hyperplane = weak_cross_ratio(
            circle_solution, x, y, z, s
        ) * weak_cross_ratio(circle_solution, x, s, z, t)
        assert abs(lhs - chained_hyperplane) < 1e-8 * max(1.0, abs(lhs))
        chained_curve = weak_cross_ratio(
            circle_solution, x, y, s, t
        ) * weak_cross_ratio(circle_solution, s, y, z, t)
        assert abs(lhs - chained_curve) < 1e-8 * max(1.0, abs(lhs))


def test_weak_cross_ratio_rejects_multivalued():
    sol = integrate(OperSpec(2), 128)  # unipotent holonomy
    with pytest.raises(EvaluationError, match="multivalued"):
        weak_cross_ratio(sol, grid(1, 128), grid(40, 128), grid(80, 128), grid(100, 128))


def test_weak_cross_ratio_rejects_coincidences(circle_solution):
    with pytest.raises(SwapAlgError):
        weak_cross_ratio(circle_solution, grid(1), grid(2), grid(2), grid(9))


# -- coordinate functions ----------------------------------------------------------


def test_coordinate_sine_pattern(circle_solution):
    Y, y = grid(100), grid(417)
    expected = math.sin(math.pi * (100 - 417) / M) / math.pi
    assert coordinate_function(circle_solution, Y, y) == pytest.approx(expected, abs=1e-10)


def test_coordinate_transport_constancy(circle_solution):
    Y, y = grid(77), grid(303)
    values = [
        coordinate_function(circle_solution, Y, y, via=grid(k))
        for k in range(0, M, M // 16)
    ]
    assert max(values) - min(values) < 1e-8


def test_coordinate_mod_one_for_trivial_holonomy():
    sol = integrate(OperSpec(2, {2: [(0, 4 * PI2, 0.0)]}), M)
    Y, y = grid(33), grid(190)
    assert coordinate_function(sol, Y + 1, y) == pytest.approx(
        coordinate_function(sol, Y, y), abs=1e-8
    )
    assert coordinate_function(sol, Y, y - 2) == pytest.approx(
        coordinate_function(sol, Y, y), abs=1e-8
    )


def test_coordinate_vanishes_on_diagonal(circle_solution):
    t = grid(123)
    assert abs(coordinate_function(circle_solution, t, t)) < 1e-12


# -- cross fractions from coordinates -----------------------------------------------


def test_oper_cross_fraction_matches_weak_cross_ratio(circle_solution):
    rng = random.Random(2)
    for _ in range(20):
        X, x, Y, y = (grid(j) for j in rng.sample(range(1, M), 4))
        direct = oper_cross_fraction(circle_solution, X, x, Y, y)
        assert direct == pytest.approx(
            weak_cross_ratio(circle_solution, X, y, Y, x), rel=1e-9
        )


def test_oper_cross_fraction_lift_invariance(circle_solution):
    X, x, Y, y = grid(50), grid(150), grid(290), grid(460)
    base = oper_cross_fraction(circle_solution, X, x, Y, y)
    shifted = oper_cross_fraction(circle_solution, X + 1, x, Y - 2, y)
    assert shifted == pytest.approx(base, rel=1e-8)


def test_oper_cross_fraction_normalisations(circle_solution):
    # x = y and X = Y are the cross-ratio normalisation cases
    assert oper_cross_fraction(circle_solution, grid(3), grid(9), grid(40), grid(9)) == 1.0
    assert oper_cross_fraction(circle_solution, grid(3), grid(9), grid(3), grid(80)) == 1.0


def test_oper_cross_fraction_rejects_poles(circle_solution):
    with pytest.raises(EvaluationError, match="degenerate"):
        oper_cross_fraction(circle_solution, grid(3), grid(3), grid(9), grid(12))


# -- the reduced bracket --------------------------------------------------------------


def test_ds_pair_bracket_unlinked_vanishes(circle_solution):
    value = ds_pair_bracket(
        circle_solution, (grid(10), grid(20)), (grid(100), grid(200))
    )
    assert value == 0.0


def test_ds_pair_bracket_antisymmetry(circle_solution):
    first = (grid(10), grid(150))
    second = (grid(80), grid(300))
    forward = ds_pair_bracket(circle_solution, first, second)
    backward = ds_pair_bracket(circle_solution, second, first)
    assert abs(forward + backward) < 1e-10
    assert forward != 0.0


def test_ds_pair_bracket_rejects_coincident(circle_solution):
    with pytest.raises(SwapAlgError):
        ds_pair_bracket(circle_solution, (grid(10), grid(20)), (grid(10), grid(200)))


def test_ds_crossfraction_bracket_agreement(circle_solution):
    rng = random.Random(3)
    for _ in range(6):
        idx = rng.sample(range(1, M), 8)
        q0 = tuple(grid(j) for j in idx[:4])
        q1 = tuple(grid(j) for j in idx[4:])
        ds_value, swap_value = ds_crossfraction_bracket(circle_solution, q0, q1)
        assert ds_value == pytest.approx(swap_value, abs=1e-9)
        for alpha in (1, Fraction(5), Fraction(-1, 4)):
            again = ds_crossfraction_bracket(circle_solution, q0, q1, alpha)
            assert again == (ds_value, swap_value)


def test_ds_crossfraction_bracket_self_is_zero(circle_solution):
    quad = (grid(11), grid(111), grid(222), grid(333))
    assert ds_crossfraction_bracket(circle_solution, quad, quad) == (0.0, 0.0)


def test_ds_crossfraction_bracket_unlinked_is_zero(circle_solution):
    q0 = (grid(2), grid(10), grid(20), grid(30))
    q1 = (grid(260), grid(280), grid(300), grid(320))
    ds_value, swap_value = ds_crossfraction_bracket(circle_solution, q0, q1)
    assert ds_value == 0.0 and swap_value == 0.0


def test_ds_crossfraction_bracket_rejects_overlap(circle_solution):
    q0 = (grid(2), grid(10), grid(20), grid(30))
    q1 = (grid(2), grid(280), grid(300), grid(320))
    with pytest.raises(SwapAlgError):
        ds_crossfraction_bracket(circle_solution, q0, q1)


# -- Frenet validation ------------------------------------------------------------------


def test_frenet_veronese_volumes_bounded_away(circle_solution):
    rng = random.Random(4)
    samples = []
    for _ in range(20):
        i, j = sorted(rng.sample(range(M), 2))
        samples.append(([grid(i), grid(j)], [1, 1]))
        samples.append(([grid(i)], [2]))
    result = frenet_validate(circle_solution, samples)
    assert result["minimum"] > 1e-6


def test_frenet_rejects_bad_tuples(circle_solution):
    with pytest.raises(SwapAlgError, match="distinct"):
        frenet_validate(circle_solution, [([grid(3), grid(3)], [1, 1])])
    with pytest.raises(SwapAlgError, match="weights"):
        frenet_validate(circle_solution, [([grid(3), grid(5)], [2, 1])])


def test_full_weight_wedge_is_frame_determinant(circle_solution):
    # the weight-n jet block at one point is the whole frame
    t = grid(200)
    raw = np.linalg.det(circle_solution.frame(t))
    assert raw == pytest.approx(1.0, abs=1e-10)


# -- constructing trivial holonomy --------------------------------------------------------


def test_solve_trivial_holonomy_converges():
    oper = solve_trivial_holonomy(
        veronese_oper(2), [(2, 0.8, -0.4)], target_sign=-1, stages=(512, 1024)
    )
    sol = integrate(oper, 1024)
    assert np.max(np.abs(sol.holonomy + np.eye(2))) < 1e-9


def test_random_trivial_holonomy_family_is_deterministic():
    first = random_trivial_holonomy_opers(2, seed=5)
    second = random_trivial_holonomy_opers(2, seed=5)
    assert [o.coefficients for o in first] == [o.coefficients for o in second]
    for oper in first:
        assert holonomy_class(integrate(oper, 2048)) == "trivial-in-PSL"


# -- the coefficient file format -----------------------------------------------------------


def test_oper_spec_from_text():
    oper = OperSpec.from_text(
        """
        n = 3
        q2: k=0 cos=39.47841760435743 sin=0
        q3: k=1 cos=0.25 sin=-0.5   # one harmonic
        q3: k=2 cos=0.125 sin=0
        """
    )
    assert oper.order == 3
    assert len(oper.coefficients[3]) == 2
    times = np.array([0.0, 0.25])
    q3 = oper.coefficient_values(3, times)
    assert q3[0] == pytest.approx(0.375)


def test_oper_spec_validation():
    with pytest.raises(SwapAlgError):
        OperSpec(1)
    with pytest.raises(SwapAlgError):
        OperSpec(2, {5: [(0, 1.0, 0.0)]})
    with pytest.raises(SwapAlgError):
        OperSpec.from_text("q2: k=0 cos=1 sin=0")


# -- higher order ------------------------------------------------------------------


def test_frenet_validation_third_order():
    sol = integrate(veronese_oper(3), 256)
    samples = [
        ([grid(10, 256), grid(100, 256), grid(200, 256)], [1, 1, 1]),
        ([grid(40, 256), grid(190, 256)], [2, 1]),
        ([grid(77, 256)], [3]),
        ([grid(5, 256), grid(128, 256)], [1, 1]),
    ]
    result = frenet_validate(sol, samples)
    assert result["minimum"] > 1e-4
    assert len(result["volumes"]) == 4


def test_third_order_weak_cross_ratio_is_squared_classical():
    # the third-order circle operator traces a conic; its hyperplane
    # pairing vanishes to second order on the diagonal, so each cross
    # ratio is the square of the classical one
    sol = integrate(veronese_oper(3), M)
    rng = random.Random(6)
    for _ in range(15):
        idx = rng.sample(range(1, M), 4)
        got = weak_cross_ratio(sol, *(grid(j) for j in idx))
        classical = cot_cross_ratio(*(j / M for j in idx))
        assert got == pytest.approx(classical**2, rel=1e-6)
