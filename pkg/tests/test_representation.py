import math
import random
from fractions import Fraction

import numpy as np
import pytest

from conftest import random_hyperbolic_sl2
from swapalg import halfplane
from swapalg.circle import linking_number
from swapalg.errors import EvaluationError, NotLoxodromicError, SwapAlgError
from swapalg.multifraction import cross_fraction, elementary, multi_fraction, wolpert_rhs
from swapalg.representation import (
    Representation,
    eigen_split,
    symmetric_square,
    wolpert_check,
)

COSH1 = math.cosh(1.0)
SINH1 = math.sinh(1.0)


def two_generator_rep(seed=0, **kwargs):
    rng = random.Random(seed)
    return Representation(
        {"a": random_hyperbolic_sl2(rng, **kwargs), "b": random_hyperbolic_sl2(rng, **kwargs)}
    )


# -- eigendecomposition ---------------------------------------------------------


def test_eigen_split_diagonal():
    data = eigen_split(np.diag([2.0, 0.5]))
    assert np.allclose(data.eigenvalues, [2.0, 0.5])
    assert np.allclose(np.abs(data.right[:, 0]), [1.0, 0.0])
    assert np.allclose(np.abs(data.right[:, 1]), [0.0, 1.0])


def test_eigen_split_rejects_rotation():
    with pytest.raises(NotLoxodromicError, match="not loxodromic"):
        eigen_split([[0.0, -1.0], [1.0, 0.0]])


def test_eigen_split_rejects_tied_moduli():
    with pytest.raises(NotLoxodromicError):
        eigen_split(np.diag([2.0, 2.0 * (1.0 - 1e-8)]))
    with pytest.raises(NotLoxodromicError):
        eigen_split(np.diag([2.0, -2.0, 0.25]))


def test_eigen_split_rejects_negative_determinant_even_dim():
    with pytest.raises(SwapAlgError, match="negative determinant"):
        eigen_split([[2.0, 0.0], [0.0, -0.5]])


def test_eigen_split_normalizes_sign_for_odd_dim():
    data = eigen_split(-np.diag([4.0, 1.0, 0.25]))
    assert np.linalg.det(data.matrix) == pytest.approx(1.0)


def test_projectors_resolve_identity():
    rng = random.Random(1)
    for _ in range(10):
        data = eigen_split(random_hyperbolic_sl2(rng))
        total = data.projector(0) + data.projector(1)
        assert np.max(np.abs(total - np.eye(2))) < 1e-12


def test_biorthogonality():
    rng = random.Random(2)
    data = eigen_split(symmetric_square(random_hyperbolic_sl2(rng)))
    gram = data.left @ data.right
    off = gram - np.diag(np.diag(gram))
    assert np.max(np.abs(off)) < 1e-10
    assert np.min(np.abs(np.diag(gram))) > 1e-12


# -- boundary points and the action ----------------------------------------------


def test_fixed_points_of_inverse_swap():
    rep = two_generator_rep()
    assert rep.fixed_point("a", +1) == rep.fixed_point("a'", -1)
    assert rep.fixed_point("a", -1) == rep.fixed_point("a'", +1)
    assert rep.fixed_point("a a", +1) == rep.fixed_point("a", +1)


def test_inverse_matrix_consistency():
    rep = two_generator_rep()
    assert np.max(np.abs(rep.matrix("a a'") - np.eye(2))) < 1e-12
    inv = np.linalg.inv(rep.matrix("a"))
    assert np.max(np.abs(rep.matrix("a'") - inv)) < 1e-12


def test_action_fixes_own_points():
    rep = two_generator_rep()
    plus = rep.fixed_point("a", +1)
    assert rep.act("a", plus) == plus
    h_plus = rep.fixed_point("b", +1)
    assert rep.act("a'", rep.act("a", h_plus)) == h_plus


def test_action_matches_moebius_for_raw_points():
    rep = two_generator_rep(seed=3)
    m = rep.matrix("a")
    t = 0.37
    image = rep.act("a", rep.boundary_point(t))
    expected = (m[0, 0] * t + m[0, 1]) / (m[1, 0] * t + m[1, 1])
    data = rep._points[image.position]
    got = data.vector[0] / data.vector[1]
    assert abs(got - expected) < 1e-10


def test_action_on_fixed_points_matches_moebius():
    rep = two_generator_rep(seed=4)
    h_plus = rep.fixed_point("b", +1)
    v = rep._points[h_plus.position].vector
    t = v[0] / v[1]
    m = rep.matrix("a")
    expected = (m[0, 0] * t + m[0, 1]) / (m[1, 0] * t + m[1, 1])
    image = rep.act("a", h_plus)
    w = rep._points[image.position].vector
    assert abs(w[0] / w[1] - expected) < 1e-10


# -- pair evaluation ---------------------------------------------------------------


def test_pair_value_determinant_realization():
    rep = two_generator_rep()
    inf = rep.boundary_point(None)
    zero = rep.boundary_point(0.0)
    assert rep.pair_value(inf, zero) == pytest.approx(1.0)
    assert rep.pair_value(inf, inf) == 0.0


def test_pair_value_annihilates_own_point():
    rep = two_generator_rep(seed=5)
    for word in ("a", "b", "a b"):
        for sign in (+1, -1):
            point = rep.fixed_point(word, sign)
            assert abs(rep.pair_value(point, point)) < 1e-12


def test_top_vector_annihilated_by_lower_left_data():
    rng = random.Random(6)
    data = eigen_split(symmetric_square(random_hyperbolic_sl2(rng)))
    for j in range(1, 3):
        assert abs(data.left[j] @ data.right[:, 0]) < 1e-10


def test_classical_cross_ratio_value():
    rep = two_generator_rep()
    X = rep.boundary_point(None)
    Y = rep.boundary_point(1.0)
    x = rep.boundary_point(0.0)
    y = rep.boundary_point(-1.0)
    assert rep.cross_ratio(X, Y, x, y) == pytest.approx(2.0)


def test_cross_ratio_normalisations_are_symbolic():
    rep = two_generator_rep()
    X = rep.boundary_point(0.3)
    Y = rep.boundary_point(1.7)
    x = rep.boundary_point(-2.0)
    assert cross_fraction(X, Y, x, x) == 1
    assert rep.eval_fraction(cross_fraction(X, Y, x, x)) == 1.0


def test_cross_ratio_cocycles_numerically():
    rep = two_generator_rep(seed=7)
    rng = random.Random(7)
    worst = 0.0
    for _ in range(50):
        coords = []
        while len(coords) < 6:
            t = rng.uniform(-4, 4)
            if all(abs(t - s) > 0.1 for s in coords):
                coords.append(t)
        X, Y, x, y, z, W = (rep.boundary_point(t) for t in coords)
        b = rep.cross_ratio
        worst = max(worst, abs(b(X, Y, x, y) - b(X, Y, x, z) * b(X, Y, z, y)))
        worst = max(worst, abs(b(X, Y, x, y) - b(X, z, x, y) * b(z, Y, x, y)))
    assert worst < 1e-9


def test_eval_rejects_unbalanced():
    rep = two_generator_rep()
    from swapalg.algebra import generator
    from swapalg.multifraction import BalancedFraction

    X = rep.boundary_point(0.25)
    x = rep.boundary_point(1.25)
    unbalanced = BalancedFraction(generator(X, x))
    with pytest.raises(EvaluationError, match="scale-dependent"):
        rep.eval_fraction(unbalanced)


def test_eval_rejects_unregistered_points():
    rep = two_generator_rep()
    from swapalg.circle import PointConfig

    other = PointConfig()
    p = other.point("p", Fraction(1, 3))
    q = other.point("q", Fraction(2, 3))
    with pytest.raises(EvaluationError):
        rep.pair_value(p, q)


# -- periods, widths, girth ---------------------------------------------------------


def test_width_of_diagonal():
    rep = Representation({"a": np.diag([2.0, 0.5]), "b": [[COSH1, SINH1], [SINH1, COSH1]]})
    assert rep.width("a") == pytest.approx(math.log(4.0))


def test_period_equals_width_and_anchor_free():
    rep = two_generator_rep(seed=8)
    anchors = [rep.fixed_point("b", +1), rep.fixed_point("b", -1), rep.boundary_point(0.123)]
    values = [rep.period("a", anchor) for anchor in anchors]
    assert abs(values[0] - rep.width("a")) < 1e-9
    assert max(values) - min(values) < 1e-9


def test_period_on_symmetric_square():
    rng = random.Random(9)
    rep = Representation(
        {
            "a": symmetric_square(random_hyperbolic_sl2(rng)),
            "b": symmetric_square(random_hyperbolic_sl2(rng)),
        }
    )
    assert rep.synthetic_order
    anchor = rep.fixed_point("b", +1)
    assert abs(rep.period("a", anchor) - rep.width("a")) < 1e-9


def test_period_rejects_fixed_point_anchor():
    rep = two_generator_rep()
    with pytest.raises(SwapAlgError):
        rep.period("a", rep.fixed_point("a", +1))


def test_girth_examples():
    rep = Representation({"a": np.diag([2.0, 0.5]), "b": [[COSH1, SINH1], [SINH1, COSH1]]})
    assert rep.girth(["a"]) == pytest.approx(0.25)
    assert rep.girth(["a", "b"]) >= rep.girth(["a"])
    assert rep.girth(["a", "b"]) < 1.0
    with pytest.raises(SwapAlgError):
        rep.girth([])


# -- Wilson loops and rank tests -------------------------------------------------------


def test_wilson_ratio_converges_to_elementary():
    rep = two_generator_rep(seed=10, low=1.2, high=1.5)
    target = rep.elementary_value(("a", "b"))
    girth = rep.girth(["a", "b"])
    previous = None
    for p in (5, 10, 20, 30):
        err = abs(rep.wilson_ratio("a", "b", p) - target)
        assert err < 5.0 * girth**p
        if previous is not None:
            assert err < previous
        previous = err


def test_wilson_ratio_same_eigenbasis():
    rep = Representation({"a": np.diag([2.0, 0.5]), "b": np.diag([3.0, 1 / 3.0])})
    assert rep.elementary_value(("a", "b")) == pytest.approx(1.0)
    assert rep.wilson_ratio("a", "b", 25) == pytest.approx(1.0, abs=1e-6)
    assert rep.elementary_value(("a", "a")) == pytest.approx(1.0)


def test_wilson_ratio_validates_exponent():
    rep = two_generator_rep()
    with pytest.raises(SwapAlgError):
        rep.wilson_ratio("a", "b", 0)


def test_chi_rank_two():
    rep = two_generator_rep(seed=11)
    rng = random.Random(11)
    coords = []
    while len(coords) < 8:
        t = rng.uniform(-4, 4)
        if all(abs(t - s) > 0.2 for s in coords):
            coords.append(t)
    pts = [rep.boundary_point(t) for t in coords]
    assert abs(rep.chi(pts[:4], pts[4:])) < 1e-8
    assert abs(rep.chi(pts[:3], pts[4:7])) > 1e-4


def test_chi_single_entry_is_cross_ratio():
    rep = two_generator_rep(seed=12)
    pts = [rep.boundary_point(t) for t in (-2.0, -0.5, 0.5, 2.0)]
    X = [pts[0], pts[1]]
    x = [pts[2], pts[3]]
    expected = rep.cross_ratio(X[1], X[0], x[1], x[0])
    assert rep.chi(X, x) == pytest.approx(expected)


def test_chi_validates_tuples():
    rep = two_generator_rep()
    pts = [rep.boundary_point(t) for t in (-2.0, -0.5, 0.5, 2.0)]
    with pytest.raises(SwapAlgError):
        rep.chi([pts[0], pts[1], pts[1]], [pts[2], pts[3], pts[0]])


# -- the length-bracket cross-check ------------------------------------------------------


def test_wolpert_perpendicular_pair():
    lhs, rhs = wolpert_check(np.diag([2.0, 0.5]), [[COSH1, SINH1], [SINH1, COSH1]])
    assert abs(rhs) < 1e-9
    assert abs(lhs) < 1e-9


def test_wolpert_elementary_values_are_half():
    rep = Representation({"g": np.diag([2.0, 0.5]), "h": [[COSH1, SINH1], [SINH1, COSH1]]})
    for words in (("g", "h"), ("g'", "h"), ("g", "h'"), ("g'", "h'")):
        assert rep.elementary_value(words) == pytest.approx(0.5)


def test_wolpert_random_crossing_pairs():
    rng = random.Random(13)
    produced = 0
    while produced < 10:
        g = random_hyperbolic_sl2(rng)
        h = random_hyperbolic_sl2(rng)
        try:
            lhs, rhs = wolpert_check(g, h)
        except SwapAlgError:
            continue
        produced += 1
        assert abs(lhs - rhs) < 1e-6
        assert abs(lhs) <= 2.0 + 1e-9


def test_wolpert_rejects_disjoint_axes():
    g = np.diag([2.0, 0.5])
    shift = np.array([[1.0, 5.0], [0.0, 1.0]])
    h = shift @ np.array([[COSH1, SINH1], [SINH1, COSH1]]) @ np.linalg.inv(shift)
    with pytest.raises(SwapAlgError):
        wolpert_check(g, h)


def test_halfplane_oracle_internals():
    assert halfplane.fixed_points(np.diag([2.0, 0.5])) == (math.inf, 0.0)
    plus, minus = halfplane.fixed_points([[COSH1, SINH1], [SINH1, COSH1]])
    assert plus == pytest.approx(1.0) and minus == pytest.approx(-1.0)
    angle = halfplane.crossing_angle(
        np.diag([2.0, 0.5]), [[COSH1, SINH1], [SINH1, COSH1]]
    )
    assert angle == pytest.approx(math.pi / 2)


def test_linking_gate_matches_halfplane_geometry():
    rng = random.Random(14)
    for _ in range(30):
        g = random_hyperbolic_sl2(rng)
        h = random_hyperbolic_sl2(rng)
        rep = Representation({"g": g, "h": h})
        lk = linking_number(
            rep.fixed_point("g", +1),
            rep.fixed_point("g", -1),
            rep.fixed_point("h", +1),
            rep.fixed_point("h", -1),
        )
        crosses = True
        try:
            halfplane.crossing_angle(g, h)
        except SwapAlgError:
            crosses = False
        assert crosses == (lk != 0)


# -- the representation file format -------------------------------------------------------


def test_representation_from_text():
    rep = Representation.from_text(
        """
        n = 2
        element a  2.0 0.0   # diagonal
                   0.0 0.5
        element b  1.5430806348152437 1.1752011936438014
                   1.1752011936438014 1.5430806348152437
        """
    )
    assert rep.dimension == 2
    assert rep.width("a") == pytest.approx(math.log(4.0))


def test_representation_text_errors():
    with pytest.raises(SwapAlgError):
        Representation.from_text("element a 1 0 0 1")
    with pytest.raises(SwapAlgError):
        Representation.from_text("n = 2\nelement a 1 0 0")


def test_multi_fraction_evaluates_to_one_for_identity():
    rep = two_generator_rep(seed=15)
    pts = [rep.boundary_point(t) for t in (-2.0, -0.5, 0.5, 2.0)]
    f = multi_fraction((pts[0], pts[1]), (pts[2], pts[3]), (0, 1))
    assert rep.eval_fraction(f) == 1.0


def test_wolpert_rhs_evaluates_with_representation_universe():
    rep = two_generator_rep(seed=16)
    value = wolpert_rhs(rep, "a", "b")
    if not value.is_zero:
        assert abs(rep.eval_fraction(value)) <= 2.0 + 1e-9


def test_wilson_ratio_extreme_powers_stay_finite():
    rep = two_generator_rep(seed=20)
    import math as _math

    value = rep.wilson_ratio("a", "b", 500)
    assert _math.isfinite(value)
    assert value == pytest.approx(rep.elementary_value(("a", "b")), abs=1e-12)
