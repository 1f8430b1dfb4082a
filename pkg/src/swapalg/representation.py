"""Numeric evaluation of pair fractions against matrix representations.

A representation assigns to each generator label an n x n real matrix with
determinant one and purely loxodromic dynamics: real eigenvalues of
pairwise distinct absolute value.  Each group word g then carries

  * eigenvalues  |lambda_1| > ... > |lambda_n| > 0,
  * right eigenvectors R_1..R_n (columns) and left eigenvectors L_1..L_n
    (rows), biorthogonal: L_i R_j = 0 for i != j;

and two boundary fixed points, g+ (attracting) and g-(repelling), which
are registered as circle points.  A generator pair Xx evaluates to the
pairing of the hyperplane data of x against the curve data of X:

    value(Xx) = < hyperplane(x), vector(X) >,

where vector(g+) = R_1, vector(g-) = R_n, hyperplane(g+) = L_n and
hyperplane(g-) = L_1 (the covector annihilating the osculating hyperplane
at the point, so value(Xx) = 0 exactly when X = x).  For n = 2 this is the
determinant pairing det(v_X, v_x) on boundary coordinates and reproduces
the classical projective cross ratio.

Each point's vector and hyperplane are defined only up to scale, so only
balanced fractions of pair values are well defined; `eval_fraction` refuses
anything else.

For n = 2 the circle positions of fixed points come from the eigenvector
directions on the projective line, so linking numbers agree with the
boundary cyclic order.  For n > 2 there is no canonical order: positions
are assigned in registration order and `synthetic_order` is set, which is
fine for pure evaluation (periods, widths, traces, determinants) but makes
linking-dependent quantities meaningless unless the caller supplies
positions.

Representations are built once and then read only; evaluations are pure.
Words used concurrently should be resolved in a pre-pass, since resolution
caches eigendata.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import halfplane
from .circle import CirclePoint, PointConfig, as_position, linking_number
from .errors import EvaluationError, NotLoxodromicError, SwapAlgError
from .multifraction import (
    BalancedFraction,
    cross_fraction,
    elementary,
    wolpert_rhs,
)
from .words import (
    Word,
    canonical_class,
    conjugate_word,
    parse_word,
    word_text,
)

LOXODROMY_TOLERANCE = 1e-6  # adjacent |eigenvalue| ratios above 1 - tol are rejected


class GroupElementData:
    """Eigendata of one resolved word: sorted eigenvalues and biorthogonal
    left/right eigenvectors."""

    __slots__ = ("label", "matrix", "eigenvalues", "right", "left", "pairings")

    def __init__(self, label, matrix, eigenvalues, right, left, pairings):
        self.label = label
        self.matrix = matrix
        self.eigenvalues = eigenvalues
        self.right = right  # columns R_1..R_n, unit norm
        self.left = left  # rows L_1..L_n, unit norm
        self.pairings = pairings  # L_i R_i, nonzero

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def projector(self, i: int) -> np.ndarray:
        """Spectral projector onto the i-th eigenline (trace one)."""
        return np.outer(self.right[:, i], self.left[i]) / self.pairings[i]

    def __repr__(self):
        return f"GroupElementData({self.label!r}, eigenvalues={self.eigenvalues})"


def eigen_split(matrix, label: str = "", tolerance: float = LOXODROMY_TOLERANCE) -> GroupElementData:
    """Eigendecomposition of a purely loxodromic unimodular matrix.

    Rejects complex or modulus-tied spectra ("not loxodromic") and negative
    determinants for even n; for odd n the sign ambiguity is removed by
    normalizing the determinant to +1.
    """
    m = np.array(matrix, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SwapAlgError("matrix must be square")
    n = m.shape[0]
    det = np.linalg.det(m)
    if det == 0:
        raise SwapAlgError("matrix is singular")
    if det < 0:
        if n % 2 == 0:
            raise SwapAlgError("negative determinant has no loxodromic class")
        m = -m
        det = -det
    m = m / det ** (1.0 / n)
    values, vectors = np.linalg.eig(m)
    if np.max(np.abs(values.imag)) > 1e-9 * np.max(np.abs(values)):
        raise NotLoxodromicError(f"not loxodromic: complex spectrum for {label or matrix}")
    values = values.real
    order = np.argsort(-np.abs(values))
    values = values[order]
    right = np.real(vectors[:, order])
    mags = np.abs(values)
    for i in range(n - 1):
        if mags[i + 1] / mags[i] > 1.0 - tolerance:
            raise NotLoxodromicError(
                f"not loxodromic: eigenvalue moduli too close for {label or matrix}"
            )
    right = right / np.linalg.norm(right, axis=0, keepdims=True)
    # Inverse-iteration polish: with distinct eigenvalues the nearly
    # singular solve amplifies the true eigendirection, gaining several
    # digits over the raw solver output.
    eye = np.eye(n)
    for i in range(n):
        v = right[:, i]
        lam = values[i]
        for _ in range(2):
            try:
                w = np.linalg.solve(m - lam * eye, v)
            except np.linalg.LinAlgError:
                break
            norm = np.linalg.norm(w)
            if not np.isfinite(norm) or norm == 0.0:
                break
            v = w / norm
            lam = float(v @ m @ v) / float(v @ v)
        right[:, i] = v
        values[i] = lam
    left = np.linalg.inv(right)
    norms = np.linalg.norm(left, axis=1, keepdims=True)
    left = left / norms
    pairings = np.einsum("ij,ji->i", left, right)
    if np.min(np.abs(pairings)) < 1e-12:
        raise NotLoxodromicError(f"degenerate eigenbasis for {label or matrix}")
    return GroupElementData(label, m, values, right, left, pairings)


def symmetric_square(matrix) -> np.ndarray:
    """The 3x3 action on binary quadratics induced by a 2x2 matrix.

    Sends eigenvalues (l, 1/l) to (l^2, 1, l^{-2}); the image of SL(2) is
    the irreducible copy inside SL(3).
    """
    (a, b), (c, d) = np.array(matrix, dtype=float)
    return np.array(
        [
            [a * a, 2 * a * b, b * b],
            [a * c, a * d + b * c, b * d],
            [c * c, 2 * c * d, d * d],
        ]
    )


def _rp1_position(vector) -> Fraction:
    """Exact circle position of a projective-line direction.

    Orientation matches the boundary order of the upper half plane:
    positions increase with the boundary coordinate and wrap through
    infinity.  Floats convert exactly, so distinct directions get distinct
    rational positions in the same cyclic order.
    """
    phi = math.atan2(float(vector[1]), float(vector[0])) % math.pi
    return as_position(Fraction(1.0 - phi / math.pi))


class _PointData:
    __slots__ = ("vector", "hyperplane", "word", "sign", "coordinate")

    def __init__(self, vector, hyperplane, word=None, sign=0, coordinate=None):
        self.vector = vector
        self.hyperplane = hyperplane
        self.word = word
        self.sign = sign
        self.coordinate = coordinate


class Representation:
    """A finitely generated matrix group with eigendata and boundary points.

    `generators` maps labels to n x n matrices.  Words are written in the
    ``a b a'`` notation.  The representation resolves words on demand,
    closing the element table under products and inverses, and registers
    fixed points as circle points of `self.config`.
    """

    def __init__(self, generators: dict, position_hint=None):
        if not generators:
            raise SwapAlgError("at least one generator is required")
        mats = {}
        n = None
        for label, matrix in generators.items():
            m = np.array(matrix, dtype=float)
            if n is None:
                n = m.shape[0]
            if m.shape != (n, n):
                raise SwapAlgError("generators must share one dimension")
            mats[label] = m
        self.dimension = n
        self.config = PointConfig()
        self.synthetic_order = n != 2 and position_hint is None
        self._position_hint = position_hint
        self._generators = mats
        self._elements: dict[Word, GroupElementData] = {}
        self._points: dict[Fraction, _PointData] = {}
        self._fixed: dict[tuple[Word, int], CirclePoint] = {}
        self._synthetic_count = 0
        for label in mats:
            self.element(label)

    @classmethod
    def from_text(cls, text: str, position_hint=None) -> "Representation":
        """Parse ``n = <int>`` followed by ``element <label> <n*n reals>``
        blocks; entries may span lines and ``#`` begins a comment."""
        tokens = []
        for raw in text.splitlines():
            tokens.extend(raw.split("#", 1)[0].split())
        if tokens[:2] != ["n", "="] or len(tokens) < 3:
            raise SwapAlgError("representation file must begin with 'n = <int>'")
        n = int(tokens[2])
        generators = {}
        index = 3
        while index < len(tokens):
            if tokens[index] != "element":
                raise SwapAlgError(f"expected 'element', found {tokens[index]!r}")
            label = tokens[index + 1]
            entries = tokens[index + 2 : index + 2 + n * n]
            if len(entries) != n * n:
                raise SwapAlgError(f"element {label!r} needs {n * n} entries")
            generators[label] = np.array([float(e) for e in entries]).reshape(n, n)
            index += 2 + n * n
        return cls(generators, position_hint=position_hint)

    @classmethod
    def from_file(cls, path, position_hint=None) -> "Representation":
        with open(path, "r", encoding="utf-8") as handle:
            return cls.from_text(handle.read(), position_hint=position_hint)

    # -- word resolution -----------------------------------------------

    def matrix(self, word) -> np.ndarray:
        word = parse_word(word, allow_identity=True)
        out = np.eye(self.dimension)
        for label, sign in word:
            try:
                m = self._generators[label]
            except KeyError:
                raise SwapAlgError(f"unknown generator {label!r}") from None
            out = out @ (m if sign > 0 else np.linalg.inv(m))
        return out

    def element(self, word) -> GroupElementData:
        word = parse_word(word)
        data = self._elements.get(word)
        if data is None:
            data = eigen_split(self.matrix(word), label=word_text(word))
            self._elements[word] = data
        return data

    # -- boundary points -------------------------------------------------

    def _register(self, label: str, position: Fraction, data: _PointData) -> CirclePoint:
        point = self.config.point(label, position)
        self._points.setdefault(point.position, data)
        return point

    def _register_fixed(self, word: Word, sign: int, vector, hyperplane) -> CirclePoint:
        n = self.dimension
        if n == 2:
            position = _rp1_position(vector)
        elif self._position_hint is not None:
            position = as_position(self._position_hint(word, sign))
        else:
            self._synthetic_count += 1
            position = Fraction(self._synthetic_count, 1 << 40)
        label = word_text(word) + ("+" if sign > 0 else "-")
        point = self._register(
            label, position, _PointData(vector, hyperplane, word=word, sign=sign)
        )
        self._fixed[(word, sign)] = point
        return point

    def fixed_point(self, word, sign: int) -> CirclePoint:
        """The attracting (+1) or repelling (-1) fixed point of a word.

        Powers and inverses resolve to the canonical primitive root, so
        g, g g and g' share two circle points between them.
        """
        word, sign = canonical_class(parse_word(word), 1 if sign > 0 else -1)
        cached = self._fixed.get((word, sign))
        if cached is not None:
            return cached
        data = self.element(word)
        n = self.dimension
        top = sign > 0
        vector = data.right[:, 0 if top else n - 1]
        hyperplane = data.left[n - 1 if top else 0]
        return self._register_fixed(word, sign, vector, hyperplane)

    def boundary_point(self, coordinate) -> CirclePoint:
        """A raw boundary point for n = 2, by its coordinate (None for oo)."""
        if self.dimension != 2:
            raise SwapAlgError("raw boundary coordinates exist only for n = 2")
        if coordinate is None or (isinstance(coordinate, float) and math.isinf(coordinate)):
            vector = np.array([1.0, 0.0])
            label = "t=oo"
        else:
            vector = np.array([float(coordinate), 1.0])
            vector = vector / np.linalg.norm(vector)
            label = f"t={float(coordinate):.12g}"
        hyperplane = np.array([vector[1], -vector[0]])
        return self._register(
            label, _rp1_position(vector), _PointData(vector, hyperplane, coordinate=coordinate)
        )

    def act(self, word, point: CirclePoint) -> CirclePoint:
        """Image of a registered boundary point under a word.

        Fixed points map by conjugation, g(h+-) = (g h g^{-1})+-, with the
        eigendata transported directly (the conjugate's eigenvectors are the
        images of the original ones, so no fresh eigendecomposition is
        needed); raw n = 2 points map by the projective action on their
        coordinate vector.
        """
        word = parse_word(word)
        data = self._points.get(point.position)
        if data is None:
            raise SwapAlgError(f"point {point.label!r} is not registered here")
        if data.word is not None:
            target, sign = canonical_class(
                conjugate_word(word, data.word), data.sign
            )
            cached = self._fixed.get((target, sign))
            if cached is not None:
                return cached
            matrix = self.matrix(word)
            vector = matrix @ data.vector
            vector = vector / np.linalg.norm(vector)
            hyperplane = data.hyperplane @ np.linalg.inv(matrix)
            hyperplane = hyperplane / np.linalg.norm(hyperplane)
            return self._register_fixed(target, sign, vector, hyperplane)
        vector = self.matrix(word) @ data.vector
        coordinate = math.inf if vector[1] == 0 else vector[0] / vector[1]
        return self.boundary_point(coordinate)

    # -- evaluation --------------------------------------------------------

    def pair_value(self, X: CirclePoint, x: CirclePoint) -> float:
        """< hyperplane(x), vector(X) >; zero exactly when X = x."""
        try:
            dx = self._points[X.position]
            dxx = self._points[x.position]
        except KeyError:
            raise EvaluationError("point was not registered with this representation")
        return float(dxx.hyperplane @ dx.vector)

    def eval_fraction(self, fraction: BalancedFraction) -> float:
        return fraction.evaluate(self.pair_value)

    def cross_ratio(self, X, Y, x, y) -> float:
        return self.eval_fraction(cross_fraction(X, Y, x, y))

    # -- derived quantities -------------------------------------------------

    def width(self, word) -> float:
        """log |lambda_max / lambda_min|."""
        data = self.element(word)
        return math.log(abs(data.eigenvalues[0] / data.eigenvalues[-1]))

    def period(self, word, anchor: CirclePoint) -> float:
        """|log |cross ratio (g-, g+, g(y), y)||; anchor-independent and
        equal to the width."""
        word = parse_word(word)
        plus = self.fixed_point(word, +1)
        minus = self.fixed_point(word, -1)
        if anchor == plus or anchor == minus:
            raise SwapAlgError("anchor must avoid the fixed points")
        image = self.act(word, anchor)
        value = self.eval_fraction(cross_fraction(minus, plus, image, anchor))
        return abs(math.log(abs(value)))

    def girth(self, words) -> float:
        """Largest adjacent eigenvalue-modulus ratio over the given words.

        A finite-sample stand-in for the supremum over the whole group; it
        is always below one for loxodromic input and grows monotonically as
        words are added.
        """
        words = list(words)
        if not words:
            raise SwapAlgError("girth needs at least one word")
        worst = 0.0
        for w in words:
            mags = np.abs(self.element(w).eigenvalues)
            worst = max(worst, float(np.max(mags[1:] / mags[:-1])))
        return worst

    def wilson_loop(self, word) -> float:
        """Trace of the word's matrix."""
        return float(np.trace(self.matrix(word)))

    def wilson_ratio(self, gamma, eta, p: int) -> float:
        """tr(g^p h^p) / (tr(g^p) tr(h^p)), computed from eigendata.

        Powers enter only through ratios lambda_i / lambda_1, so the value
        stays finite for all p.
        """
        if p < 1:
            raise SwapAlgError("exponent must be positive")
        g = self.element(gamma)
        h = self.element(eta)
        r = g.eigenvalues / g.eigenvalues[0]
        s = h.eigenvalues / h.eigenvalues[0]
        # M_ij = tr(p_i(g) p_j(h))
        cross = (g.left @ h.right) * (h.left @ g.right).T
        M = cross / np.outer(g.pairings, h.pairings)
        num = (r**p) @ M @ (s**p)
        return float(num / (np.sum(r**p) * np.sum(s**p)))

    def elementary_value(self, words) -> float:
        return self.eval_fraction(elementary(self, words))

    def chi(self, X, x) -> float:
        """det of the cross-ratio matrix [X_i; X_0; x_j; x_0], i, j >= 1.

        Vanishes for (n+2)-tuples and not for (n+1)-tuples on an
        n-dimensional representation.
        """
        X = list(X)
        x = list(x)
        if len(X) != len(x) or len(X) < 2:
            raise SwapAlgError("need two tuples of equal length >= 2")
        p = len(X) - 1
        for j in range(1, p + 1):
            for i in range(1, j):
                if X[j] == X[i] or x[j] == x[i]:
                    raise SwapAlgError("tuple entries must be distinct")
        if any(X[i] == x[0] for i in range(1, p + 1)) or any(
            x[j] == X[0] for j in range(1, p + 1)
        ):
            raise SwapAlgError("tuple entries collide with the base points")
        entries = np.array(
            [
                [self.cross_ratio(X[i], X[0], x[j], x[0]) for j in range(1, p + 1)]
                for i in range(1, p + 1)
            ]
        )
        return float(np.linalg.det(entries))


def wolpert_check(gamma_matrix, eta_matrix) -> tuple[float, float]:
    """Cross-check of the length-function bracket for crossing axes (n = 2).

    Returns (lhs, rhs): `rhs` is the alternating four-term sum of elementary
    functions scaled by the fixed-point linking number, evaluated through
    the eigenvector backend; `lhs` is twice the cosine of the axis crossing
    angle, computed by the independent half-plane oracle.  Under the trace
    normalization used throughout, the bracket of two length functions at a
    single transversal intersection equals exactly twice that cosine, so
    lhs = rhs up to numerical error.
    """
    rep = Representation({"g": gamma_matrix, "h": eta_matrix})
    g_plus = rep.fixed_point("g", +1)
    g_minus = rep.fixed_point("g", -1)
    h_plus = rep.fixed_point("h", +1)
    h_minus = rep.fixed_point("h", -1)
    if linking_number(g_plus, g_minus, h_plus, h_minus) == 0:
        raise SwapAlgError("axes do not cross")
    rhs = rep.eval_fraction(wolpert_rhs(rep, "g", "h"))
    theta = halfplane.crossing_angle(gamma_matrix, eta_matrix)
    lhs = 2.0 * math.cos(theta)
    return lhs, rhs
