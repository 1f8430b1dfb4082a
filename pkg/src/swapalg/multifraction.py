"""Fractions with monomial denominators: cross and multi fractions.

The fraction field of the pair algebra is never needed in full here; every
object of interest (cross fractions, multi fractions, elementary functions,
and their brackets) is a polynomial numerator over a coefficient-one
monomial denominator.  Restricting denominators to monomials keeps the
canonical reduced form cheap and decidable:

  * cancel every generator pair that divides the denominator and all
    numerator monomials simultaneously,
  * pull out the numerator content so the remaining coefficients are
    coprime integers with positive leading sign; the content is kept as a
    separate rational scale.

Two reduced fractions are equal exactly when cross-multiplication gives
equal elements, which for this normal form is syntactic equality.

A *cross fraction* is [X; Y; x; y] = Xx.Yy / (Yx.Xy), and a *multi
fraction* is a ratio prod X_i x_{sigma(i)} / prod X_i x_i for a permutation
sigma.  The span of multi fractions is closed under the swapping bracket,
and on it the bracket does not depend on the parameter alpha.

Group-element labels enter through *fixed points*: a word g contributes two
circle points g+ and g-, and elementary functions of tuples of words are
particular multi fractions built from those points.  Positions of such
points are supplied by an evaluation backend (a representation), or
assigned explicitly when working purely symbolically; the bracket only ever
consumes their cyclic order.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .algebra import (
    ONE,
    AlgebraElement,
    GeneratorPair,
    Monomial,
    generator,
    swap_bracket,
)
from .circle import CirclePoint, PointConfig, ensure_same_config, linking_number
from .errors import (
    ConfigMismatchError,
    DegenerateFractionError,
    EvaluationError,
    SwapAlgError,
)
from .words import Word, cyclic_root, invert_word, parse_word, word_text


def _content(terms) -> Fraction:
    """gcd of the coefficients, signed like the leading (first) monomial."""
    num = 0
    den = 1
    for _, c in terms:
        num = gcd(num, c.numerator)
        den = den * c.denominator // gcd(den, c.denominator)
    content = Fraction(num, den)
    lead = min(terms, key=lambda mc: (mc[0].degree, mc[0].key()))[1]
    return -content if lead < 0 else content


class BalancedFraction:
    """A reduced fraction scale * numerator / denominator.

    `numerator` is a content-one element, `denominator` a coefficient-one
    monomial, `scale` a rational.  The zero fraction has scale 0.
    """

    __slots__ = ("config", "numerator", "denominator", "scale")

    def __init__(self, numerator: AlgebraElement, denominator: Monomial = ONE, scale=Fraction(1)):
        config = numerator.config
        scale = Fraction(scale)
        if numerator.is_zero or scale == 0:
            self.config = config
            self.numerator = AlgebraElement.zero(config)
            self.denominator = ONE
            self.scale = Fraction(0)
            return
        num_terms = dict(numerator._terms)
        den_pairs = list(denominator.pairs)
        # cancel pairs dividing the denominator and every numerator monomial
        for pair in set(den_pairs):
            k_den = den_pairs.count(pair)
            k_num = min(m.pairs.count(pair) for m in num_terms)
            k = min(k_den, k_num)
            for _ in range(k):
                den_pairs.remove(pair)
                num_terms = {
                    _remove_factor(m, pair): c for m, c in num_terms.items()
                }
        terms = sorted(num_terms.items(), key=lambda mc: (mc[0].degree, mc[0].key()))
        content = _content(terms)
        self.config = config
        self.numerator = AlgebraElement(config, {m: c / content for m, c in terms})
        self.denominator = Monomial(den_pairs)
        self.scale = scale * content

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, config: PointConfig) -> "BalancedFraction":
        return cls(AlgebraElement.zero(config))

    @classmethod
    def one(cls, config: PointConfig) -> "BalancedFraction":
        return cls(AlgebraElement.one(config))

    @classmethod
    def from_scalar(cls, config: PointConfig, value) -> "BalancedFraction":
        return cls(AlgebraElement.one(config), ONE, Fraction(value))

    @classmethod
    def from_element(cls, element: AlgebraElement) -> "BalancedFraction":
        return cls(element)

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.scale == 0

    def scaled_numerator(self) -> AlgebraElement:
        return self.numerator * self.scale

    def as_element(self) -> AlgebraElement:
        """The fraction as a plain element; requires a trivial denominator."""
        if self.denominator.degree != 0:
            raise SwapAlgError("fraction has a nontrivial denominator")
        return self.scaled_numerator()

    def _check(self, other: "BalancedFraction"):
        if self.config is not other.config:
            raise ConfigMismatchError("fractions over different configurations")

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BalancedFraction.from_scalar(self.config, other)
        self._check(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        lcm = _monomial_lcm(self.denominator, other.denominator)
        lift_a = _monomial_quotient(lcm, self.denominator)
        lift_b = _monomial_quotient(lcm, other.denominator)
        numer = (
            self.scaled_numerator() * AlgebraElement.from_monomial(self.config, lift_a)
            + other.scaled_numerator() * AlgebraElement.from_monomial(self.config, lift_b)
        )
        return BalancedFraction(numer, lcm)

    __radd__ = __add__

    def __neg__(self):
        return BalancedFraction(self.numerator, self.denominator, -self.scale)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BalancedFraction.from_scalar(self.config, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BalancedFraction(self.numerator, self.denominator, self.scale * other)
        self._check(other)
        return BalancedFraction(
            self.numerator * other.numerator,
            self.denominator * other.denominator,
            self.scale * other.scale,
        )

    def __rmul__(self, other):
        return self * other

    def inverse(self) -> "BalancedFraction":
        """Reciprocal; defined when the numerator is a single monomial."""
        if self.is_zero:
            raise ZeroDivisionError("zero fraction has no inverse")
        terms = self.numerator.terms()
        if len(terms) != 1:
            raise SwapAlgError("only monomial fractions are invertible")
        monomial, coeff = terms[0]
        numer = AlgebraElement.from_monomial(self.config, self.denominator)
        return BalancedFraction(numer, monomial, 1 / (self.scale * coeff))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return BalancedFraction(
                self.numerator, self.denominator, self.scale / Fraction(other)
            )
        return self * other.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out = BalancedFraction.one(self.config)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BalancedFraction.from_scalar(self.config, other)
        elif isinstance(other, AlgebraElement):
            other = BalancedFraction.from_element(other)
        if not isinstance(other, BalancedFraction):
            return NotImplemented
        return (
            self.config is other.config
            and self.scale == other.scale
            and self.denominator == other.denominator
            and self.numerator == other.numerator
        )

    def __hash__(self):
        return hash((self.scale, self.denominator, self.numerator))

    def __repr__(self):
        num = repr(self.scaled_numerator())
        if self.denominator.degree == 0:
            return num
        if len(self.numerator.terms()) > 1 or self.scale != 1:
            num = f"({num})"
        den = repr(self.denominator)
        if self.denominator.degree > 1:
            den = f"({den})"
        return f"{num} / {den}"

    # -- evaluation -------------------------------------------------------

    def evaluate(self, pair_value) -> float:
        """Numeric value given a map (left point, right point) -> number.

        Only balanced fractions are scale-free under the per-point scale
        ambiguity of the backends, so unbalanced input is rejected.
        """
        if not is_balanced(self):
            raise EvaluationError("scale-dependent: fraction is not balanced")
        if self.is_zero:
            return 0.0
        den = 1.0
        for p in self.denominator.pairs:
            den *= pair_value(p.left, p.right)
        if den == 0.0:
            raise EvaluationError("degenerate evaluation: denominator vanishes")
        num = 0.0
        for m, c in self.numerator.terms():
            v = float(c)
            for p in m.pairs:
                v *= pair_value(p.left, p.right)
            num += v
        return float(self.scale) * num / den


def _remove_factor(monomial: Monomial, pair: GeneratorPair) -> Monomial:
    pairs = list(monomial.pairs)
    pairs.remove(pair)
    return Monomial(pairs)


def _monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    pairs = list(a.pairs)
    for pair in set(b.pairs):
        extra = b.pairs.count(pair) - pairs.count(pair)
        pairs.extend([pair] * max(extra, 0))
    return Monomial(pairs)


def _monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    pairs = list(a.pairs)
    for pair in b.pairs:
        pairs.remove(pair)
    return Monomial(pairs)


# -- cross and multi fractions ---------------------------------------------


def cross_fraction(X: CirclePoint, Y: CirclePoint, x: CirclePoint, y: CirclePoint) -> BalancedFraction:
    """[X; Y; x; y] = Xx.Yy / (Yx.Xy)."""
    config = ensure_same_config(X, Y, x, y)
    if x == Y or y == X:
        raise DegenerateFractionError("degenerate denominator")
    numer = generator(X, x) * generator(Y, y)
    denom = Monomial((GeneratorPair(Y, x), GeneratorPair(X, y)))
    return BalancedFraction(numer, denom)


def multi_fraction(X, x, sigma) -> BalancedFraction:
    """prod X_i x_{sigma(i)} / prod X_i x_i for a permutation sigma.

    `sigma` maps indices 0..n-1 to indices 0..n-1.  The identity gives 1;
    a vanishing numerator (some X_i = x_{sigma(i)}) gives the zero fraction.
    """
    X = tuple(X)
    x = tuple(x)
    if len(X) != len(x):
        raise SwapAlgError("tuples must have equal length")
    n = len(X)
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(n)):
        raise SwapAlgError(f"not a permutation of 0..{n - 1}: {sigma}")
    config = ensure_same_config(*(X + x))
    for i in range(n):
        if X[i] == x[i]:
            raise DegenerateFractionError("degenerate denominator: X_i equals x_i")
    numer = AlgebraElement.one(config)
    for i in range(n):
        numer = numer * generator(X[i], x[sigma[i]])
    denom = Monomial(GeneratorPair(X[i], x[i]) for i in range(n))
    return BalancedFraction(numer, denom)


def is_balanced(f: BalancedFraction) -> bool:
    """True when every numerator monomial carries the same multiset of left
    points and of right points as the denominator.

    Such fractions are exactly the ones whose numeric value is independent
    of the per-point scale choices of an evaluation backend.  The zero
    fraction counts as balanced.
    """
    if f.is_zero:
        return True
    den_left = sorted(p.left.position for p in f.denominator.pairs)
    den_right = sorted(p.right.position for p in f.denominator.pairs)
    for m in f.numerator.monomials():
        if sorted(p.left.position for p in m.pairs) != den_left:
            return False
        if sorted(p.right.position for p in m.pairs) != den_right:
            return False
    return True


def fraction_bracket(f: BalancedFraction, g: BalancedFraction, alpha=0) -> BalancedFraction:
    """Swapping bracket extended to fractions by the quotient rule.

    With f = n1/d1 and g = n2/d2 (scales folded into the numerators):

        {f, g} = ( d1.d2.{n1,n2} - n1.d2.{d1,n2} - n2.d1.{n1,d2}
                   + n1.n2.{d1,d2} ) / (d1^2 d2^2).

    On fractions built from cross fractions the result does not depend on
    alpha.
    """
    f._check(g)
    if f.is_zero or g.is_zero:
        return BalancedFraction.zero(f.config)
    config = f.config
    n1 = f.scaled_numerator()
    n2 = g.scaled_numerator()
    d1 = AlgebraElement.from_monomial(config, f.denominator)
    d2 = AlgebraElement.from_monomial(config, g.denominator)
    numer = (
        d1 * d2 * swap_bracket(n1, n2, alpha)
        - n1 * d2 * swap_bracket(d1, n2, alpha)
        - n2 * d1 * swap_bracket(n1, d2, alpha)
        + n1 * n2 * swap_bracket(d1, d2, alpha)
    )
    denom = f.denominator * f.denominator * g.denominator * g.denominator
    return BalancedFraction(numer, denom)


# -- fixed points of group words --------------------------------------------


class SymbolicWords:
    """Fixed points for opaque group labels at prescribed circle positions.

    A purely symbolic stand-in for an evaluation backend: each base label g
    is registered with explicit positions for g+ and g-.  Powers share the
    base label's fixed points and inverses swap them.  Images under the
    group action must be declared explicitly (`declare_image`), since no
    geometry is available to place them.
    """

    def __init__(self, config: PointConfig | None = None):
        self.config = config if config is not None else PointConfig()
        self._images: dict[tuple[Word, CirclePoint], CirclePoint] = {}

    def register(self, label: str, plus_position, minus_position) -> None:
        self.config.point(f"{label}+", plus_position)
        self.config.point(f"{label}-", minus_position)

    def fixed_point(self, word, sign: int) -> CirclePoint:
        word = parse_word(word)
        base, _exponent = cyclic_root(word)
        if len(base) != 1:
            raise SwapAlgError(
                f"no declared fixed points for composite word {word_text(word)!r}"
            )
        label, letter_sign = base[0]
        if letter_sign < 0:
            sign = -sign
        suffix = "+" if sign > 0 else "-"
        return self.config[f"{label}{suffix}"]

    def declare_image(self, word, point: CirclePoint, position) -> CirclePoint:
        word = parse_word(word)
        image = self.config.point(
            f"{word_text(word)}({point.label})", position
        )
        self._images[(word, point)] = image
        return image

    def act(self, word, point: CirclePoint) -> CirclePoint:
        word = parse_word(word)
        try:
            return self._images[(word, point)]
        except KeyError:
            raise SwapAlgError(
                f"image of {point.label!r} under {word_text(word)!r} was not declared"
            ) from None


def _class_points(universe, word) -> tuple[CirclePoint, CirclePoint]:
    word = parse_word(word)
    return universe.fixed_point(word, +1), universe.fixed_point(word, -1)


def elementary(universe, words) -> BalancedFraction:
    """Elementary function of a tuple of words:

        T(g_1, ..., g_p) = prod g_{i+1}+ g_i-  /  prod g_i+ g_i-,

    with cyclic index convention p+1 = 1.  Cyclically invariant, equal to
    its truncation when consecutive words share fixed points, and zero when
    consecutive words are inverse to each other.
    """
    points = [_class_points(universe, w) for w in words]
    config = ensure_same_config(*(p for pair in points for p in pair))
    p = len(points)
    numer = AlgebraElement.one(config)
    for i in range(p):
        plus_next = points[(i + 1) % p][0]
        minus_here = points[i][1]
        numer = numer * generator(plus_next, minus_here)
    denom_pairs = []
    for plus, minus in points:
        if plus == minus:
            raise DegenerateFractionError("word with equal fixed points")
        denom_pairs.append(GeneratorPair(plus, minus))
    return BalancedFraction(numer, Monomial(denom_pairs))


def elementary_bracket_closed_form(universe, gwords, hwords, require_coprime=True) -> BalancedFraction:
    """Closed form for the bracket of two elementary functions.

    With a_{ij} = [g_i+ g_i-, h_j+ h_j-], b_{ij} = [g_{i+1}+ g_i-, h_{j+1}+ h_j-],
    c_{ij} = [g_i+ g_i-, h_{j+1}+ h_j-], d_{ij} = [g_{i+1}+ g_i-, h_j+ h_j-]:

        {T_g, T_h} / (T_g T_h) =
            sum_{i,j}  a_{ij} T(g_i, h_j)
                     + b_{ij} T(h_{j+1}, h_j, g_{i+1}, g_i)
                              / (T(h_j, h_{j+1}) T(g_i, g_{i+1}))
                     - c_{ij} T(g_i, h_{j+1}, h_j) / T(h_j, h_{j+1})
                     - d_{ij} T(h_j, g_{i+1}, g_i) / T(g_i, g_{i+1}).

    The right-hand side is assembled and multiplied back by T_g T_h, so the
    return value equals `fraction_bracket(elementary(g), elementary(h))`
    exactly, for every alpha.  Consecutive words in each tuple must have
    disjoint fixed-point sets (the logarithmic-derivative expansion divides
    by the order-two elementary functions of consecutive words).
    """
    g_pts = [_class_points(universe, w) for w in gwords]
    h_pts = [_class_points(universe, w) for w in hwords]
    config = ensure_same_config(*(p for pair in g_pts + h_pts for p in pair))
    if require_coprime:
        for pts in (g_pts, h_pts):
            for i in range(len(pts)):
                here = set(pts[i])
                there = set(pts[(i + 1) % len(pts)])
                if len(pts) > 1 and here & there:
                    raise SwapAlgError(
                        "consecutive words must have disjoint fixed points"
                    )
    p, q = len(gwords), len(hwords)
    gw = list(gwords)
    hw = list(hwords)
    lk = linking_number
    total = BalancedFraction.zero(config)
    for i in range(p):
        gi_p, gi_m = g_pts[i]
        gn_p, _ = g_pts[(i + 1) % p]
        t_gg = elementary(universe, (gw[i], gw[(i + 1) % p])) if p > 1 else None
        for j in range(q):
            hj_p, hj_m = h_pts[j]
            hn_p, _ = h_pts[(j + 1) % q]
            t_hh = elementary(universe, (hw[j], hw[(j + 1) % q])) if q > 1 else None
            a = lk(gi_p, gi_m, hj_p, hj_m)
            b = lk(gn_p, gi_m, hn_p, hj_m)
            c = lk(gi_p, gi_m, hn_p, hj_m)
            d = lk(gn_p, gi_m, hj_p, hj_m)
            if a != 0:
                total = total + a * elementary(universe, (gw[i], hw[j]))
            if b != 0:
                term = elementary(
                    universe, (hw[(j + 1) % q], hw[j], gw[(i + 1) % p], gw[i])
                )
                if t_hh is not None:
                    term = term / t_hh
                if t_gg is not None:
                    term = term / t_gg
                total = total + b * term
            if c != 0:
                term = elementary(universe, (gw[i], hw[(j + 1) % q], hw[j]))
                if t_hh is not None:
                    term = term / t_hh
                total = total - c * term
            if d != 0:
                term = elementary(universe, (hw[j], gw[(i + 1) % p], gw[i]))
                if t_gg is not None:
                    term = term / t_gg
                total = total - d * term
    return total * elementary(universe, gwords) * elementary(universe, hwords)


def birelem_identity(universe, a, b, c, d) -> tuple[BalancedFraction, BalancedFraction]:
    """Both sides of  T(a,b,c) T(c,d) / (T(a,d,c) T(c,b)) = [b+; d+; a-; c-].

    The two reduced fractions are equal whenever the divisions on the left
    are defined.
    """
    lhs = (
        elementary(universe, (a, b, c))
        * elementary(universe, (c, d))
        / (elementary(universe, (a, d, c)) * elementary(universe, (c, b)))
    )
    b_plus = universe.fixed_point(parse_word(b), +1)
    d_plus = universe.fixed_point(parse_word(d), +1)
    a_minus = universe.fixed_point(parse_word(a), -1)
    c_minus = universe.fixed_point(parse_word(c), -1)
    rhs = cross_fraction(b_plus, d_plus, a_minus, c_minus)
    return lhs, rhs


def wolpert_rhs(universe, gamma, eta) -> BalancedFraction:
    """[g+ g-, h+ h-] . sum_{v,v' = +-1} v v' T(g^v, h^v').

    The alternating four-term sum of order-two elementary functions, scaled
    by the linking number of the fixed-point pairs.  This is the bracket of
    the two length functions when the underlying curves meet exactly once;
    for several intersection points the caller scales by the total
    intersection number instead.  Zero when the fixed-point pairs are
    unlinked; rejected when they share a point.
    """
    gamma = parse_word(gamma)
    eta = parse_word(eta)
    g_plus, g_minus = _class_points(universe, gamma)
    h_plus, h_minus = _class_points(universe, eta)
    if {g_plus, g_minus} & {h_plus, h_minus}:
        raise DegenerateFractionError("words share a fixed point")
    lk = linking_number(g_plus, g_minus, h_plus, h_minus)
    config = g_plus.config
    if lk == 0:
        return BalancedFraction.zero(config)
    total = BalancedFraction.zero(config)
    for v, gw in ((1, gamma), (-1, invert_word(gamma))):
        for vp, hw in ((1, eta), (-1, invert_word(eta))):
            total = total + (v * vp) * elementary(universe, (gw, hw))
    return lk * total


class LengthSeries:
    """log of the length cross fraction p_beta(y), as a formal object.

    Only the two displayed bracket rules are supported: the bracket with a
    fraction divides by p, and the bracket of two length series divides by
    both underlying fractions.
    """

    __slots__ = ("word", "anchor", "fraction")

    def __init__(self, word: Word, anchor: CirclePoint, fraction: BalancedFraction):
        self.word = word
        self.anchor = anchor
        self.fraction = fraction

    def __repr__(self):
        return f"log({self.fraction!r})"


def length_cross_fraction(universe, beta, y: CirclePoint) -> LengthSeries:
    """p_beta(y) = (b+ b^{-1}(y) . b- b(y)) / (b+ b(y) . b- b^{-1}(y))."""
    beta = parse_word(beta)
    plus, minus = _class_points(universe, beta)
    if y == plus or y == minus:
        raise DegenerateFractionError("anchor coincides with a fixed point")
    fwd = universe.act(beta, y)
    back = universe.act(invert_word(beta), y)
    numer = generator(plus, back) * generator(minus, fwd)
    denom = Monomial((GeneratorPair(plus, fwd), GeneratorPair(minus, back)))
    return LengthSeries(beta, y, BalancedFraction(numer, denom))


def length_bracket(series: LengthSeries, q: BalancedFraction, alpha=0) -> BalancedFraction:
    """{log p, q} = {p, q} / p."""
    return fraction_bracket(series.fraction, q, alpha) / series.fraction


def length_length_bracket(s1: LengthSeries, s2: LengthSeries, alpha=0) -> BalancedFraction:
    """{log p1, log p2} = {p1, p2} / (p1 p2)."""
    return fraction_bracket(s1.fraction, s2.fraction, alpha) / (
        s1.fraction * s2.fraction
    )
