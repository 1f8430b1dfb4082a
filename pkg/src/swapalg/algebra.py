"""The free commutative algebra on ordered pairs of circle points.

Generators are ordered pairs Xx of points of one configuration, subject to
the single relation Xx = 0 whenever X = x.  Elements are finite sums of
monomials (multisets of pairs) with exact rational coefficients, kept in a
canonical normal form: pairs inside a monomial are sorted by (left position,
right position), monomial coefficients are nonzero, and zero is the empty
sum.  Equality is therefore syntactic.

The swapping bracket of two generators is

    {Xx, Yy}_a = [Xx, Yy] (Xy.Yx + a Xx.Yy),

where [ , ] is the linking form and `a` is any rational parameter.  It
extends to the whole algebra by bilinearity and the Leibniz rule in each
slot, and satisfies the Jacobi identity, making the algebra Poisson.

Values are immutable; operations build fresh elements, and expansion order
never affects the result (terms are accumulated into a canonical map), so
bracket computations may be partitioned and merged freely.
"""

from __future__ import annotations

from fractions import Fraction

from .circle import CirclePoint, PointConfig, ensure_same_config, linking_number
from .errors import ConfigMismatchError, SwapAlgError


class GeneratorPair:
    """An ordered pair of distinct circle points; one algebra generator."""

    __slots__ = ("left", "right")

    def __init__(self, left: CirclePoint, right: CirclePoint):
        if left == right:
            raise SwapAlgError("degenerate pair: left point equals right point")
        ensure_same_config(left, right)
        self.left = left
        self.right = right

    @property
    def key(self):
        return (self.left.position, self.right.position)

    def __eq__(self, other):
        return (
            isinstance(other, GeneratorPair)
            and self.left == other.left
            and self.right == other.right
        )

    def __hash__(self):
        return hash((hash(self.left), hash(self.right)))

    def __repr__(self):
        return f"[{self.left.label} {self.right.label}]"


class Monomial:
    """A multiset of generator pairs, stored sorted for syntactic equality."""

    __slots__ = ("pairs",)

    def __init__(self, pairs=()):
        self.pairs = tuple(sorted(pairs, key=lambda p: p.key))

    @property
    def degree(self) -> int:
        return len(self.pairs)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.pairs + other.pairs)

    def without(self, index: int) -> "Monomial":
        """Cofactor monomial with the factor at `index` removed."""
        return Monomial(self.pairs[:index] + self.pairs[index + 1 :])

    def key(self):
        return tuple(p.key for p in self.pairs)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        if not self.pairs:
            return "1"
        return "*".join(repr(p) for p in self.pairs)


ONE = Monomial()


def _coerce_scalar(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational scalar, got {type(value).__name__}")


class AlgebraElement:
    """A finite rational combination of monomials over one configuration."""

    __slots__ = ("config", "_terms")

    def __init__(self, config: PointConfig, terms: dict | None = None):
        self.config = config
        self._terms = {m: c for m, c in (terms or {}).items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, config: PointConfig) -> "AlgebraElement":
        return cls(config, {})

    @classmethod
    def one(cls, config: PointConfig) -> "AlgebraElement":
        return cls(config, {ONE: Fraction(1)})

    @classmethod
    def scalar(cls, config: PointConfig, value) -> "AlgebraElement":
        return cls(config, {ONE: _coerce_scalar(value)})

    @classmethod
    def from_monomial(cls, config, monomial: Monomial, coeff=Fraction(1)):
        return cls(config, {monomial: _coerce_scalar(coeff)})

    # -- inspection ---------------------------------------------------

    def terms(self):
        """Terms in canonical order, as (monomial, coefficient) pairs."""
        return sorted(self._terms.items(), key=lambda mc: (mc[0].degree, mc[0].key()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(monomial, Fraction(0))

    def monomials(self):
        return list(self._terms)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    # -- ring operations ----------------------------------------------

    def _check(self, other: "AlgebraElement"):
        if self.config is not other.config:
            raise ConfigMismatchError("elements over different configurations")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.scalar(self.config, other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, Fraction(0)) + c
        return AlgebraElement(self.config, acc)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.config, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.scalar(self.config, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            return AlgebraElement(self.config, {m: c * v for m, v in self._terms.items()})
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        self._check(other)
        acc: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = ma * mb
                acc[m] = acc.get(m, Fraction(0)) + ca * cb
        return AlgebraElement(self.config, acc)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = AlgebraElement.one(self.config)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = AlgebraElement.scalar(self.config, other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.config is other.config and self._terms == other._terms

    def __hash__(self):
        return hash((id(self.config), tuple(sorted(self._terms.items(), key=lambda mc: mc[0].key()))))

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.terms():
            if m is ONE or m.degree == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(repr(m))
            elif c == -1:
                parts.append(f"-{m!r}")
            else:
                parts.append(f"{c} {m!r}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def generator(X: CirclePoint, x: CirclePoint) -> AlgebraElement:
    """The degree-one element Xx, or zero when X = x."""
    config = ensure_same_config(X, x)
    if X == x:
        return AlgebraElement.zero(config)
    return AlgebraElement.from_monomial(config, Monomial((GeneratorPair(X, x),)))


def _pair_product(points) -> Monomial | None:
    """Monomial from (left, right) point pairs; None when some pair is zero."""
    pairs = []
    for left, right in points:
        if left == right:
            return None
        pairs.append(GeneratorPair(left, right))
    return Monomial(pairs)


def swap_bracket(a: AlgebraElement, b: AlgebraElement, alpha=0) -> AlgebraElement:
    """Swapping bracket {a, b}_alpha, extended by bilinearity and Leibniz."""
    if a.config is not b.config:
        raise ConfigMismatchError("elements over different configurations")
    alpha = _coerce_scalar(alpha)
    config = a.config
    acc: dict[Monomial, Fraction] = {}

    def put(monomial, coeff):
        acc[monomial] = acc.get(monomial, Fraction(0)) + coeff

    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            cab = ca * cb
            for i, p in enumerate(ma.pairs):
                rest_a = ma.without(i)
                for j, q in enumerate(mb.pairs):
                    lk = linking_number(p.left, p.right, q.left, q.right)
                    if lk == 0:
                        continue
                    rest = rest_a * mb.without(j)
                    cross = _pair_product(
                        ((p.left, q.right), (q.left, p.right))
                    )
                    if cross is not None:
                        put(rest * cross, cab * lk)
                    if alpha != 0:
                        put(rest * Monomial((p, q)), cab * lk * alpha)
    return AlgebraElement(config, acc)


def jacobiator(a, b, c, alpha=0) -> AlgebraElement:
    """{{a,b},c} + {{b,c},a} + {{c,a},b}; identically zero."""
    return (
        swap_bracket(swap_bracket(a, b, alpha), c, alpha)
        + swap_bracket(swap_bracket(b, c, alpha), a, alpha)
        + swap_bracket(swap_bracket(c, a, alpha), b, alpha)
    )
