"""Cross fractions, multi fractions and elementary functions.

Brackets of balanced fractions stay balanced and do not depend on the
bracket parameter; elementary functions of word tuples obey closed-form
bracket and reduction identities, verified here as exact equalities of
reduced fractions.
"""

import random
from fractions import Fraction

from swapalg import (
    SymbolicWords,
    birelem_identity,
    cross_fraction,
    elementary,
    elementary_bracket_closed_form,
    fraction_bracket,
    is_balanced,
    multi_fraction,
    wolpert_rhs,
)

rng = random.Random(7)

# Fixed points of five abstract group elements, placed at random rational
# positions: the bracket only ever consumes their cyclic order.
words = SymbolicWords()
positions = rng.sample(range(1, 499), 10)
for i, label in enumerate(["a", "b", "c", "d", "e"]):
    words.register(label, Fraction(positions[2 * i], 499), Fraction(positions[2 * i + 1], 499))
config = words.config

a_plus = words.fixed_point("a", +1)
b_plus = words.fixed_point("b", +1)
a_minus = words.fixed_point("a", -1)
b_minus = words.fixed_point("b", -1)

cf = cross_fraction(a_plus, b_plus, a_minus, b_minus)
print("cross fraction:", cf)
print("transposed multi fraction equals it:",
      multi_fraction((a_plus, b_plus), (a_minus, b_minus), (1, 0))
      == cross_fraction(a_plus, b_plus, b_minus, a_minus))

# alpha-independence on the multi-fraction subalgebra.
other = cross_fraction(words.fixed_point("c", +1), words.fixed_point("d", +1),
                       words.fixed_point("c", -1), words.fixed_point("d", -1))
brackets = {alpha: fraction_bracket(cf, other, alpha) for alpha in (0, 1, 5)}
print("bracket is alpha-free:", brackets[0] == brackets[1] == brackets[5])
print("bracket is balanced:", is_balanced(brackets[0]))

# Elementary functions: cyclic invariance and the closed bracket formula.
T_ab = elementary(words, ("a", "b"))
print("T(a, b) =", T_ab)
print("cyclically invariant:", elementary(words, ("b", "a")) == T_ab)

closed = elementary_bracket_closed_form(words, ("a", "b"), ("c", "d", "e"))
direct = fraction_bracket(elementary(words, ("a", "b")), elementary(words, ("c", "d", "e")), 3)
print("closed form equals Leibniz bracket:", closed == direct)

lhs, rhs = birelem_identity(words, "a", "b", "c", "d")
print("order-three reduction identity:", lhs == rhs)

# The alternating four-term sum behind the length-function bracket.
print("four-term sum is balanced:", is_balanced(wolpert_rhs(words, "a", "b")))
