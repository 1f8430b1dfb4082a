"""The swapping bracket on the pair algebra.

The bracket of two generators is the linking number times a sum of two
degree-two monomials; it extends by Leibniz and satisfies the Jacobi
identity for every value of the parameter.
"""

import random
from fractions import Fraction

from swapalg import PointConfig, generator, jacobiator, parse_expression, swap_bracket

config = PointConfig()
for label, k in [("X", 1), ("Y", 2), ("x", 3), ("y", 4), ("Z", 6), ("z", 8)]:
    config.point(label, Fraction(k, 10))

Xx = generator(config["X"], config["x"])
Yy = generator(config["Y"], config["y"])

# On linked generators the bracket is the displayed two-term element.
for alpha in (Fraction(0), Fraction(1), Fraction(-1, 4)):
    print(f"{{Xx, Yy}}_{alpha} =", swap_bracket(Xx, Yy, alpha))

# Leibniz: bracketing a square doubles the cofactor.
alpha = Fraction(1, 2)
lhs = swap_bracket(Xx * Xx, Yy, alpha)
rhs = 2 * Xx * swap_bracket(Xx, Yy, alpha)
print("Leibniz on a square:", lhs == rhs)

# The Jacobi sum vanishes exactly, for any triple and any parameter.
rng = random.Random(0)
triple = [
    generator(config[a], config[b])
    for a, b in (("X", "x"), ("Y", "x"), ("Z", "x"))
]
print("jacobiator (shared endpoints):", jacobiator(*triple, alpha))

# Expressions can also be written in the little expression language.
expr = parse_expression("[X x] * [Y y] + 1/2 [X y] * [Y x]", config)
print("parsed:", expr)
print("round-trips:", parse_expression(repr(expr), config) == expr)
