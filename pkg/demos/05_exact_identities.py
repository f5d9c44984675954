"""Exact rational checks of the finite identities behind the formulas.

Nothing here is floating point: every check compares Fractions or ints.
"""
from fractions import Fraction

from hoffmanzeta import exact

print("B_0..B_12:", ", ".join(str(exact.bernoulli(n)) for n in range(13)))
print("denominator of B_12 by von Staudt-Clausen:", exact.von_staudt_clausen_denominator(12))

lhs, rhs = exact.partial_fraction_sides(2, 6)
print("partial fractions j=2, m=6 agree:", lhs == rhs)

f = exact.generating_polynomial(3, 1)
print("F(x) for r=3, s=1:", f)
print("  equals -(1+x)^3 x^3:", f == exact.generating_polynomial_factored(3, 1))
print("  even coefficients:", [str(f.coefficient(2 * k)) for k in range(1, 4)])
print("  identity right-hand sides:", [str(exact.binomial_identity_rhs(3, 1, k)) for k in range(1, 4)])

count = sum(exact.check_shifted_binomial_sum(r, s, k, v, shift)
            for r in range(6) for s in range(6) for k in range(1, r + s + 2)
            for v in ("full", "tail") for shift in (1, 2))
print("shifted binomial sums verified for r, s <= 5:", count)
print("delta filter on [1/2, -3, 7/5] at a=2:", exact.check_delta_filter([Fraction(1, 2), -3, Fraction(7, 5)], 2))
