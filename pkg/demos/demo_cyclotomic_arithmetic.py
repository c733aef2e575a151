#!/usr/bin/env python3
"""A tour of exact cyclotomic arithmetic.

Every value is an element of some Q(zeta_N) stored at its minimal
conductor, so equality is literal equality and nothing is ever a float.
"""

from fractions import Fraction

from stackyrr import (
    CyclotomicNumber,
    canonicalize,
    galois_conjugate,
    lift_coeffs,
    root_of_unity,
    stacky_todd_closed_form,
    stacky_todd_sum,
)

# Primitive roots of unity and the relations they satisfy.
z3 = root_of_unity(3)
print("z3                 =", z3)
print("z3 + z3^2          =", z3 + root_of_unity(3, 2))      # -1
print("z4^2               =", root_of_unity(4) ** 2)          # -1
print("z6^3               =", root_of_unity(6, 3))            # -1, conductor 1

# Conductors collapse automatically: zeta_6 already lives in Q(zeta_3).
z6 = root_of_unity(6)
print("z6 has conductor   =", z6.conductor, "and equals", z6)

# Field arithmetic is exact, including inverses.
inv = 1 / (1 - z3)
print("1/(1-z3)           =", inv)
print("(1-z3) * that      =", (1 - z3) * inv)

# Lifting to a bigger field and canonicalizing comes back unchanged.
lifted = lift_coeffs(z3, 12)
print("z3 lifted to Q(z12), re-canonicalized:", canonicalize(12, lifted) == z3)

# Galois conjugation permutes the primitive roots; averaging over the whole
# Galois group always lands in Q.
avg = sum(
    (galois_conjugate(root_of_unity(5), k) for k in (1, 2, 3, 4)),
    CyclotomicNumber.from_rational(0),
) / 4
print("Galois average of z5 =", avg)   # -1/4

# The unit-denominator sums behind one-dimensional Riemann-Roch: a sum of
# r-1 cyclotomic fractions that collapses to the rational (r-1)/2 - k.
for r, k in ((2, 1), (3, 0), (7, 3), (12, 5)):
    s = stacky_todd_sum(r, k)
    assert s == stacky_todd_closed_form(r, k) == Fraction(r - 1, 2) - k
    print(f"sum_a z{r}^(a*{k})/(1 - z{r}^-a) = {s}")
