#!/usr/bin/env python3
"""Dimensions of spaces of classical modular forms from orbifold Riemann-Roch.

The quotient of the upper half-plane by the full modular group, with the
cusp added, is a genus-0 orbifold curve with one point of order 2 and one of
order 3.  Weight-k forms are sections of the bundle

    D_k = (k/2) * K + (k/2) * cusp,

whose degree is k/12 and whose isotropy weights at the two stacky points are
(k/2) mod 2 and k mod 3.  Riemann-Roch then reproduces the classical
dimension table, which we cross-check against the completely independent
count of monomials in the two generators of weights 4 and 6.
"""

from fractions import Fraction

from stackyrr import degree, euler_char_rr, multiplicity
from stackyrr.presets import CURVE_BUILDERS, modular_weight_divisor

curve = CURVE_BUILDERS["p23"]()
print("orbifold: genus 0 with isotropy orders", [r for _, r in curve.stacky_points])
print()
print("weight   degree   mult@2  mult@3   chi   monomials in E4, E6")

for k in range(0, 25, 2):
    d = modular_weight_divisor(k, curve)
    chi = euler_char_rr(d)
    # independent oracle: weight-k monomials E4^a * E6^b with 4a + 6b = k
    monomials = sum(
        1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k
    )
    assert degree(d) == Fraction(k, 12)
    assert chi == monomials, (k, chi, monomials)
    print(
        f"{k:4d}    {str(degree(d)):>6}    {multiplicity(d, 'p2'):4d}   "
        f"{multiplicity(d, 'p3'):4d}    {chi:3d}   {monomials:3d}"
    )

print()
print("weight 2 is the famous gap:", euler_char_rr(modular_weight_divisor(2, curve)), "forms")
