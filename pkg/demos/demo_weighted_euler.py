#!/usr/bin/env python3
"""Weighted Euler characteristics and multiplicative Euler determinants.

A constructible weight on a stratified space produces an additive invariant
(sum of weight * Euler number per stratum) and a multiplicative one (product
of weight^(Euler number)).  Both are blind to refining the stratification,
which is the whole point.
"""

from fractions import Fraction

from stackyrr import (
    CurveStrata,
    GSetStrata,
    OrbifoldCurve,
    chi_top_gset,
    disjoint_union,
    euler_determinant,
    natural_gset,
    trivial_gset,
    weighted_chi,
)
from stackyrr.smallgroups import symmetric

# A genus-0 curve with stacky points of orders 2 and 3, weighted 7 and 11,
# the open complement weighted 5.
curve = OrbifoldCurve(0, (("p2", 2), ("p3", 3)))
strata = CurveStrata(curve, 5, (("p2", 7), ("p3", 11)))
print("chi_top weighted :", weighted_chi(strata, "top"))    # 5*0 + 7 + 11 = 18
print("chi_orb weighted :", weighted_chi(strata, "orb"))    # 7/2 + 11/3

det = euler_determinant(strata, "top")
print("Euler determinant:", det.factors, "=", det.value())  # 7 * 11 = 77

# Orbifold exponents are fractional, so that determinant stays formal.
orb_det = euler_determinant(strata, "orb")
print("orbifold determinant factors:", orb_det.factors)

# Refining the stratification (carving an ordinary point out of the open
# stratum, keeping its weight) changes nothing.
refined = strata.refine("elsewhere")
assert weighted_chi(refined, "top") == weighted_chi(strata, "top")
assert euler_determinant(refined, "top").factors == det.factors
print("refinement invariance: OK")

# Constant weight c gives c^chi_top -- the multiplicative shadow of the
# ordinary Euler number.
const = CurveStrata(curve, Fraction(3), (("p2", Fraction(3)), ("p3", Fraction(3))))
print("constant weight 3:", euler_determinant(const, "top").value(), "= 3^2")

# The same machinery on a finite quotient: strata are unions of orbits.
s3 = symmetric(3)
base = disjoint_union(natural_gset(s3), trivial_gset(s3, 2))
ws = GSetStrata.from_point_weights(base, [2, 2, 2, 5, 7])
print("G-set weighted chi_top:", weighted_chi(ws, "top"))
print("G-set weighted chi_orb:", weighted_chi(ws, "orb"))
print("G-set determinant:", euler_determinant(ws, "top").value())
assert euler_determinant(
    GSetStrata.from_point_weights(base, [4] * base.size), "top"
).value() == Fraction(4) ** chi_top_gset(base)
