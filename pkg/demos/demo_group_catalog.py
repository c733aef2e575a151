#!/usr/bin/env python3
"""The complete catalog of groups of order <= 16, with commuting statistics.

Every isomorphism class is built from an explicit permutation action or
product/quotient formula.  For each group we tabulate the conjugacy class
count (= the Euler number of the inertia of [pt/G]) and the number of
commuting pairs, computed independently by brute enumeration and by the
centralizer recursion.
"""

from fractions import Fraction

from stackyrr import chi_phy_gset, conjugacy_classes, count_commuting_tuples, trivial_gset
from stackyrr.smallgroups import group_catalog

print(f"{'group':<10} {'order':>5} {'classes':>8} {'pairs':>7} {'chi_1 of [pt/G]':>16}")
for name, g in group_catalog(16):
    classes = conjugacy_classes(g).count
    brute = count_commuting_tuples(g, 2, "brute")
    recursive = count_commuting_tuples(g, 2, "recursive")
    assert brute == recursive
    # commuting pairs / |G| = number of classes: Burnside on the
    # conjugation action, visible here as chi_1 of the one-point quotient
    assert Fraction(brute, g.order) == classes
    assert chi_phy_gset(trivial_gset(g, 1)) == classes
    print(f"{name:<10} {g.order:>5} {classes:>8} {brute:>7} {Fraction(brute, g.order)!s:>16}")

print()
print("(commuting pairs / order = class count: Burnside's lemma on conjugation)")
