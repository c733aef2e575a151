"""Euler ladder, generating series, weighted sums and determinants."""

import random
from fractions import Fraction

import pytest

from stackyrr.errors import ResourceLimitError, ValidationError
from stackyrr.eulerlab import (
    CurveStrata,
    FormalProduct,
    GSetStrata,
    chi_m,
    chi_orb_gset,
    chi_phy_gset,
    chi_top_gset,
    euler_determinant,
    euler_report,
    euler_series,
    ladder_check,
    weighted_chi,
)
from stackyrr.groupoidstack import (
    coset_gset,
    disjoint_union,
    natural_gset,
    trivial_gset,
)
from stackyrr.grouptheory import conjugacy_classes, count_commuting_tuples
from stackyrr.orbicurve import OrbifoldCurve
from stackyrr.smallgroups import cyclic, group_catalog, symmetric


def test_chi_basics():
    z2 = cyclic(2)
    free = natural_gset(z2)
    assert chi_top_gset(free) == 1
    assert chi_orb_gset(free) == 1
    assert chi_phy_gset(free) == 1

    pt = trivial_gset(z2, 1)
    assert chi_top_gset(pt) == 1
    assert chi_orb_gset(pt) == Fraction(1, 2)
    assert chi_phy_gset(pt) == 2

    nat = natural_gset(symmetric(3))
    assert chi_top_gset(nat) == 1
    assert chi_orb_gset(nat) == Fraction(1, 2)


def test_chi_phy_counts_classes_on_a_point():
    for _, g in group_catalog(12):
        pt = trivial_gset(g, 1)
        assert chi_phy_gset(pt) == conjugacy_classes(g).count


def test_chi_m_examples():
    pt_s3 = trivial_gset(symmetric(3), 1)
    assert chi_m(pt_s3, 0) == Fraction(1, 6)
    assert chi_m(pt_s3, 2) == 3
    assert chi_m(pt_s3, 3) == 8


def test_chi_m_matches_hom_counts_on_point():
    # on [pt/G] the series counts commuting tuples over |G|
    for _, g in group_catalog(8):
        pt = trivial_gset(g, 1)
        for m in range(4):
            expected = Fraction(count_commuting_tuples(g, m, "brute"), g.order)
            assert chi_m(pt, m) == expected


def test_chi_m_tuple_cap():
    pt = trivial_gset(symmetric(3), 1)
    with pytest.raises(ResourceLimitError):
        chi_m(pt, 4, tuple_cap=100)


def test_euler_series_examples():
    pt_z2 = trivial_gset(cyclic(2), 1)
    assert euler_series(pt_z2, 4) == [Fraction(1, 2), 1, 2, 4, 8]
    pt_triv = trivial_gset(cyclic(1), 1)
    assert euler_series(pt_triv, 3) == [1, 1, 1, 1]
    pt_s3 = trivial_gset(symmetric(3), 1)
    assert euler_series(pt_s3, 3) == [Fraction(1, 6), 1, 3, 8]


def test_ladder_small_cases():
    s3 = symmetric(3)
    cases = [
        trivial_gset(cyclic(2), 1),
        trivial_gset(s3, 1),
        natural_gset(s3),
        disjoint_union(natural_gset(s3), trivial_gset(s3, 1)),
    ]
    for x in cases:
        for m in range(3):
            assert ladder_check(x, m)


def test_ladder_free_action_all_equal():
    z4 = cyclic(4)
    free = natural_gset(z4)
    for m in range(3):
        assert ladder_check(free, m)
        assert chi_m(free, m) == 1


def test_euler_report():
    rep = euler_report(trivial_gset(symmetric(3), 1), 3)
    assert rep.chi_top == 1
    assert rep.chi_orb == Fraction(1, 6)
    assert rep.chi_phy == 3
    assert rep.series == (Fraction(1, 6), 1, 3, 8)
    assert rep.ladder_verified
    assert rep.series[0] == rep.chi_orb


def mixed_gset():
    s3 = symmetric(3)
    return disjoint_union(
        natural_gset(s3), coset_gset(s3, natural_gset(s3).stabilizer(0)), trivial_gset(s3, 1)
    )


def test_weighted_chi_gset():
    x = mixed_gset()
    ones = GSetStrata.from_point_weights(x, [1] * x.size)
    assert weighted_chi(ones, "top") == chi_top_gset(x)
    assert weighted_chi(ones, "orb") == chi_orb_gset(x)
    zeros = GSetStrata.from_point_weights(x, [0] * x.size)
    assert weighted_chi(zeros, "top") == 0 and weighted_chi(zeros, "orb") == 0


def test_weighted_chi_additive_and_refinement_invariant():
    x = mixed_gset()
    rng = random.Random(5)
    for _ in range(20):
        w1 = _orbit_constant_weights(x, rng)
        w2 = _orbit_constant_weights(x, rng)
        s1 = GSetStrata.from_point_weights(x, w1)
        s2 = GSetStrata.from_point_weights(x, w2)
        s12 = GSetStrata.from_point_weights(x, [a + b for a, b in zip(w1, w2)])
        for variant in ("top", "orb"):
            assert weighted_chi(s12, variant) == weighted_chi(s1, variant) + weighted_chi(s2, variant)
            assert weighted_chi(s1.refine(), variant) == weighted_chi(s1, variant)


def _orbit_constant_weights(x, rng, nonzero=False):
    from stackyrr.groupoidstack import orbits

    dec = orbits(x)
    per_orbit = [
        rng.choice([w for w in range(-3, 7) if w] if nonzero else range(-3, 7))
        for _ in range(dec.count)
    ]
    return [per_orbit[dec.orbit_of[p]] for p in range(x.size)]


def test_strata_validation():
    x = mixed_gset()
    with pytest.raises(ValidationError):
        GSetStrata.from_point_weights(x, [1] * (x.size - 1))
    bad = [1] * x.size
    bad[0] = 2  # cuts the first orbit (size 3)
    with pytest.raises(ValidationError):
        GSetStrata.from_point_weights(x, bad)
    with pytest.raises(ValidationError):
        GSetStrata(x, ((0, 1), tuple(range(2, x.size))), (1, 1))


def test_curve_strata_weighted():
    curve = OrbifoldCurve(0, (("p2", 2), ("p3", 3)))
    strata = CurveStrata(curve, 5, (("p2", 7), ("p3", 11)))
    assert weighted_chi(strata, "top") == 18
    assert weighted_chi(strata, "orb") == Fraction(7, 2) + Fraction(11, 3)
    det = euler_determinant(strata, "top")
    assert det.value() == 77
    # refinement: an extra ordinary point carrying the open weight
    ref = strata.refine("new")
    assert weighted_chi(ref, "top") == 18
    assert euler_determinant(ref, "top").value() == 77
    orb_det = euler_determinant(strata, "orb")
    assert not orb_det.is_integral
    with pytest.raises(ValidationError):
        orb_det.value()


def test_curve_strata_require_stacky_points():
    curve = OrbifoldCurve(1, (("p", 4),))
    with pytest.raises(ValidationError):
        CurveStrata(curve, 1, ())


def test_determinant_constant_weight():
    rng = random.Random(31)
    for g in range(4):
        curve = OrbifoldCurve(g, (("p", 3),))
        c = rng.choice([2, 3, 5, Fraction(1, 2), -2])
        strata = CurveStrata(curve, c, (("p", c),))
        det = euler_determinant(strata, "top")
        assert det.value() == Fraction(c) ** (2 - 2 * g)
    x = mixed_gset()
    strata = GSetStrata.from_point_weights(x, [7] * x.size)
    assert euler_determinant(strata, "top").value() == Fraction(7) ** chi_top_gset(x)


def test_determinant_rejects_zero_weight():
    x = mixed_gset()
    strata = GSetStrata.from_point_weights(x, [0] * x.size)
    with pytest.raises(ValidationError):
        euler_determinant(strata, "top")


def test_determinant_refinement_invariance_randomized():
    x = mixed_gset()
    rng = random.Random(8)
    for _ in range(20):
        w = _orbit_constant_weights(x, rng, nonzero=True)
        strata = GSetStrata.from_point_weights(x, w)
        for variant in ("top", "orb"):
            a = euler_determinant(strata, variant)
            b = euler_determinant(strata.refine(), variant)
            assert a.factors == b.factors


def test_formal_product_algebra():
    p = FormalProduct.from_pairs([(2, 1), (3, 2), (2, -1)])
    assert p.factors == ((Fraction(3), Fraction(2)),)
    assert p.value() == 9
    q = FormalProduct.from_pairs([(3, -2)])
    assert (p * q).factors == ()
    assert (p * q).value() == 1
