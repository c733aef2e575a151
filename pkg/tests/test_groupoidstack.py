"""G-sets, orbit decompositions, inertia and its iterates."""

import pytest

from stackyrr.errors import ValidationError
from stackyrr.groupoidstack import (
    coset_gset,
    disjoint_union,
    equivariant_map,
    flattening_bijection,
    gset_from_generator_action,
    gset_from_table,
    inertia,
    iterated_inertia,
    natural_gset,
    orbits,
    trivial_gset,
)
from stackyrr.grouptheory import conjugacy_classes, subgroup_conjugacy_reps
from stackyrr.smallgroups import cyclic, dihedral, group_catalog, symmetric


def s3_natural():
    return natural_gset(symmetric(3))


def z2_swap():
    return natural_gset(cyclic(2))


def test_orbit_examples():
    dec = orbits(trivial_gset(cyclic(2), 1))
    assert dec.count == 1 and dec.stabilizer_orders == (2,)
    dec = orbits(z2_swap())
    assert dec.count == 1 and dec.stabilizer_orders == (1,)
    dec = orbits(s3_natural())
    assert dec.count == 1 and dec.stabilizer_orders == (2,)


def test_orbit_stabilizer_bookkeeping():
    for _, g in group_catalog(12):
        for sub in subgroup_conjugacy_reps(g):
            x = coset_gset(g, sub)
            dec = orbits(x)
            assert dec.count == 1
            assert dec.stabilizer_orders[0] * x.size == g.order
            for p in range(x.size):
                t = dec.transporter[p]
                assert x.act[dec.representatives[dec.orbit_of[p]]][t] == p


def test_action_table_validation():
    z2 = cyclic(2)
    with pytest.raises(ValidationError):
        gset_from_table(z2, [(1, 0), (1, 1)])  # identity moves nothing
    with pytest.raises(ValidationError):
        gset_from_table(z2, [(0, 0), (1, 1), (2, 0)])  # incompatible row


def test_inertia_examples():
    free = z2_swap()
    iner = inertia(free)
    assert iner.size == 2
    assert orbits(iner).count == 1
    assert all(h == 0 for (_, h) in iner.pairs)

    pt = trivial_gset(cyclic(2), 1)
    iner = inertia(pt)
    assert iner.size == 2 and orbits(iner).count == 2

    iner = inertia(s3_natural())
    assert iner.size == 6
    assert orbits(iner).count == 2


def test_inertia_size_two_countings():
    # sum over points of |Stab(x)| equals sum over group of |Fix(h)|
    for _, g in group_catalog(10):
        for sub in subgroup_conjugacy_reps(g)[:4]:
            x = coset_gset(g, sub)
            by_points = sum(len(x.stabilizer_elements(p)) for p in range(x.size))
            by_elements = sum(
                sum(1 for p in range(x.size) if x.act[p][h] == p)
                for h in range(g.order)
            )
            assert by_points == by_elements == inertia(x).size


def test_inertia_orbits_count_classes_of_stabilizers():
    for _, g in group_catalog(12):
        subs = subgroup_conjugacy_reps(g)
        for sub in subs[: min(4, len(subs))]:
            x = coset_gset(g, sub)
            dec = orbits(x)
            expected = 0
            for rep in dec.representatives:
                stab_group, _ = x.stabilizer(rep).as_group()
                expected += conjugacy_classes(stab_group).count
            assert orbits(inertia(x)).count == expected


def test_iterated_inertia_zero_is_identity():
    x = s3_natural()
    assert iterated_inertia(x, 0) is x


def test_iterated_inertia_point_counts():
    pt = trivial_gset(cyclic(2), 1)
    for m in range(5):
        assert iterated_inertia(pt, m).size == 2**m

    x = s3_natural()
    level2 = iterated_inertia(x, 2)
    assert level2.size == inertia(inertia(x)).size


def test_iterated_matches_repeated_inertia():
    s3 = symmetric(3)
    nat = natural_gset(s3)
    cases = [
        nat,
        natural_gset(dihedral(4)),
        trivial_gset(s3, 2),
        disjoint_union(nat, trivial_gset(s3, 1)),
    ]
    for x in cases:
        chain = x
        for m in range(3):
            direct_next = iterated_inertia(x, m + 1)
            nested = inertia(iterated_inertia(x, m))
            bij = flattening_bijection(nested, direct_next)
            assert bij.is_bijective()
            # the honest chain has the same shape at every level
            chain = inertia(chain)
            assert chain.size == direct_next.size
            assert orbits(chain).count == orbits(direct_next).count


def test_equivariant_map_validation():
    x = s3_natural()
    ident = equivariant_map(x, x, range(3), range(6))
    assert ident.is_bijective()

    # constant map to a point with the trivial-target homomorphism is fine
    from stackyrr.grouptheory import trivial_group

    pt = trivial_gset(trivial_group(), 1)
    collapse = equivariant_map(x, pt, [0, 0, 0], [0] * 6)
    assert not collapse.is_bijective()

    # non-equivariant point map must name a witness
    with pytest.raises(ValidationError, match="witness"):
        equivariant_map(x, x, [0, 2, 1], range(6))


def test_equivariant_map_rejects_non_homomorphism():
    x = z2_swap()
    # rho = constant identity is a homomorphism but breaks equivariance here
    with pytest.raises(ValidationError, match="witness"):
        equivariant_map(x, x, [0, 1], [0, 0])
    # rho(e) != e is rejected outright
    with pytest.raises(ValidationError, match="identity"):
        equivariant_map(x, x, [0, 1], [1, 0])
    # rho must be multiplicative: on Z4, swapping the two generators^1 fails
    z4 = cyclic(4)
    pt = trivial_gset(z4, 1)
    with pytest.raises(ValidationError, match="homomorphism"):
        equivariant_map(pt, pt, [0], [0, 1, 3, 2])


def test_iterated_inertia_point_cap():
    from stackyrr.errors import ResourceLimitError

    pt = trivial_gset(symmetric(3), 1)
    with pytest.raises(ResourceLimitError):
        iterated_inertia(pt, 4, point_cap=50)


def test_burnside_bookkeeping_order_24():
    s4 = symmetric(4)
    for sub in subgroup_conjugacy_reps(s4):
        if s4.order // sub.order > 8:
            continue
        x = coset_gset(s4, sub)
        by_points = sum(len(x.stabilizer_elements(p)) for p in range(x.size))
        by_elements = sum(
            sum(1 for p in range(x.size) if x.act[p][h] == p)
            for h in range(s4.order)
        )
        assert by_points == by_elements == inertia(x).size


def test_orbit_count_matches_full_decomposition():
    from stackyrr.groupoidstack import orbit_count

    s3 = symmetric(3)
    cases = [
        natural_gset(s3),
        trivial_gset(s3, 3),
        disjoint_union(natural_gset(s3), trivial_gset(s3, 2)),
        inertia(natural_gset(s3)),
    ]
    for x in cases:
        assert orbit_count(x) == orbits(x).count


def test_generator_action_closure():
    s3 = symmetric(3)
    nat = natural_gset(s3)
    gen_cols = [
        tuple(s3.perms[g][x] for x in range(3)) for g in s3.generators
    ]
    closed = gset_from_generator_action(s3, gen_cols)
    assert closed.act == nat.act


def test_coset_action_transitive_and_sized():
    s4 = symmetric(4)
    for sub in subgroup_conjugacy_reps(s4):
        x = coset_gset(s4, sub)
        assert x.size == s4.order // sub.order
        assert orbits(x).count == 1
