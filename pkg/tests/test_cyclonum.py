"""Cyclotomic field arithmetic: canonical forms, field axioms, closed sums."""

import random
from fractions import Fraction

import pytest

from stackyrr import limits
from stackyrr.cyclonum import (
    CyclotomicNumber,
    arith,
    canonicalize,
    cyclotomic_polynomial,
    euler_phi,
    galois_conjugate,
    lift_coeffs,
    root_of_unity,
    stacky_todd_closed_form,
    stacky_todd_sum,
)
from stackyrr.errors import ResourceLimitError, ValidationError

ZERO = CyclotomicNumber.from_rational(0)
ONE = CyclotomicNumber.from_rational(1)


def rand_cyclo(rng, conductor):
    coeffs = [
        Fraction(rng.randint(-4, 4), rng.randint(1, 5))
        for _ in range(euler_phi(conductor))
    ]
    return canonicalize(conductor, coeffs)


def test_roots_of_unity_basics():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == -1
    z4 = root_of_unity(4)
    assert z4 * z4 == -1
    for n in (1, 2, 3, 4, 6, 8, 12):
        for k in range(n):
            z = root_of_unity(n, k)
            assert z**n == 1


def test_root_of_unity_order_divides_conductor():
    for n in (5, 8, 12):
        for k in range(n):
            z = root_of_unity(n, k)
            order = 1
            acc = z
            while acc != 1:
                acc = acc * z
                order += 1
            assert n % order == 0


def test_invalid_conductor():
    with pytest.raises(ValidationError):
        root_of_unity(0, 1)


def test_cyclotomic_polynomial_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_phi_vanishes_on_primitive_root():
    for n in range(1, 61):
        z = root_of_unity(n)
        val = ZERO
        for i, c in enumerate(cyclotomic_polynomial(n)):
            if c:
                val = val + c * z**i
        assert val.is_zero, n


def test_canonicalize_examples():
    assert root_of_unity(6, 3) == -1
    assert root_of_unity(6, 3).conductor == 1
    assert root_of_unity(4, 2) == -1
    s = sum((root_of_unity(5, j) for j in (1, 2, 3, 4)), ZERO)
    assert s == -1 and s.conductor == 1


def test_conductor_never_2_mod_4():
    rng = random.Random(7)
    for n in (2, 6, 10, 18, 30):
        for _ in range(5):
            x = rand_cyclo(rng, n)
            assert x.conductor % 4 != 2


def test_canonicalize_idempotent_and_lift_round_trip():
    rng = random.Random(11)
    for n in (3, 4, 5, 8, 9, 12, 15, 16, 24, 36, 60):
        for _ in range(4):
            x = rand_cyclo(rng, n)
            again = canonicalize(x.conductor, x.coeffs)
            assert again == x
            for mult in (2, 3, 4):
                big = x.conductor * mult
                if big % 4 == 2:
                    continue
                lifted = lift_coeffs(x, big)
                assert canonicalize(big, lifted) == x


def test_canonicalize_keeps_non_cyclotomic_subfield_elements():
    # sqrt(2) = z8 + z8^-1 generates a quadratic field that is not Q(zeta_d)
    # for any proper divisor d of 8, so the conductor must stay 8
    z8 = root_of_unity(8)
    sqrt2 = z8 + z8**-1
    assert sqrt2.conductor == 8
    assert sqrt2 * sqrt2 == 2

    # sqrt(-3) = z3 - z3^2 lives at conductor 3
    z3 = root_of_unity(3)
    root = z3 - root_of_unity(3, 2)
    assert root.conductor == 3 and root * root == -3

    # golden-ratio-type element of Q(zeta_5): quadratic but conductor 5
    z5 = root_of_unity(5)
    tau = z5 + z5**-1
    assert tau.conductor == 5
    assert tau * tau + tau == 1  # minimal polynomial x^2 + x - 1


def test_canonicalize_descends_to_proper_cyclotomic_subfield():
    # i sits inside Q(zeta_12); built there, it must come back at conductor 4
    z12 = root_of_unity(12)
    i = z12**3
    assert i.conductor == 4 and i * i == -1
    # zeta_3 from inside Q(zeta_12)
    w = z12**4
    assert w.conductor == 3 and w == root_of_unity(3)


def test_arith_examples():
    z3 = root_of_unity(3)
    inv = 1 / (1 - z3)
    # (1 - z3)(2 + z3) = 2 + z3 - 2 z3 - z3^2 = 2 - z3 - (-1 - z3) = 3
    assert (1 - z3) * (2 + z3) == 3
    assert inv == (2 + z3) / 3
    assert arith(ONE, 1 - z3, "div") == inv
    with pytest.raises(ValidationError):
        arith(ONE, ONE, "frobnicate")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        1 / ZERO
    with pytest.raises(ZeroDivisionError):
        arith(ONE, ZERO, "div")


def test_self_division_is_one():
    rng = random.Random(3)
    for n in (1, 3, 8, 12, 20):
        for _ in range(4):
            a = rand_cyclo(rng, n)
            if a.is_zero:
                continue
            assert a / a == 1


def test_field_axioms_randomized():
    rng = random.Random(20260808)
    conductors = [1, 3, 4, 5, 8, 12, 15, 20, 24, 30, 36, 40, 45, 60]
    for _ in range(60):
        na, nb, nc = (rng.choice(conductors) for _ in range(3))
        a, b, c = rand_cyclo(rng, na), rand_cyclo(rng, nb), rand_cyclo(rng, nc)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if not b.is_zero:
            assert (a / b) * b == a
        assert a - a == 0
        assert a + 0 == a and a * 1 == a


def test_conductor_cap():
    old = limits.CONDUCTOR_CAP
    limits.CONDUCTOR_CAP = 40
    try:
        with pytest.raises(ResourceLimitError):
            root_of_unity(41)
        with pytest.raises(ResourceLimitError):
            root_of_unity(8) + root_of_unity(27)  # lcm 216 > 40
    finally:
        limits.CONDUCTOR_CAP = old


def test_galois_conjugate():
    z3 = root_of_unity(3)
    assert galois_conjugate(z3, 2) == root_of_unity(3, 2)
    q = CyclotomicNumber.from_rational(Fraction(7, 3))
    assert galois_conjugate(q, 5) == q
    avg = sum((galois_conjugate(root_of_unity(5), k) for k in (1, 2, 3, 4)), ZERO) / 4
    assert avg == Fraction(-1, 4)
    with pytest.raises(ValidationError):
        galois_conjugate(root_of_unity(6), 3)


def test_galois_orbit_sum_is_rational():
    # Averaging over the full Galois group lands in Q at conductor 1.
    rng = random.Random(5)
    import math

    for n in (5, 8, 12):
        x = rand_cyclo(rng, n)
        ks = [k for k in range(1, n) if math.gcd(k, n) == 1]
        avg = sum((galois_conjugate(x, k) for k in ks), ZERO) / len(ks)
        assert avg.conductor == 1


def test_galois_invariant_value_has_conductor_one():
    # A value fixed by every automorphism canonicalizes to a rational.
    import math

    rng = random.Random(9)
    for n in (5, 7, 9, 16):
        x = rand_cyclo(rng, n)
        sym = sum(
            (galois_conjugate(x, k) for k in range(1, n) if math.gcd(k, n) == 1),
            ZERO,
        )
        for k in range(1, n):
            if math.gcd(k, n) == 1:
                assert galois_conjugate(sym, k) == sym
        assert sym.conductor == 1


def test_todd_sum_examples():
    assert stacky_todd_sum(2, 1) == Fraction(-1, 2)
    assert stacky_todd_sum(3, 0) == 1
    for r in range(2, 13):
        assert stacky_todd_sum(r, 0) == Fraction(r - 1, 2)


def test_todd_sum_range_errors():
    with pytest.raises(ValidationError):
        stacky_todd_sum(1, 0)
    with pytest.raises(ValidationError):
        stacky_todd_sum(5, 5)
    with pytest.raises(ValidationError):
        stacky_todd_sum(5, -1)


def test_todd_sum_matches_closed_form_small():
    # The exhaustive r <= 30 sweep lives in the acceptance suite.
    for r in range(2, 15):
        for k in range(r):
            assert stacky_todd_sum(r, k) == stacky_todd_closed_form(r, k)


def test_serialization_round_trip():
    rng = random.Random(13)
    for n in (1, 4, 9, 12, 40):
        for _ in range(4):
            x = rand_cyclo(rng, n)
            data = x.to_dict()
            assert CyclotomicNumber.from_dict(data) == x
    with pytest.raises(ValidationError):
        CyclotomicNumber.from_dict({"conductor": 3, "coeffs": [], "extra": 1})


def test_big_integer_serialization():
    big = Fraction(10**40 + 1, 10**39 + 7)
    x = CyclotomicNumber.from_rational(big)
    assert CyclotomicNumber.from_dict(x.to_dict()) == x


def test_pow_and_inverse():
    z5 = root_of_unity(5)
    assert z5**-1 == root_of_unity(5, 4)
    assert z5**0 == 1
    assert (1 + z5) ** 3 == (1 + z5) * (1 + z5) * (1 + z5)
