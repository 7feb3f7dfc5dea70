from fractions import Fraction
from random import Random

import pytest

from polycorr.exactnum import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    factor_gaussian_integer,
    nth_root,
)

G = GaussianRational.of


def test_product_expansion():
    assert G(1, 2) * G(3, -1) == G(5, 5)


def test_division_by_unit():
    assert ONE / I == G(0, -1)


def test_scalar_scaling():
    assert G(Fraction(2, 3), 1) * G(Fraction(3, 2)) == G(1, Fraction(3, 2))


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_conjugation():
    assert G(2, 3).conjugate() == G(2, -3)
    assert G(5).conjugate() == G(5)


def test_conjugation_involution():
    rng = Random(1)
    for _ in range(50):
        x = G(Fraction(rng.randint(-9, 9), rng.randint(1, 5)),
              Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        assert x.conjugate().conjugate() == x


def test_canonical_form_reduced():
    x = G(Fraction(2, 4), Fraction(-6, 9))
    assert x.re == Fraction(1, 2) and x.im == Fraction(-2, 3)
    assert x == G(Fraction(1, 2), Fraction(-2, 3))


def test_field_axioms_on_random_triples():
    rng = Random(7)
    for _ in range(60):
        a, b, c = (
            G(Fraction(rng.randint(-6, 6), rng.randint(1, 4)),
              Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
            for _ in range(3)
        )
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero:
            assert a * (ONE / a) == ONE
        assert a + (-a) == ZERO


def test_str_forms():
    assert str(G(2, 3)) == "2+3i"
    assert str(G(2, -3)) == "2-3i"
    assert str(G(0, 1)) == "i"
    assert str(G(0, -1)) == "-i"
    assert str(G(Fraction(2, 3))) == "2/3"
    assert str(G(Fraction(1, 2), Fraction(-1, 3))) == "1/2-1/3i"
    assert str(ZERO) == "0"


def test_nth_root_of_2i():
    # (1+i)^2 = 2i; the branch rule picks the representative in the
    # closed right half plane with the larger imaginary part
    assert nth_root(G(0, 2), 2) == G(1, 1)


def test_cube_root_of_one():
    assert nth_root(ONE, 3) == ONE


def test_square_root_of_two_does_not_exist():
    # oracle: any x in Q(i) with x^2 = 2 is integral over Z, hence a
    # Gaussian integer, and its norm must square to N(2) = 4.  The only
    # Gaussian integers of norm 2 are the four units times (1+i); none of
    # their squares is 2.
    candidates = [G(a, b) for a in (-1, 1) for b in (-1, 1)]
    assert all(c.norm() == 2 for c in candidates)
    assert all(c * c != G(2) for c in candidates)
    assert nth_root(G(2), 2) is None


def test_square_root_sign_conventions():
    assert nth_root(G(4), 2) == G(2)
    assert nth_root(G(-4), 2) == G(0, 2)
    assert nth_root(G(Fraction(9, 4)), 2) == G(Fraction(3, 2))


def test_nth_root_round_trip_on_random_values():
    rng = Random(11)
    for _ in range(40):
        a = G(Fraction(rng.randint(-8, 8), rng.randint(1, 5)),
              Fraction(rng.randint(-8, 8), rng.randint(1, 5)))
        for n in (1, 2, 3, 4):
            power = a ** n
            r = nth_root(power, n)
            assert r is not None
            assert r ** n == power


def test_gaussian_factorization_reassembles():
    rng = Random(3)
    for _ in range(30):
        u = (rng.randint(-40, 40), rng.randint(-40, 40))
        if u == (0, 0):
            continue
        k, factors = factor_gaussian_integer(u)
        value = I ** k
        for (x, y), e in factors.items():
            value = value * G(x, y) ** e
        assert value == G(u[0], u[1])


def test_root_order_validation():
    with pytest.raises(ValueError):
        nth_root(ONE, 0)
