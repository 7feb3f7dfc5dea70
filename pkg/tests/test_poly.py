from fractions import Fraction
from random import Random

import pytest

from polycorr import (
    BiPoly,
    UniPoly,
    bipoly_from_matrix,
    check_p1_p2,
    coeff_matrix,
    gcd_uni,
    parse_poly,
    proportionality_constant,
)
from polycorr.exactnum import GaussianRational, I
from polycorr.poly import exact_div_uni

from oracles import corpus_poly, random_bipoly, random_unipoly

G = GaussianRational.of


def test_matrix_of_single_monomial():
    p = parse_poly("z w")
    m = coeff_matrix(p)
    assert m.nrows == 2 and m.ncols == 2
    assert [[str(c) for c in row] for row in m.rows] == [["1", "0"], ["0", "0"]]


def test_matrix_rows_of_corpus_input():
    m = coeff_matrix(corpus_poly("ex_2_4"))
    assert m.rows[0] == (I, G(5), G(1))
    assert m.rows[3] == (G(-1), G(-2), G(-6))


def test_matrix_round_trip_on_random_grids():
    rng = Random(5)
    for _ in range(40):
        p = random_bipoly(rng, rng.randint(0, 4), rng.randint(0, 4))
        assert bipoly_from_matrix(coeff_matrix(p)) == p


def test_square_of_simple_binomial():
    assert parse_poly("(z w + 1)^2") == parse_poly("z^2 w^2 + 2 z w + 1")


def test_square_bidegree():
    p = corpus_poly("ex_2_4")
    assert (p ** 2).bidegree == (6, 4)


def test_binomial_power_family():
    base = parse_poly("z^2 w^3 + 1")
    for n in range(1, 5):
        p = base ** n
        expected = {}
        binom = 1
        for r in range(n + 1):
            expected[(2 * r, 3 * r)] = binom
            binom = binom * (n - r) // (r + 1)
        assert p == BiPoly.from_terms(expected)


def test_slices_read_off_grid():
    p = parse_poly("z^2 w + w + z")
    q = p.z_slices()
    assert q[0] == UniPoly.of(0, 1)          # z
    assert q[1] == UniPoly.of(1, 0, 1)       # z^2 + 1


def test_constant_slice_of_corpus_input():
    q = corpus_poly("ex_2_4").z_slices()
    assert q[0] == UniPoly.of(-6, 11, -6, 1)  # z^3 - 6 z^2 + 11 z - 6


def test_slices_reassemble():
    rng = Random(9)
    for _ in range(30):
        p = random_bipoly(rng, rng.randint(0, 3), rng.randint(0, 3))
        z_total = BiPoly.zero()
        for k, q in enumerate(p.z_slices()):
            z_total = z_total + BiPoly.from_terms(
                {(j, k): q.coeff(j) for j in range(q.degree + 1)}
            )
        assert z_total == p
        w_total = BiPoly.zero()
        for j, q in enumerate(p.w_slices()):
            w_total = w_total + BiPoly.from_terms(
                {(j, k): q.coeff(k) for k in range(q.degree + 1)}
            )
        assert w_total == p


def test_gcd_basic():
    a = UniPoly.of(-1, 0, 1)       # x^2 - 1
    b = UniPoly.of(-1, 1)          # x - 1
    assert gcd_uni(a, b) == b


def test_gcd_with_gaussian_coefficients():
    a = UniPoly.of(1, 0, 1)        # x^2 + 1
    b = UniPoly.of(I, 1)           # x + i
    assert gcd_uni(a, b) == b


def test_gcd_matches_brute_force_on_linear_factor_products():
    # oracle: for products of linear factors the gcd is the product over
    # the multiset intersection of the root lists
    from collections import Counter

    def from_roots(roots):
        p = UniPoly.of(1)
        for r in roots:
            p = p * UniPoly.of(-r, 1)
        return p

    pool = [G(0), G(1), G(-1), G(2), G(0, 1), G(1, -1)]
    rng = Random(13)
    for _ in range(30):
        ra = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        rb = [rng.choice(pool) for _ in range(rng.randint(1, 3))]
        expected = from_roots((Counter(ra) & Counter(rb)).elements())
        assert gcd_uni(from_roots(ra), from_roots(rb)) == expected


def test_gcd_divides_both_inputs():
    rng = Random(15)
    for _ in range(20):
        a = random_unipoly(rng, rng.randint(0, 4))
        b = random_unipoly(rng, rng.randint(0, 4))
        g = gcd_uni(a, b)
        assert exact_div_uni(a, g) is not None
        assert exact_div_uni(b, g) is not None


def test_gcd_rejects_two_zero_inputs():
    with pytest.raises(ValueError):
        gcd_uni(UniPoly(), UniPoly())


def test_p1_p2_of_corpus_input():
    assert check_p1_p2(corpus_poly("ex_2_4")) == (True, True)


def test_p1_fails_for_explicit_linear_factor():
    p = parse_poly("(z - 1)(w^2 + 1)")
    p1_ok, p2_ok = check_p1_p2(p)
    assert not p1_ok
    # w^2 + 1 splits into linear factors over C, so the w-side fails too
    assert not p2_ok
    # coupling the variables removes both one-variable factors
    assert check_p1_p2(parse_poly("(z - 1) w^2 + z w + 2")) == (True, True)


def test_p1_p2_fail_for_separated_product():
    p = parse_poly("(z^3 + z + 1)(2i w^3 + 1)")
    assert check_p1_p2(p) == (False, False)


def test_evaluate_z_constant_case():
    assert parse_poly("z w + 1").evaluate_z(0) == UniPoly.of(1)


def test_evaluate_w_at_zero_of_corpus_input():
    p = corpus_poly("ex_2_4").evaluate_w(0)
    assert p == UniPoly.of(-6, 11, -6, 1)
    for root in (1, 2, 3):
        assert p.evaluate(root).is_zero


def test_degree_drop_is_trimmed():
    # leading w-slice (z - 1) vanishes at z0 = 1
    p = parse_poly("(z - 1) w^2 + z w + 1")
    assert p.evaluate_z(1).degree == 1


def test_mul_commutative_and_associative():
    rng = Random(21)
    for _ in range(15):
        a = random_bipoly(rng, rng.randint(0, 2), rng.randint(0, 2))
        b = random_bipoly(rng, rng.randint(0, 2), rng.randint(0, 2))
        c = random_bipoly(rng, rng.randint(0, 2), rng.randint(0, 2))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)


def test_product_bidegrees_add():
    rng = Random(23)
    for _ in range(15):
        a = random_bipoly(rng, rng.randint(1, 3), rng.randint(1, 3))
        b = random_bipoly(rng, rng.randint(1, 3), rng.randint(1, 3))
        prod = a * b
        assert prod.deg_z == a.deg_z + b.deg_z
        assert prod.deg_w == a.deg_w + b.deg_w


def test_proportionality_constant():
    p = parse_poly("z^2 w + 3 z")
    assert proportionality_constant(p.scale(G(Fraction(2, 3))), p) == G(Fraction(2, 3))
    assert proportionality_constant(p, parse_poly("z^2 w + 3 z + 1")) is None
    assert proportionality_constant(BiPoly.zero(), p) is None


def test_bidegree_invariant_trims():
    p = BiPoly.from_terms({(2, 1): 0, (1, 1): 1})
    assert p.bidegree == (1, 1)
    assert BiPoly.from_terms({}).is_zero
