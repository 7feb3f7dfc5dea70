from random import Random

import pytest

from polycorr import ExactMatrix, full_rank_factorize, rank, rref
from polycorr.exactnum import GaussianRational

from oracles import random_scalar, rank_by_minors

G = GaussianRational.of


def _random_matrix(rng, nrows, ncols):
    return ExactMatrix.from_lists(
        [[random_scalar(rng) for _ in range(ncols)] for _ in range(nrows)]
    )


def test_rref_identity():
    m = ExactMatrix.identity(3)
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == [0, 1, 2]


def test_rref_rank_deficient():
    m = ExactMatrix.from_lists([[G(1), G(2)], [G(2), G(4)]])
    reduced, pivots = rref(m)
    assert reduced == ExactMatrix.from_lists([[G(1), G(2)], [G(0), G(0)]])
    assert pivots == [0]


def test_rank_agrees_with_minor_oracle():
    rng = Random(2)
    for _ in range(25):
        m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert rank(m) == rank_by_minors(m)


def test_rank_deficient_products_agree_with_oracle():
    rng = Random(4)
    for _ in range(15):
        r = rng.randint(1, 2)
        x = _random_matrix(rng, rng.randint(2, 4), r)
        y = _random_matrix(rng, r, rng.randint(2, 4))
        m = x @ y
        assert rank(m) == rank_by_minors(m)


def test_rank_equals_rank_of_transpose():
    rng = Random(6)
    for _ in range(20):
        m = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert rank(m) == rank(m.transpose())


def test_rank_of_product_bounded():
    rng = Random(8)
    for _ in range(15):
        a = _random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        b = _random_matrix(rng, a.ncols, rng.randint(1, 4))
        assert rank(a @ b) <= min(rank(a), rank(b))


def test_factorize_rank_one():
    m = ExactMatrix.from_lists([[G(2), G(4)], [G(1), G(2)]])
    b, a = full_rank_factorize(m)
    assert b == ExactMatrix.from_lists([[G(2)], [G(1)]])
    assert a == ExactMatrix.from_lists([[G(1), G(2)]])
    assert b @ a == m


def test_factorize_reconstructs_random_low_rank():
    rng = Random(10)
    for _ in range(30):
        r = rng.randint(1, 4)
        nrows = rng.randint(r, r + 3)
        ncols = rng.randint(r, r + 3)
        x = _random_matrix(rng, nrows, r)
        y = _random_matrix(rng, r, ncols)
        m = x @ y
        if m.is_zero:
            continue
        b, a = full_rank_factorize(m)
        assert b @ a == m
        rho = rank(m)
        assert rank(b) == rho
        assert rank(a) == rho
        assert b.ncols == rho and a.nrows == rho


def test_factorize_rejects_zero_matrix():
    with pytest.raises(ValueError):
        full_rank_factorize(ExactMatrix.from_lists([[G(0), G(0)]]))


def test_matmul_shape_mismatch():
    a = ExactMatrix.identity(2)
    b = ExactMatrix.from_lists([[G(1), G(2), G(3)]])
    with pytest.raises(ValueError):
        a @ b
