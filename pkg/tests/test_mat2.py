from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matpow.exact import GaussianRational
from matpow.mat2 import Mat2, identity, mat_mul, parse_matrix, pow_binary, pow_naive

FIB = Mat2(1, 1, 1, 0)

small = st.integers(-9, 9)
mats = st.builds(Mat2, small, small, small, small)


def test_mat_mul_examples():
    X = Mat2(3, -1, 4, 2)
    assert mat_mul(X, identity()) == X
    assert mat_mul(FIB, FIB) == Mat2(2, 1, 1, 1)
    A = Mat2(2, 1, -1, 0)
    assert mat_mul(A, A) == Mat2(3, 2, -2, -1)


def test_pow_naive_examples():
    A = Mat2(4, 7, -2, 5)
    assert pow_naive(A, 0) == identity()
    assert pow_naive(A, 1) == A
    assert pow_naive(FIB, 10) == Mat2(89, 55, 55, 34)


def test_pow_binary_examples():
    A = Mat2(4, 7, -2, 5)
    assert pow_binary(A, 0) == identity()
    sq = A
    for k in range(1, 7):
        sq = mat_mul(sq, sq)
        assert pow_binary(A, 2**k) == sq


def test_power_of_zero_stays_in_ring():
    G = Mat2(GaussianRational(1, 1), 0, 0, 1)
    assert isinstance(pow_naive(G, 0).a, GaussianRational)


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        pow_naive(FIB, -1)
    with pytest.raises(ValueError):
        pow_binary(FIB, -1)


@given(mats)
def test_cayley_hamilton(X):
    assert X @ X == X.trace() * X - X.det() * identity()


@given(mats, st.integers(0, 12))
def test_determinant_is_multiplicative(X, n):
    assert pow_naive(X, n).det() == X.det() ** n


@given(st.builds(Mat2, *[st.integers(-5, 5)] * 4), st.integers(0, 32))
def test_binary_matches_naive(X, n):
    assert pow_binary(X, n) == pow_naive(X, n)


@given(mats, mats, mats)
def test_product_is_associative(X, Y, Z):
    assert (X @ Y) @ Z == X @ (Y @ Z)


def test_operators():
    A = Mat2(1, 2, 3, 4)
    assert A + A == 2 * A == A * 2
    assert A - A == Mat2(0, 0, 0, 0)
    assert (A - A).is_zero()
    assert -A == Mat2(-1, -2, -3, -4)
    assert A**3 == A @ A @ A
    assert str(A) == "1 2\n3 4"


def test_parse_matrix():
    assert parse_matrix("1, -2, 3/4, 0") == Mat2(1, -2, Fraction(3, 4), 0)
    assert parse_matrix("i,0,0,1", allow_gaussian=True).a == GaussianRational(0, 1)
    for bad in ("1,2,3", "1,2,3,4,5", "a,b,c,d", "1,2,3,1/0"):
        with pytest.raises(ValueError):
            parse_matrix(bad)
