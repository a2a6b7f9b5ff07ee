import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from matpow.closed_form import (
    NonRationalEigenvalueError,
    YZSeq,
    rational_sqrt,
    sequence_for,
    theorem1_power,
    williams_eigen_power,
    williams_power,
    y_explicit,
    y_recurrence,
    z_explicit,
)
from matpow.mat2 import Mat2, pow_naive
from matpow.poly import Poly, variables

T, D = variables("T", "D")


def fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def test_y_explicit_examples():
    assert y_explicit(7, 3, 0) == 1
    assert y_explicit(1, -1, 5) == 8 == fib(6)
    assert y_explicit(2, 1, 4) == 5


def test_y_recurrence_examples():
    assert y_recurrence(T, D, 0) == 1
    assert y_recurrence(T, D, 1) == T
    assert y_recurrence(T, D, 3) == T**3 - 2 * T * D


def test_z_explicit_examples():
    assert z_explicit(T, D, 1) == 1
    assert z_explicit(1, -1, 5) == 5
    assert z_explicit(1, -1, 12) == 144
    assert z_explicit(5, 7, 0) == 0


def test_z_five_numerator():
    assert Fraction(5 + 10 * 5 + 1 * 25, 2**4) == z_explicit(1, -1, 5)


@pytest.mark.parametrize("n", range(0, 41))
def test_y_explicit_matches_recurrence_symbolically(n):
    assert y_explicit(T, D, n) == y_recurrence(T, D, n)


@pytest.mark.parametrize("n", range(1, 41))
def test_bridge_y_shifted_equals_z(n):
    assert (y_explicit(T, D, n - 1) - z_explicit(T, D, n)).is_zero()


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(1, 30))
def test_z_is_integral_for_integer_trace_and_determinant(t, d, n):
    v = z_explicit(t, d, n)
    assert isinstance(v, int)
    assert v == y_recurrence(t, d, n - 1)


def test_theorem1_examples():
    A = Mat2(3, -4, 8, 1)
    assert theorem1_power(A, 1) == A
    assert theorem1_power(A, 0) == Mat2(1, 0, 0, 1)
    assert theorem1_power(Mat2(1, 1, 1, 0), 10) == Mat2(89, 55, 55, 34)
    assert theorem1_power(Mat2(3, 1, -2, 0), 4) == Mat2(31, 15, -30, -14)


def test_williams_examples():
    A = Mat2(3, -4, 8, 1)
    assert williams_power(A, 1) == A
    assert williams_power(Mat2(1, 1, 1, 0), 6) == Mat2(13, 8, 8, 5)
    assert williams_power(Mat2(2, 1, -1, 0), 7) == Mat2(8, 7, -7, -6)


def test_eigen_examples():
    assert williams_eigen_power(Mat2(2, 1, -1, 0), 5) == Mat2(6, 5, -5, -4)
    assert williams_eigen_power(Mat2(3, 1, -2, 0), 3) == Mat2(15, 7, -14, -6)
    e, f = 1, 2
    assert williams_eigen_power(Mat2(f + 2 * e, 1, 0, f), 2) == Mat2(16, 6, 0, 4)


def test_eigen_rejects_irrational_eigenvalues():
    with pytest.raises(NonRationalEigenvalueError):
        williams_eigen_power(Mat2(1, 1, 1, 0), 3)
    with pytest.raises(NonRationalEigenvalueError):
        williams_eigen_power(Mat2(0, -1, 1, 0), 2)  # eigenvalues +-i


def test_eigen_rejects_symbolic_entries():
    with pytest.raises(TypeError):
        williams_eigen_power(Mat2(Poly.var("a"), 0, 0, 1), 2)


def test_rejects_bad_exponents():
    with pytest.raises(ValueError):
        theorem1_power(Mat2(1, 0, 0, 1), -1)
    with pytest.raises(ValueError):
        williams_power(Mat2(1, 0, 0, 1), 0)
    with pytest.raises(ValueError):
        z_explicit(1, 1, -1)


int_mats = st.builds(Mat2, *[st.integers(-9, 9)] * 4)


@given(int_mats, st.integers(1, 25))
def test_closed_forms_match_oracle(A, n):
    expected = pow_naive(A, n)
    assert theorem1_power(A, n) == expected
    assert williams_power(A, n) == expected


@given(
    st.builds(Mat2, *[st.fractions(-5, 5, max_denominator=6)] * 4),
    st.integers(1, 12),
)
def test_closed_forms_over_rationals(A, n):
    expected = pow_naive(A, n)
    assert theorem1_power(A, n) == expected
    assert williams_power(A, n) == expected


def eigen_matrix(alpha, beta, p, q, r, s):
    """P diag(alpha, beta) P^-1 with P = [[p, q], [r, s]]."""
    det = Fraction(p * s - q * r)
    a = (p * alpha * s - q * beta * r) / det
    b = (-p * alpha * q + q * beta * p) / det
    c = (r * alpha * s - s * beta * r) / det
    d = (-r * alpha * q + s * beta * p) / det
    return Mat2(a, b, c, d)


@given(
    st.integers(-6, 6), st.integers(-6, 6),
    st.tuples(*[st.integers(-4, 4)] * 4).filter(lambda t: t[0] * t[3] != t[1] * t[2]),
    st.integers(1, 12),
)
def test_eigen_branch_matches_oracle(alpha, beta, P, n):
    A = eigen_matrix(alpha, beta, *P).normalized()
    assert williams_eigen_power(A, n) == pow_naive(A, n)


@given(st.integers(-6, 6), st.integers(-6, 6), st.integers(1, 12))
def test_eigen_repeated_branch(alpha, b, n):
    A = Mat2(alpha, b, 0, alpha)
    assert williams_eigen_power(A, n) == pow_naive(A, n)


@pytest.mark.parametrize("n", range(1, 7))
def test_symbolic_entries(n):
    a, b, c, d = variables("a", "b", "c", "d")
    A = Mat2(a, b, c, d)
    expected = pow_naive(A, n)
    assert (theorem1_power(A, n) - expected).is_zero()
    assert (williams_power(A, n) - expected).is_zero()


@pytest.mark.parametrize("n", range(1, 12))
def test_zero_trace(n):
    A = Mat2(3, 5, -2, -3)
    assert theorem1_power(A, n) == pow_naive(A, n)
    assert williams_power(A, n) == pow_naive(A, n)


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(5) is None
    assert rational_sqrt(-4) is None
    assert rational_sqrt(0) == 0


def test_yz_sequence():
    seq = YZSeq(1, -1)
    assert [seq.y(k) for k in range(8)] == [fib(k + 1) for k in range(8)]
    assert seq.z(0) == 0
    assert seq.z(12) == 144
    assert sequence_for(1, -1) is sequence_for(1, -1)


def test_yz_sequence_is_thread_safe():
    seq = YZSeq(3, -2)
    results = []

    def work(seed):
        rng = random.Random(seed)
        results.append([(k, seq.y(k)) for k in rng.sample(range(300), 60)])

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for batch in results:
        for k, v in batch:
            assert v == y_recurrence(3, -2, k)
