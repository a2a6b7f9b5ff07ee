"""Closed forms for the n-th power of a 2x2 matrix.

Everything is expressed through the trace ``T = a + d`` and determinant
``D = ad - bc``. Two sequences carry the closed forms:

* ``y_n = sum_i C(n-i, i) T^(n-2i) (-D)^i`` gives
  ``A^n = [[y_n - d y_{n-1}, b y_{n-1}], [c y_{n-1}, y_n - a y_{n-1}]]``;
* ``z_n = [sum_m C(n, 2m+1) T^(n-2m-1) (T^2 - 4D)^m] / 2^(n-1)`` gives
  ``A^n = z_n A - z_{n-1} D I``, the eigenvalue-free form of Williams' formula.

Both satisfy ``s_{k+1} = T s_k - D s_{k-1}`` and ``z_n = y_{n-1}``.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from numbers import Rational as _RationalABC

from .exact import binomial, normalize
from .mat2 import Mat2, identity

__all__ = [
    "NonRationalEigenvalueError",
    "YZSeq",
    "rational_sqrt",
    "sequence_for",
    "theorem1_power",
    "williams_eigen_power",
    "williams_power",
    "y_explicit",
    "y_recurrence",
    "z_explicit",
]


class NonRationalEigenvalueError(ValueError):
    """The discriminant ``T^2 - 4D`` is not the square of a rational."""


def _powers(x, k: int) -> list:
    out = [1]
    for _ in range(k):
        out.append(out[-1] * x)
    return out


def y_explicit(T, D, n: int):
    """``y_n`` straight from its binomial sum. ``y_{-1}`` is taken as 0."""
    if n == -1:
        return 0 * T
    if n < -1:
        raise ValueError(f"y_n undefined for n={n}")
    tp = _powers(T, n)
    dp = _powers(-D, n // 2)
    total = 0 * T
    for i in range(n // 2 + 1):
        total = total + binomial(n - i, i) * tp[n - 2 * i] * dp[i]
    return total


def y_recurrence(T, D, n: int):
    """``y_n`` from ``y_0 = 1``, ``y_1 = T``, ``y_{k+1} = T y_k - D y_{k-1}``."""
    if n < 0:
        raise ValueError(f"y_n undefined for n={n}")
    prev, cur = 1 + 0 * T, T
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, T * cur - D * prev
    return cur


def _all_int(*xs) -> bool:
    return all(isinstance(x, int) for x in xs)


def z_explicit(T, D, n: int):
    """``z_n`` from the halving formula; ``z_0 = 0``.

    With integer ``T`` and ``D`` the quotient by ``2^(n-1)`` must be an
    integer, and anything else raises ``ArithmeticError``.
    """
    if n < 0:
        raise ValueError(f"z_n undefined for n={n}")
    if n == 0:
        return 0 * T
    disc = T * T - 4 * D
    tp = _powers(T, n - 1)
    dp = _powers(disc, (n - 1) // 2)
    total = 0 * T
    for m in range((n - 1) // 2 + 1):
        total = total + binomial(n, 2 * m + 1) * tp[n - 2 * m - 1] * dp[m]
    result = normalize(total * Fraction(1, 2 ** (n - 1)))
    if _all_int(T, D) and not isinstance(result, int):
        raise ArithmeticError(f"z_{n}({T}, {D}) = {result} is not an integer")
    return result


class YZSeq:
    """Memoized ``y_0, y_1, ...`` for one ``(T, D)``; ``z_n`` is read off as ``y_{n-1}``.

    Extension is guarded by a lock so one instance can be shared between threads.
    """

    def __init__(self, T, D):
        self.T = T
        self.D = D
        self.values = [1 + 0 * T, T]
        self._lock = threading.Lock()

    def y(self, n: int):
        if n == -1:
            return 0 * self.T
        if n < 0:
            raise ValueError(f"y_n undefined for n={n}")
        if n >= len(self.values):
            with self._lock:
                v = self.values
                while len(v) <= n:
                    v.append(self.T * v[-1] - self.D * v[-2])
        return self.values[n]

    def z(self, n: int):
        if n < 0:
            raise ValueError(f"z_n undefined for n={n}")
        return self.y(n - 1)


_seq_cache: dict = {}
_seq_lock = threading.Lock()


def sequence_for(T, D) -> YZSeq:
    """Shared ``YZSeq`` for ``(T, D)``, created on first use."""
    key = (T, D)
    with _seq_lock:
        seq = _seq_cache.get(key)
        if seq is None:
            seq = _seq_cache[key] = YZSeq(T, D)
    return seq


def theorem1_power(A: Mat2, n: int) -> Mat2:
    """``A^n`` from ``y_n`` and ``y_{n-1}`` evaluated at the trace and determinant of ``A``."""
    if n < 0:
        raise ValueError(f"negative power {n}")
    T, D = A.trace(), A.det()
    yn = y_explicit(T, D, n)
    ym = y_explicit(T, D, n - 1)
    return Mat2(yn - A.d * ym, A.b * ym, A.c * ym, yn - A.a * ym).normalized()


def williams_power(A: Mat2, n: int) -> Mat2:
    """``A^n = z_n A - z_{n-1} D I``. Entries must admit division by powers of 2."""
    if n < 1:
        raise ValueError(f"williams_power needs n >= 1, got {n}")
    T, D = A.trace(), A.det()
    zn = z_explicit(T, D, n)
    zm = z_explicit(T, D, n - 1)
    shift = zm * D
    return Mat2(zn * A.a - shift, zn * A.b, zn * A.c, zn * A.d - shift).normalized()


def rational_sqrt(q) -> Fraction | None:
    """Exact square root of a nonnegative rational, or ``None`` if it is irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    p, r = q.numerator, q.denominator
    sp, sr = math.isqrt(p), math.isqrt(r)
    if sp * sp == p and sr * sr == r:
        return Fraction(sp, sr)
    return None


def williams_eigen_power(A: Mat2, n: int) -> Mat2:
    """Williams' eigenvalue form of ``A^n`` for rational matrices with rational eigenvalues.

    Uses ``a^n (A - bI)/(a - b) + b^n (A - aI)/(b - a)`` for distinct
    eigenvalues ``a != b`` and ``a^(n-1) (nA - (n-1) a I)`` for a repeated one.
    """
    if n < 1:
        raise ValueError(f"williams_eigen_power needs n >= 1, got {n}")
    if not all(isinstance(x, (int, _RationalABC)) for x in A.entries()):
        raise TypeError("williams_eigen_power needs a matrix with rational entries")
    T, D = Fraction(A.trace()), Fraction(A.det())
    root = rational_sqrt(T * T - 4 * D)
    if root is None:
        raise NonRationalEigenvalueError(
            f"discriminant {T * T - 4 * D} is not a rational square"
        )
    alpha = (T + root) / 2
    beta = (T - root) / 2
    I = identity()
    if alpha == beta:
        result = alpha ** (n - 1) * (n * A - (n - 1) * alpha * I)
    else:
        result = (alpha**n / (alpha - beta)) * (A - beta * I) + (
            beta**n / (beta - alpha)
        ) * (A - alpha * I)
    return result.normalized()
