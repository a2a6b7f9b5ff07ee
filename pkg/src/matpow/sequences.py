"""Reference sequences used as oracles by the identity suite."""
from __future__ import annotations

import threading

from .closed_form import theorem1_power
from .mat2 import Mat2, pow_naive
from .poly import Poly

__all__ = [
    "FIXTURES",
    "FIB_MATRIX",
    "FibCache",
    "PreconditionError",
    "UnknownFixtureError",
    "brahmagupta_pair",
    "chebyshev_pair",
    "fibonacci",
    "fixture_matrix",
    "fixture_power",
    "lucas",
    "morgan_voyce",
    "pell_pair",
    "rotation_power",
]

FIB_MATRIX = Mat2(1, 1, 1, 0)


class PreconditionError(ValueError):
    pass


class UnknownFixtureError(KeyError):
    pass


class FibCache:
    """Growing table ``F_0 = 0, F_1 = 1, F_{i+1} = F_i + F_{i-1}``."""

    def __init__(self):
        self.values = [0, 1]
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n == -1:
            return 1
        if n < -1:
            raise ValueError(f"fibonacci defined here for n >= -1, got {n}")
        if n >= len(self.values):
            with self._lock:
                v = self.values
                while len(v) <= n:
                    v.append(v[-1] + v[-2])
        return self.values[n]


_fib = FibCache()


def fibonacci(n: int) -> int:
    """``F_n`` for ``n >= -1``; ``F_{-1} = 1`` keeps ``F_1 = F_0 + F_{-1}``."""
    return _fib[n]


def lucas(n: int) -> int:
    """``L_1 = 1``, ``L_2 = 3``, ``L_{n+1} = L_n + L_{n-1}``."""
    if n < 1:
        raise ValueError(f"lucas defined for n >= 1, got {n}")
    prev, cur = 2, 1  # L_0, L_1
    for _ in range(n - 1):
        prev, cur = cur, prev + cur
    return cur


def pell_pair(m: int, x1: int, y1: int, n: int) -> tuple[int, int]:
    """``(x_n, y_n)`` read off ``[[x1, m y1], [y1, x1]]^n``."""
    if x1 * x1 - m * y1 * y1 != 1:
        raise PreconditionError(f"({x1}, {y1}) does not solve x^2 - {m} y^2 = 1")
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    P = pow_naive(Mat2(x1, m * y1, y1, x1), n)
    xn, yn = P.a, P.c
    assert xn * xn - m * yn * yn == 1
    return xn, yn


def brahmagupta_pair(n: int, x1="x1", y1="y1", t="t") -> tuple[Poly, Poly]:
    """``(x_n, y_n)`` from ``[[x1, y1], [t y1, x1]]^n``; string arguments become variables."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    x1, y1, t = (Poly.var(v) if isinstance(v, str) else Poly(v) for v in (x1, y1, t))
    P = pow_naive(Mat2(x1, y1, t * y1, x1), n)
    return P.a, P.b


def morgan_voyce(n: int, x="x") -> tuple[Poly, Poly]:
    """``(B_n, b_n)`` with ``B_n`` the (1,1) entry of ``[[x+2, -1], [1, 0]]^n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    xv = Poly.var(x) if isinstance(x, str) else Poly(x)
    P = pow_naive(Mat2(xv + 2, Poly(-1), Poly(1), Poly(0)), n)
    # P = [[B_n, -B_{n-1}], [B_{n-1}, -B_{n-2}]]
    return P.a, P.a - P.c


def chebyshev_pair(n: int, c="c", s="s") -> tuple[Poly, Poly]:
    """``(cos n t, sin n t / sin t)`` as polynomials in ``c = cos t``.

    Computed from ``[[c, s], [-s, c]]^n`` reduced with ``s^2 = 1 - c^2``.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    cv, sv = Poly.var(c), Poly.var(s)
    P = pow_naive(Mat2(cv, sv, -sv, cv), n).map(lambda e: e.reduce_sin_cos(s, c))
    sin_part = P.b.coefficients_in(s)
    if set(sin_part) - {1}:
        raise ArithmeticError(f"(1,2) entry not a multiple of {s}: {P.b}")
    return P.a, sin_part.get(1, Poly(0))


FIXTURES = {
    "identity": Mat2(1, 0, 0, 1),
    "nilpotent-shift": Mat2(2, 1, -1, 0),
    "doubling": Mat2(3, 1, -2, 0),
    "fib-sign": Mat2(-2, -1, 1, 1),
}


def fixture_matrix(name: str) -> Mat2:
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownFixtureError(name) from None


def fixture_power(name: str, n: int) -> Mat2:
    """Closed-form ``n``-th power of one of the four fixture matrices."""
    fixture_matrix(name)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if name == "identity":
        return Mat2(1, 0, 0, 1)
    if name == "nilpotent-shift":
        return Mat2(n + 1, n, -n, -n + 1)
    if name == "doubling":
        return Mat2(2 ** (n + 1) - 1, 2**n - 1, -(2 ** (n + 1)) + 2, -(2**n) + 2)
    s = -1 if n % 2 else 1
    return Mat2(s * fibonacci(n + 2), s * fibonacci(n), -s * fibonacci(n), -s * fibonacci(n - 2))


def rotation_power(n: int, c: str = "c", s: str = "s") -> Mat2:
    """``[[c, s], [-s, c]]^n`` via the trace/determinant closed form, reduced mod ``s^2 + c^2 - 1``."""
    cv, sv = Poly.var(c), Poly.var(s)
    return theorem1_power(Mat2(cv, sv, -sv, cv), n).map(lambda e: Poly(e).reduce_sin_cos(s, c))
