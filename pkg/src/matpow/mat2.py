"""2x2 matrices over any exact ring (scalars or polynomials)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .exact import normalize, parse_scalar

__all__ = ["Mat2", "identity", "mat_mul", "parse_matrix", "pow_binary", "pow_naive"]


@dataclass(frozen=True)
class Mat2:
    """Row-major ``((a, b), (c, d))``."""

    a: Any
    b: Any
    c: Any
    d: Any

    def trace(self):
        return self.a + self.d

    def det(self):
        return self.a * self.d - self.b * self.c

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def map(self, f: Callable[[Any], Any]) -> Mat2:
        return Mat2(f(self.a), f(self.b), f(self.c), f(self.d))

    def __matmul__(self, other: Mat2) -> Mat2:
        return mat_mul(self, other)

    def __mul__(self, other):
        if isinstance(other, Mat2):
            return mat_mul(self, other)
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __add__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __sub__(self, other: Mat2) -> Mat2:
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self) -> Mat2:
        return self.map(lambda x: -x)

    def __pow__(self, n: int) -> Mat2:
        return pow_binary(self, n)

    def normalized(self) -> Mat2:
        return self.map(normalize)

    def is_zero(self) -> bool:
        return not any(self.entries())

    def __str__(self):
        return f"{self.a} {self.b}\n{self.c} {self.d}"


def identity(one=1) -> Mat2:
    return Mat2(one, 0 * one, 0 * one, one)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    return Mat2(
        x.a * y.a + x.b * y.c,
        x.a * y.b + x.b * y.d,
        x.c * y.a + x.d * y.c,
        x.c * y.b + x.d * y.d,
    )


def _one_of(m: Mat2):
    # the ring one matching the entries' type, so A**0 stays in the same ring
    for x in m.entries():
        one = getattr(x, "one", None)
        if callable(one):
            return one()
    return 1


def pow_naive(m: Mat2, n: int) -> Mat2:
    """``m**n`` by ``n`` repeated multiplications. This is the reference oracle."""
    if n < 0:
        raise ValueError(f"negative power {n}")
    result = identity(_one_of(m))
    for _ in range(n):
        result = mat_mul(result, m)
    return result


def pow_binary(m: Mat2, n: int) -> Mat2:
    """``m**n`` by repeated squaring, using ``m**(2k) = (m**k)**2``."""
    if n < 0:
        raise ValueError(f"negative power {n}")
    result = identity(_one_of(m))
    base = m
    while n:
        if n & 1:
            result = mat_mul(result, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return result


def parse_matrix(text: str, *, allow_gaussian: bool = False) -> Mat2:
    """Parse the ``a,b,c,d`` literal used on the command line."""
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(f"expected four comma-separated entries, got {text!r}")
    return Mat2(*(parse_scalar(p, allow_gaussian=allow_gaussian) for p in parts))
