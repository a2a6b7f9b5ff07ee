"""Exact coefficient rings and combinatorial primitives.

Integers are plain Python ``int`` and rationals are ``fractions.Fraction``;
both are arbitrary precision and never round. ``GaussianRational`` adds the
imaginary unit on top of ``Fraction``.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

__all__ = [
    "GaussianRational",
    "I",
    "binomial",
    "gaussian_div",
    "int_pow",
    "normalize",
    "parse_scalar",
    "sign_pow",
]


@lru_cache(maxsize=1 << 16)
def binomial(a: int, k: int) -> int:
    """Generalized binomial coefficient.

    Zero for ``k < 0``; otherwise ``a (a-1) ... (a-k+1) / k!``, which is zero
    when ``0 <= a < k`` and follows the upper-negation rule for ``a < 0``.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k)
    return (-1) ** k * math.comb(k - a - 1, k)


def sign_pow(e: int) -> int:
    """``(-1)**e`` for any integer ``e``, negative included."""
    return -1 if e & 1 else 1


def _one_like(x):
    one = getattr(x, "one", None)
    if callable(one):
        return one()
    return type(x)(1)


def int_pow(x, k: int):
    """``x**k`` by binary exponentiation; ``x**0`` is the ring one of ``x``."""
    if k < 0:
        raise ValueError(f"exponent must be nonnegative, got {k}")
    result = _one_like(x)
    base = x
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def normalize(x):
    """Collapse integral ``Fraction`` values to ``int``; other values pass through."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class GaussianRational:
    """A complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("imaginary part given twice")
            re, im = re.re, re.im
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, _RationalABC)):
            return GaussianRational(other)
        return NotImplemented

    def one(self) -> GaussianRational:
        return GaussianRational(1)

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """``|z|**2 = re**2 + im**2``, exact."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gaussian_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return gaussian_div(other, self)

    def __pow__(self, k: int):
        if k < 0:
            return gaussian_div(GaussianRational(1), int_pow(self, -k))
        return int_pow(self, k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "" if abs(self.im) == 1 else str(abs(self.im))
        if not self.re:
            return f"{'-' if self.im < 0 else ''}{im}i"
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}i"


I = GaussianRational(0, 1)


def gaussian_div(x, y) -> GaussianRational:
    """Exact quotient ``x / y`` of Gaussian rationals, via the conjugate of ``y``."""
    x = GaussianRational(x)
    y = GaussianRational(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian rational division by zero")
    num = x * y.conjugate()
    return GaussianRational(num.re / n, num.im / n)


_RAT = r"[+-]?\d+(?:/\d+)?"


def parse_scalar(text: str, *, allow_gaussian: bool = False):
    """Parse ``p``, ``p/q`` or (optionally) a Gaussian literal like ``1/2+3/4i``.

    Integral values come back as ``int``.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    if s.endswith("i"):
        if not allow_gaussian:
            raise ValueError(f"Gaussian literal not accepted here: {text!r}")
        body = s[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut > 0 and body[cut - 1] != "/":
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+", "-"):
            im_part += "1"
        if not (re.fullmatch(_RAT, re_part) and re.fullmatch(_RAT, im_part)):
            raise ValueError(f"bad Gaussian literal {text!r}")
        try:
            return GaussianRational(Fraction(re_part), Fraction(im_part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad Gaussian literal {text!r}") from exc
    if not re.fullmatch(_RAT, s):
        raise ValueError(f"bad rational literal {text!r}")
    try:
        return normalize(Fraction(s))
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in {text!r}") from exc
