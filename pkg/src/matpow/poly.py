"""Sparse multivariate polynomials over an exact coefficient ring.

A polynomial is a map from monomials to nonzero coefficients. A monomial is a
tuple of ``(variable, exponent)`` pairs sorted by variable name with every
exponent positive, so the empty tuple is the constant monomial. Because zero
coefficients are never stored, two polynomials are equal exactly when their
term maps are equal, and "is this identity true for all values of the free
parameters" becomes ``(lhs - rhs).is_zero()``.

Coefficients may be ``int``, ``Fraction`` or ``GaussianRational``; mixing them
follows the usual Python numeric promotion.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Tuple

from .exact import GaussianRational, int_pow, normalize

Monomial = Tuple[Tuple[str, int], ...]

__all__ = [
    "Monomial",
    "Poly",
    "coefficient_of",
    "is_zero",
    "monomial",
    "poly_add",
    "poly_mul",
    "poly_pow",
    "reduce_sin_cos",
    "substitute",
    "variables",
]

_SCALARS = (int, _RationalABC, GaussianRational)


def monomial(exponents: Mapping[str, int] | None = None, **kw: int) -> Monomial:
    """Canonical monomial from a ``{var: exponent}`` map; zero exponents dropped."""
    items = dict(exponents or {})
    items.update(kw)
    for v, e in items.items():
        if e < 0:
            raise ValueError(f"negative exponent {e} for {v!r}")
    return tuple(sorted((v, e) for v, e in items.items() if e))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Poly):
            terms = value._terms
        elif isinstance(value, _SCALARS):
            value = normalize(value)
            terms = {(): value} if value else {}
        elif isinstance(value, Mapping):
            terms = {}
            for m, c in value.items():
                c = normalize(c)
                if c:
                    m = monomial(dict(m))
                    terms[m] = normalize(terms.get(m, 0) + c)
                    if not terms[m]:
                        del terms[m]
        else:
            raise TypeError(f"cannot build a Poly from {type(value).__name__}")
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, terms: dict) -> Poly:
        # terms must already be canonical
        p = object.__new__(cls)
        object.__setattr__(p, "_terms", terms)
        object.__setattr__(p, "_hash", None)
        return p

    @classmethod
    def var(cls, name: str) -> Poly:
        return cls._raw({((name, 1),): 1})

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def one(self) -> Poly:
        return Poly._raw({(): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def variables(self) -> list[str]:
        return sorted({v for m in self._terms for v, _ in m})

    def degree(self, var: str | None = None) -> int:
        """Total degree, or the degree in ``var``; ``-1`` for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e for _, e in m) for m in self._terms)
        return max(dict(m).get(var, 0) for m in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"not a constant polynomial: {self}")
        return self._terms.get((), 0)

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, _SCALARS):
            return Poly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = normalize(out.get(m, 0) + c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, _SCALARS):
            other = normalize(other)
            if not other:
                return Poly._raw({})
            out = {}
            for m, c in self._terms.items():
                p = normalize(c * other)
                if p:
                    out[m] = p
            return Poly._raw(out)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly._raw({m: normalize(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, GaussianRational):
            return self * (GaussianRational(1) / other)
        return NotImplemented

    def __pow__(self, k: int):
        return int_pow(self, k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                h = hash(self._terms.get((), 0))
            else:
                h = hash(frozenset(self._terms.items()))
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # structure ------------------------------------------------------------

    def coefficient_of(self, m: Monomial | Mapping[str, int]):
        if not isinstance(m, tuple):
            m = monomial(m)
        return self._terms.get(m, 0)

    def coefficients_in(self, var: str) -> dict[int, Poly]:
        """Split into ``{k: coefficient of var**k}`` with coefficients free of ``var``."""
        out: dict[int, dict] = {}
        for m, c in self._terms.items():
            k = 0
            rest = []
            for v, e in m:
                if v == var:
                    k = e
                else:
                    rest.append((v, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: Poly._raw(t) for k, t in sorted(out.items())}

    def substitute(self, var: str, value) -> Poly:
        """Image under the homomorphism sending ``var`` to ``value``, fixing the rest."""
        value = Poly(value)
        powers = {0: Poly(1)}
        result = Poly()
        for k, coeff in self.coefficients_in(var).items():
            if k not in powers:
                powers[k] = int_pow(value, k)
            result = result + coeff * powers[k]
        return result

    def evaluate(self, values: Mapping[str, object]):
        p = self
        for v, x in values.items():
            p = p.substitute(v, x)
        return p.constant_value() if p.is_constant() else p

    def reduce_sin_cos(self, s: str = "s", c: str = "c") -> Poly:
        """Rewrite with ``s**2 -> 1 - c**2`` until every ``s`` exponent is below 2."""
        one_minus_c2 = Poly(1) - Poly.var(c) * Poly.var(c)
        cache: dict[int, Poly] = {}
        result = Poly()
        for k, coeff in self.coefficients_in(s).items():
            q, r = divmod(k, 2)
            if q not in cache:
                cache[q] = int_pow(one_minus_c2, q)
            term = coeff * cache[q]
            if r:
                term = term * Poly.var(s)
            result = result + term
        return result

    # rendering ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        """Terms in lexicographic order on variable names, higher powers first."""
        names = self.variables()

        def key(item):
            d = dict(item[0])
            return tuple(-d.get(v, 0) for v in names)

        return sorted(self._terms.items(), key=key)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)
            if isinstance(c, GaussianRational) and c.im:
                coeff, neg = f"({c})", False
            else:
                neg = c < 0
                coeff = str(abs(c))
            if mono and coeff == "1":
                body = mono
            elif mono:
                body = f"{coeff}*{mono}"
            else:
                body = coeff
            parts.append(("-" if neg else "+", body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


def poly_add(p, q) -> Poly:
    return Poly(p) + Poly(q)


def poly_mul(p, q) -> Poly:
    return Poly(p) * Poly(q)


def poly_pow(p, k: int) -> Poly:
    return int_pow(Poly(p), k)


def substitute(p, var: str, value) -> Poly:
    return Poly(p).substitute(var, value)


def coefficient_of(p, m):
    return Poly(p).coefficient_of(m)


def reduce_sin_cos(p, s: str = "s", c: str = "c") -> Poly:
    return Poly(p).reduce_sin_cos(s, c)


def is_zero(p) -> bool:
    return Poly(p).is_zero()


def variables(*names: str) -> Iterable[Poly]:
    """``x, y = variables("x", "y")``."""
    return tuple(Poly.var(n) for n in names)
