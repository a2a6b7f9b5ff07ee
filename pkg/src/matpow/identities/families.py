"""The identity families.

Each family below states one identity and supplies a left-hand and a
right-hand evaluator. Where the identity has a "known value" side (a
Fibonacci number, a binomial coefficient, a matrix power) that side comes from
an oracle (``fibonacci``, ``binomial``, ``pow_naive``, a recurrence); the other
side is the literal sum. Identities in free parameters are evaluated as
polynomials, so equality means the difference is the zero polynomial.

Binomials are generalized (zero for a negative lower index), which lets every
sum run over the ranges as written.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..closed_form import theorem1_power
from ..exact import GaussianRational, I, binomial as B, gaussian_div, int_pow, normalize, sign_pow
from ..mat2 import Mat2, pow_binary, pow_naive
from ..poly import Poly
from ..sequences import (
    FIXTURES,
    brahmagupta_pair,
    fibonacci,
    fixture_power,
    lucas,
    morgan_voyce,
    rotation_power,
)
from .registry import FamilyDescriptor, register

_e, _f, _g, _m, _w, _x = (Poly.var(v) for v in "efgmwx")

PELL_SEEDS = ((2, 3, 2), (3, 2, 1), (5, 9, 4))
F10_SAMPLES = 30
F14_SAMPLES = 30
F24_SAMPLES = 20


def _zpow(base: int, e: int):
    """``base**e`` for possibly negative ``e``, exact."""
    if e >= 0:
        return base**e
    return Fraction(1, base ** (-e))


def _random_matrices(rng, count: int, *, nonsingular: bool = False) -> list[tuple[int, ...]]:
    out = []
    while len(out) < count:
        a, b, c, d = (rng.randint(-9, 9) for _ in range(4))
        if nonsingular and a * d - b * c == 0:
            continue
        out.append((a, b, c, d))
    return out


def _abcd(p) -> Mat2:
    return Mat2(p["a"], p["b"], p["c"], p["d"])


@lru_cache(maxsize=4096)
def _binary_power(a: int, b: int, c: int, d: int, r: int) -> Mat2:
    return pow_binary(Mat2(a, b, c, d), r)


def _abcd_spec(count: int, nonsingular: bool) -> dict:
    text = f"{count} seeded random integer matrices, entries in [-9, 9]"
    if nonsingular:
        text += ", ad - bc != 0"
    return {"a": (int, text), "b": (int, ""), "c": (int, ""), "d": (int, "")}


# -- two binomial identities from equating the two closed forms ------------------------


def _f01_lhs(p):
    return B(p["n"], 2 * p["j"] + 1)


def _f01_rhs(p):
    n, j = p["n"], p["j"]
    return sum(
        sign_pow(i - j) * 2 ** (n - 1 - 2 * i) * B(i, j) * B(n - 1 - i, i)
        for i in range(j, (n - 1) // 2 + 1)
    )


def _nj_domain(size, rng):
    for n in range(1, size + 1):
        for j in range(1, (n - 1) // 2 + 1):
            yield {"n": n, "j": j}


def _nj_extension(size):
    for n in range(1, size + 1):
        yield {"n": n, "j": 0}


def _nj_in_domain(p):
    return p["n"] >= 1 and 1 <= p["j"] <= (p["n"] - 1) // 2


register(FamilyDescriptor(
    id="F01",
    title="odd-index binomial C(n, 2j+1) as an alternating sum with powers of 2",
    anchor="odd-index binomials read off the trace/determinant power formula",
    statement="C(n,2j+1) = sum_{i=j}^{floor((n-1)/2)} (-1)^(i-j) 2^(n-1-2i) C(i,j) C(n-1-i,i)",
    mode="numeric",
    param_spec={"n": (int, "1..size"), "j": (int, "1..floor((n-1)/2)")},
    size_param="n",
    default_size=40,
    domain=_nj_domain,
    lhs=_f01_lhs,
    rhs=_f01_rhs,
    in_domain=_nj_in_domain,
    paths="lhs: single binomial; rhs: the alternating sum",
    extension_domain=_nj_extension,
))


def _f02_lhs(p):
    n, j = p["n"], p["j"]
    return B(n - 1 - j, j)


def _f02_rhs(p):
    n, j = p["n"], p["j"]
    s = sum(B(n, 2 * i + 1) * B(i, j) for i in range(j, (n - 1) // 2 + 1))
    return normalize(s * _zpow(2, -n + 1 + 2 * j))


register(FamilyDescriptor(
    id="F02",
    title="C(n-1-j, j) as a scaled sum of odd-index binomials",
    anchor="inverse direction: C(n-1-j, j) recovered from odd-index binomials",
    statement="C(n-1-j,j) = 2^(-n+1+2j) sum_{i=j}^{floor((n-1)/2)} C(n,2i+1) C(i,j)",
    mode="numeric",
    param_spec={"n": (int, "1..size"), "j": (int, "1..floor((n-1)/2)")},
    size_param="n",
    default_size=40,
    domain=_nj_domain,
    lhs=_f02_lhs,
    rhs=_f02_rhs,
    in_domain=_nj_in_domain,
    paths="lhs: single binomial; rhs: sum evaluated over the rationals",
    clearing="none; the power of 2 is applied exactly as a rational",
    extension_domain=_nj_extension,
))


# -- Fibonacci numbers ----------------------------------------------------------------


def _n_domain(lo=1):
    def domain(size, rng):
        for n in range(lo, size + 1):
            yield {"n": n}
    return domain


def _n_positive(p):
    return p["n"] >= 1


def _fib_lhs(p):
    return fibonacci(p["n"])


def _f03_rhs(p):
    n = p["n"]
    num = sum(B(n, 2 * m + 1) * 5**m for m in range((n - 1) // 2 + 1))
    return normalize(Fraction(num, 2 ** (n - 1)))


register(FamilyDescriptor(
    id="F03",
    title="F_n from the halving formula at T = 1, D = -1 (discriminant 5)",
    anchor="halving formula at T = -D = 1, discriminant 5",
    statement="F_n = [sum_m C(n,2m+1) 5^m] / 2^(n-1)",
    mode="numeric",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=60,
    domain=_n_domain(),
    lhs=_fib_lhs,
    rhs=_f03_rhs,
    in_domain=_n_positive,
    paths="lhs: Fibonacci recurrence; rhs: binomial sum over the rationals",
))


def _f04_rhs(p):
    n = p["n"]
    return sum(B(n - 1 - i, i) for i in range((n - 1) // 2 + 1))


register(FamilyDescriptor(
    id="F04",
    title="F_n as a shallow-diagonal sum of Pascal's triangle",
    anchor="Fibonacci matrix fed through the trace/determinant formula",
    statement="F_n = sum_{i=0}^{floor((n-1)/2)} C(n-1-i, i)",
    mode="numeric",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=60,
    domain=_n_domain(),
    lhs=_fib_lhs,
    rhs=_f04_rhs,
    in_domain=_n_positive,
    paths="lhs: Fibonacci recurrence; rhs: binomial sum",
))


def _f05_lhs(p):
    return fibonacci(p["n"] * p["k"])


def _f05_rhs(p):
    n, k = p["n"], p["k"]
    L = lucas(n)
    return fibonacci(n) * sum(
        B(k - 1 - i, i) * L ** (k - 1 - 2 * i) * sign_pow(i * (n + 1))
        for i in range((k - 1) // 2 + 1)
    )


def _f05_domain(size, rng):
    for n in range(1, size + 1):
        for k in range(1, 9):
            yield {"n": n, "k": k}


register(FamilyDescriptor(
    id="F05",
    title="F_{nk} through Lucas numbers, from A^{nk} = (A^n)^k",
    anchor="F_{nk} via the trace L_n of the n-th Fibonacci matrix power",
    statement="F_{nk} = F_n sum_{i=0}^{floor((k-1)/2)} C(k-1-i,i) L_n^(k-1-2i) (-1)^(i(n+1))",
    mode="numeric",
    param_spec={"n": (int, "1..size"), "k": (int, "1..8")},
    size_param="n",
    default_size=12,
    domain=_f05_domain,
    lhs=_f05_lhs,
    rhs=_f05_rhs,
    in_domain=lambda p: p["n"] >= 1 and p["k"] >= 1,
    paths="lhs: Fibonacci recurrence at nk; rhs: Lucas recurrence and binomial sum",
))


def _f06_lhs(p):
    return GaussianRational(fibonacci(p["k"]))


def _f06_rhs(p):
    k = p["k"]
    z = GaussianRational(2, 1)
    s = GaussianRational(0)
    for m in range(k):
        s = s + B(2 * k - 1 - m, m) * int_pow(z, k - 1 - m) * sign_pow(m)
    return gaussian_div(s, int_pow(I, k - 1))


register(FamilyDescriptor(
    id="F06",
    title="F_k as a Gaussian-rational sum with powers of 2+i",
    anchor="Gaussian square root of the Fibonacci matrix, entries 1+i and i",
    statement="F_k = i^(-(k-1)) sum_{m=0}^{k-1} C(2k-1-m, m) (2+i)^(k-1-m) (-1)^m",
    mode="numeric",
    param_spec={"k": (int, "1..size")},
    size_param="k",
    default_size=30,
    domain=lambda size, rng: ({"k": k} for k in range(1, size + 1)),
    lhs=_f06_lhs,
    rhs=_f06_rhs,
    in_domain=lambda p: p["k"] >= 1,
    paths="lhs: Fibonacci recurrence; rhs: Gaussian-rational sum and exact division by i^(k-1)",
))


# -- binomial expansion via an upper-triangular matrix ---------------------------------


def _f07_lhs(p):
    return B(p["n"], p["t"])


def _f07_rhs(p):
    n, t = p["n"], p["t"]
    total = 0
    for m in range((n - 1) // 2 + 1):
        outer = sign_pow(m) * B(n - 1 - m, m)
        for j in range(n - 2 * m):
            total += outer * 2 ** (n - 1 - 2 * m - j) * B(n - 1 - 2 * m, j) * B(m, t - j - 1)
    return total


def _f07_domain(size, rng):
    for n in range(1, size + 1):
        for t in range(1, n + 1):
            yield {"n": n, "t": t}


register(FamilyDescriptor(
    id="F07",
    title="C(n, t) as a double sum, from the matrix [[f+2e, 1], [0, f]]",
    anchor="Williams' formula applied to an upper-triangular matrix with eigenvalues f+2e, f",
    statement=(
        "C(n,t) = sum_m sum_{j=0}^{n-1-2m} (-1)^m 2^(n-1-2m-j) C(n-1-m,m) C(n-1-2m,j) C(m,t-j-1)"
    ),
    mode="numeric",
    param_spec={"n": (int, "1..size"), "t": (int, "1..n")},
    size_param="n",
    default_size=25,
    domain=_f07_domain,
    lhs=_f07_lhs,
    rhs=_f07_rhs,
    in_domain=lambda p: 1 <= p["t"] <= p["n"],
    paths="lhs: single binomial; rhs: double sum",
))


def _f08_lhs(p):
    return int_pow(_f + _e, p["n"])


def _f08_rhs(p):
    n = p["n"]
    base = _e + 2 * _f
    other = -(_f * (_e + _f))
    s = Poly()
    for m in range((n - 1) // 2 + 1):
        s = s + B(n - 1 - m, m) * int_pow(base, n - 1 - 2 * m) * int_pow(other, m)
    return int_pow(_f, n) + _e * s


register(FamilyDescriptor(
    id="F08",
    title="(f+e)^n as f^n plus a trace/determinant sum, in e and f",
    anchor="polynomial identity in e, f behind the triangular-matrix expansion",
    statement="(f+e)^n = f^n + e sum_m C(n-1-m,m) (e+2f)^(n-1-2m) (-f(e+f))^m",
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=18,
    domain=_n_domain(),
    lhs=_f08_lhs,
    rhs=_f08_rhs,
    in_domain=_n_positive,
    paths="lhs: polynomial power; rhs: polynomial sum",
))


# -- commuting split A = (mA + wI) + ((1-m)A - wI) -------------------------------------


def _f09_inner(n, k, r):
    return sum(
        B(n, j) * B(n - j, k) * B(j, r - k) * sign_pow(j) for j in range(n - k + 1)
    )


def _f09_lhs(p):
    n, r = p["n"], p["r"]
    if "k" in p:
        return sign_pow(n - p["k"]) * _f09_inner(n, p["k"], r)
    # symbolic variant: sum_k m^k (1-m)^(n-k) (-1)^(n-k) S(n,k,r)
    out = Poly()
    for k in range(n + 1):
        inner = _f09_inner(n, k, r)
        if inner:
            out = out + inner * sign_pow(n - k) * int_pow(_m, k) * int_pow(1 - _m, n - k)
    return out


def _f09_rhs(p):
    n, r = p["n"], p["r"]
    if "k" in p:
        return B(n, p["k"]) if r == n else 0
    return int_pow(_m + (1 - _m), n) if r == n else Poly()


def _f09_domain(size, rng):
    for n in range(1, size + 1):
        for r in range(n + 1):
            for k in range(r + 1):
                yield {"n": n, "k": k, "r": r}
    for n in range(1, min(size, 10) + 1):
        for r in range(n + 1):
            yield {"n": n, "r": r}


def _f09_in_domain(p):
    k = p.get("k", 0)
    return p["n"] >= 1 and 0 <= k <= p["r"] <= p["n"]


register(FamilyDescriptor(
    id="F09",
    title="alternating triple-binomial sum picks out r = n",
    anchor="commuting split A = (mA + wI) + ((1-m)A - wI) expanded by the binomial theorem",
    statement=(
        "(-1)^(n-k) sum_{j=0}^{n-k} C(n,j) C(n-j,k) C(j,r-k) (-1)^j = C(n,k) [r = n]; "
        "without k: sum_k m^k (1-m)^(n-k) (-1)^(n-k) (...) = (m + (1-m))^n [r = n] in m"
    ),
    mode="numeric",
    param_spec={
        "n": (int, "1..size"),
        "r": (int, "0..n (k: 0..r; rows without k are the symbolic-in-m check for n <= 10)"),
    },
    optional_params=("k",),
    size_param="n",
    default_size=20,
    domain=_f09_domain,
    lhs=_f09_lhs,
    rhs=_f09_rhs,
    in_domain=_f09_in_domain,
    paths=(
        "lhs: triple-binomial sum (or its polynomial in m); "
        "rhs: indicator times C(n,k) (or the power (m + (1-m))^n); symbolic variant for n <= 10"
    ),
))


def _f10_lhs(p):
    a, b, c, d, n = p["a"], p["b"], p["c"], p["d"], p["n"]
    return sum(
        B(n - 1 - i, i) * (a + d) ** (n - 1 - 2 * i) * (b * c - a * d) ** i
        for i in range((n - 1) // 2 + 1)
    )


def _f10_rhs(p):
    a, b, c, d, n = p["a"], p["b"], p["c"], p["d"], p["n"]
    trace = (a + d) - 2 * _w
    neg_det = b * c - (a - _w) * (d - _w)
    total = Poly()
    for j in range(1, n + 1):
        inner = Poly()
        for r in range((j - 1) // 2 + 1):
            inner = inner + B(j - 1 - r, r) * int_pow(trace, j - 1 - 2 * r) * int_pow(neg_det, r)
        total = total + B(n, j) * int_pow(_w, n - j) * inner
    return total


def _sampled_domain(count, nonsingular, n_lo=1, with_m=False):
    def domain(size, rng):
        for a, b, c, d in _random_matrices(rng, count, nonsingular=nonsingular):
            for n in range(n_lo, size + 1):
                if with_m:
                    for m in range(2 * n + 1):
                        yield {"a": a, "b": b, "c": c, "d": d, "n": n, "m": m}
                else:
                    yield {"a": a, "b": b, "c": c, "d": d, "n": n}
    return domain


register(FamilyDescriptor(
    id="F10",
    title="(1,2)-entry identity in w from A^n = sum_j C(n,j) w^(n-j) (A - wI)^j",
    anchor="(1,2) entries of the w-shifted split with m = 0",
    statement=(
        "sum_i C(n-1-i,i) (a+d)^(n-1-2i) (bc-ad)^i = sum_{j=1}^n C(n,j) w^(n-j) "
        "sum_r C(j-1-r,r) (a+d-2w)^(j-1-2r) (bc-(a-w)(d-w))^r"
    ),
    mode="symbolic",
    param_spec={**_abcd_spec(F10_SAMPLES, False), "n": (int, "1..size")},
    size_param="n",
    default_size=12,
    domain=_sampled_domain(F10_SAMPLES, nonsingular=False),
    lhs=_f10_lhs,
    rhs=_f10_rhs,
    in_domain=_n_positive,
    paths="lhs: integer sum at w-free trace/determinant; rhs: polynomial in w",
))


def _f11_lhs(p):
    return Poly(fibonacci(p["n"]))


def _f11_rhs(p):
    n = p["n"]
    lin = 1 - 2 * _w
    quad = 1 + _w - _w * _w
    total = Poly()
    for j in range(1, n + 1):
        for r in range((j - 1) // 2 + 1):
            coeff = B(n, j) * B(j - 1 - r, r)
            if coeff:
                total = total + coeff * int_pow(_w, n - j) * int_pow(lin, j - 1 - 2 * r) * int_pow(quad, r)
    return total


register(FamilyDescriptor(
    id="F11",
    title="F_n as a polynomial in a free parameter w",
    anchor="F_n as a polynomial identity in w, valid away from 0, 1/2, phi, -1/phi",
    statement=(
        "F_n = sum_{j=1}^n sum_r C(n,j) C(j-1-r,r) w^(n-j) (1-2w)^(j-1-2r) (1+w-w^2)^r"
    ),
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=20,
    domain=_n_domain(),
    lhs=_f11_lhs,
    rhs=_f11_rhs,
    in_domain=_n_positive,
    paths="lhs: Fibonacci recurrence as a constant; rhs: polynomial in w",
))


def _f12_rhs(p):
    n = p["n"]
    return sum(sign_pow(j - 1) * B(n, j) * fibonacci(j) for j in range(1, n + 1))


register(FamilyDescriptor(
    id="F12",
    title="F_n as an alternating binomial transform of F_1..F_n (w = 1)",
    anchor="w = 1 specialisation of the w-parametrised Fibonacci expansion",
    statement="F_n = sum_{j=1}^n (-1)^(j-1) C(n,j) F_j",
    mode="numeric",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=40,
    domain=_n_domain(),
    lhs=_fib_lhs,
    rhs=_f12_rhs,
    in_domain=_n_positive,
    paths="lhs: F_n from the recurrence; rhs: binomial transform of earlier F_j",
))


def _f13_lhs(p):
    n, i, t = p["n"], p["i"], p["t"]
    total = 0
    for j in range(1, n + 1):
        for r in range(i, (j - 1) // 2 + 1):
            head = B(n, j) * B(j - 1 - r, r) * B(r, i)
            if not head:
                continue
            for k in range(j - 2 * r):
                tail = B(j - 1 - 2 * r, k) * B(r - i, j - k - r + i - n + t)
                if tail:
                    total += head * tail * sign_pow(r + t + j + n + i) * 2**k
    return total


def _f13_rhs(p):
    n, i, t = p["n"], p["i"], p["t"]
    return B(n - 1 - i, i) if t == 0 else 0


def _f13_domain(size, rng):
    for n in range(1, size + 1):
        for i in range((n - 1) // 2 + 1):
            for t in range(n + 1):
                yield {"n": n, "i": i, "t": t}


register(FamilyDescriptor(
    id="F13",
    title="five-fold binomial sum equal to C(n-1-i, i) at t = 0 and 0 otherwise",
    anchor="binomial convolution from the commuting split at m = 0",
    statement=(
        "sum_j sum_{r>=i} sum_k C(n,j) C(j-1-r,r) C(j-1-2r,k) C(r,i) C(r-i, j-k-r+i-n+t) "
        "(-1)^(r+t+j+n+i) 2^k = C(n-1-i,i) [t = 0]"
    ),
    mode="numeric",
    param_spec={"n": (int, "1..size"), "i": (int, "0..floor((n-1)/2)"), "t": (int, "0..n")},
    size_param="n",
    default_size=12,
    domain=_f13_domain,
    lhs=_f13_lhs,
    rhs=_f13_rhs,
    in_domain=lambda p: 0 <= p["i"] <= (p["n"] - 1) // 2 and 0 <= p["t"] <= p["n"],
    paths="lhs: five-fold sum; rhs: single binomial times indicator",
))


# -- product split A = (A + gI)(gA + DI) / (g^2 + Tg + D) ------------------------------


def _f14_lhs(p):
    A = _abcd(p)
    n, m = p["n"], p["m"]
    T, D = A.trace(), A.det()
    s = 0
    for j in range(n + 1):
        coeff = B(n, j) * B(j, m - j)
        if coeff:
            s += coeff * _zpow(D, n - j) * _zpow(T, 2 * j - m)
    return (pow_naive(A, n) * s).normalized()


def _paired_terms(n, m):
    """``(r, C(n,(r-m+n)/2) C(n,(r+m-n)/2))`` for ``r + m + n`` even, nonzero weights only."""
    for r in range(2 * n + 1):
        if (r + m + n) % 2:
            continue
        w = B(n, (r - m + n) // 2) * B(n, (r + m - n) // 2)
        if w:
            yield r, w


def _f14_rhs(p):
    a, b, c, d, n, m = p["a"], p["b"], p["c"], p["d"], p["n"], p["m"]
    D = a * d - b * c
    total = Mat2(0, 0, 0, 0)
    for r, w in _paired_terms(n, m):
        total = total + _binary_power(a, b, c, d, r) * (w * _zpow(D, (3 * n - r - m) // 2))
    return total.normalized()


register(FamilyDescriptor(
    id="F14",
    title="matrix identity from comparing powers of g in the product split",
    anchor="A^n expanded through the factorisation A proportional to (A + gI)(gA + DI)",
    statement=(
        "A^n sum_j C(n,j) C(j,m-j) D^(n-j) T^(2j-m) = sum_{r: r+m+n even} "
        "C(n,(r-m+n)/2) C(n,(r+m-n)/2) D^((3n-r-m)/2) A^r"
    ),
    mode="matrix",
    param_spec={**_abcd_spec(F14_SAMPLES, True), "n": (int, "1..size"), "m": (int, "0..2n")},
    size_param="n",
    default_size=10,
    domain=_sampled_domain(F14_SAMPLES, nonsingular=True, with_m=True),
    lhs=_f14_lhs,
    rhs=_f14_rhs,
    in_domain=lambda p: p["n"] >= 1 and 0 <= p["m"] <= 2 * p["n"]
    and p["a"] * p["d"] - p["b"] * p["c"] != 0,
    paths="lhs: pow_naive(A, n) times a scalar sum; rhs: combination of pow_binary(A, r)",
    clearing=(
        "none needed: every nonzero term has r + m <= 3n, so D^((3n-r-m)/2) has a "
        "nonnegative exponent; negative exponents would be applied exactly as rationals"
    ),
))


def _f15_lhs(p):
    n, m, w = p["n"], p["m"], p["w"]
    return sum(
        B(n - 1 - k, k) * B(n, w + k) * B(k + w, m - k - w) * sign_pow(k) for k in range(n)
    )


def _f15_rhs(p):
    n, m, w = p["n"], p["m"], p["w"]
    return sum(
        B(n, k + w) * B(n, n + k + w - m) * B(k + n + 2 * w - m - 1, k) * sign_pow(k)
        for k in range(-2 * w - n + m + 1, m - w + 1)
    )


def _f15_domain(size, rng):
    for n in range(1, size + 1):
        for m in range(2 * n + 1):
            for w in range(-n, n + 1):
                yield {"n": n, "m": m, "w": w}


register(FamilyDescriptor(
    id="F15",
    title="window-sum binomial identity in (n, m, w)",
    anchor="window-sum from the product split; non-trivial only for m/2 - floor((n-1)/2) <= w <= m",
    statement=(
        "sum_{k=0}^{n-1} C(n-1-k,k) C(n,w+k) C(k+w,m-k-w) (-1)^k = "
        "sum_{k=m+1-n-2w}^{m-w} C(n,k+w) C(n,n+k+w-m) C(k+n+2w-m-1,k) (-1)^k"
    ),
    mode="numeric",
    param_spec={"n": (int, "1..size"), "m": (int, "0..2n"), "w": (int, "-n..n")},
    size_param="n",
    default_size=14,
    domain=_f15_domain,
    lhs=_f15_lhs,
    rhs=_f15_rhs,
    in_domain=lambda p: p["n"] >= 1 and 0 <= p["m"] <= 2 * p["n"] and -p["n"] <= p["w"] <= p["n"],
    paths="lhs: sum over k in [0, n-1]; rhs: sum over the shifted window",
))


def _nm_domain(size, rng):
    for n in range(1, size + 1):
        for m in range(2 * n + 1):
            yield {"n": n, "m": m}


def _nm_in_domain(p):
    return p["n"] >= 1 and 0 <= p["m"] <= 2 * p["n"]


def _trinomial_sum(n, m, weight):
    s = 0
    for j in range(n + 1):
        coeff = B(n, j) * B(j, m - j)
        if coeff:
            s += coeff * weight(j)
    return normalize(s)


def _f16_lhs(p):
    n, m = p["n"], p["m"]
    return _trinomial_sum(n, m, lambda j: _zpow(2, 2 * j - m))


def _f16_rhs(p):
    return sum(w for _, w in _paired_terms(p["n"], p["m"]))


def _f17_lhs(p):
    n, m = p["n"], p["m"]
    return (n + 1) * _trinomial_sum(n, m, lambda j: _zpow(2, 2 * j - m))


def _f17_rhs(p):
    return sum(w * (r + 1) for r, w in _paired_terms(p["n"], p["m"]))


def _f18_lhs(p):
    n, m = p["n"], p["m"]
    return (2 ** (n + 1) - 1) * _trinomial_sum(
        n, m, lambda j: 2 ** (n - j) * _zpow(3, 2 * j - m)
    )


def _f18_rhs(p):
    n, m = p["n"], p["m"]
    return normalize(sum(
        w * _zpow(2, (3 * n - r - m) // 2) * (2 ** (r + 1) - 1)
        for r, w in _paired_terms(n, m)
    ))


def _f19_lhs(p):
    n, m = p["n"], p["m"]
    return fibonacci(n + 2) * _trinomial_sum(n, m, lambda j: sign_pow(m + j))


def _f19_rhs(p):
    n, m = p["n"], p["m"]
    return sum(
        w * sign_pow((-n + r - m) // 2) * fibonacci(r + 2) for r, w in _paired_terms(n, m)
    )


_PRODUCT_SPLIT_ANCHOR = "(1,1) entries of the product-split identity at a fixture matrix"

for _fid, _title, _stmt, _lhs, _rhs, _fixture in (
    ("F16", "trinomial-type sum with 2^(2j-m), from I^n = I",
     "sum_j C(n,j) C(j,m-j) 2^(2j-m) = sum_{r+m+n even} C(n,(r-m+n)/2) C(n,(r+m-n)/2)",
     _f16_lhs, _f16_rhs, "identity"),
    ("F17", "weighted by (r+1), from [[2,1],[-1,0]]^n",
     "(n+1) sum_j C(n,j) C(j,m-j) 2^(2j-m) = sum_{r+m+n even} C(n,(r-m+n)/2) C(n,(r+m-n)/2) (r+1)",
     _f17_lhs, _f17_rhs, "nilpotent-shift"),
    ("F18", "weighted by 2^(r+1)-1, from [[3,1],[-2,0]]^n",
     "(2^(n+1)-1) sum_j C(n,j) C(j,m-j) 2^(n-j) 3^(2j-m) = sum_{r+m+n even} "
     "C(n,(r-m+n)/2) C(n,(r+m-n)/2) 2^((3n-r-m)/2) (2^(r+1)-1)",
     _f18_lhs, _f18_rhs, "doubling"),
    ("F19", "Fibonacci-weighted, from [[-2,-1],[1,1]]^n",
     "F_(n+2) sum_j C(n,j) C(j,m-j) (-1)^(m+j) = sum_{r+m+n even} "
     "C(n,(r-m+n)/2) C(n,(r+m-n)/2) (-1)^((-n+r-m)/2) F_(r+2)",
     _f19_lhs, _f19_rhs, "fib-sign"),
):
    register(FamilyDescriptor(
        id=_fid,
        title=_title,
        anchor=f"{_PRODUCT_SPLIT_ANCHOR} ({_fixture})",
        statement=_stmt,
        mode="numeric",
        param_spec={"n": (int, "1..size"), "m": (int, "0..2n")},
        size_param="n",
        default_size=20,
        domain=_nm_domain,
        lhs=_lhs,
        rhs=_rhs,
        in_domain=_nm_in_domain,
        paths="lhs: sum over j; rhs: parity-restricted sum over r",
    ))


def _f20_lhs(p):
    n = p["n"]
    return fibonacci(n) * int_pow(_g * _g + _g - 1, n) * int_pow(_g, n)


def _f20_rhs(p):
    n = p["n"]
    coeffs: dict[int, int] = {}
    for r in range(2 * n + 1):
        fr = fibonacci(r)
        if not fr:
            continue
        for i in range(max(0, r - n), min(r, n) + 1):
            e = 2 * n + r - 2 * i
            coeffs[e] = coeffs.get(e, 0) + B(n, i) * B(n, r - i) * sign_pow(r + i) * fr
    total = Poly({((("g", e),) if e else ()): c for e, c in coeffs.items()})
    return sign_pow(n) * total


register(FamilyDescriptor(
    id="F20",
    title="F_n as a rational function of a free parameter g",
    anchor="F_n through the product split, rational in g away from 0, -phi, 1/phi",
    statement=(
        "F_n = (-g/(g^2+g-1))^n sum_{r=0}^{2n} sum_i C(n,i) C(n,r-i) (-1)^(r+i) g^(r-2i) F_r"
    ),
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=14,
    domain=_n_domain(),
    lhs=_f20_lhs,
    rhs=_f20_rhs,
    in_domain=_n_positive,
    paths="lhs: F_n times the clearing factor as a polynomial; rhs: collected powers of g",
    clearing="both sides multiplied by (g^2+g-1)^n g^n",
))


# -- particular matrices -----------------------------------------------------------------


def _n_identity(p):
    return p["n"]


def _f21_rhs(p):
    n = p["n"]
    return sum(B(n - 1 - i, i) * 2 ** (n - 1 - 2 * i) * sign_pow(i) for i in range((n - 1) // 2 + 1))


register(FamilyDescriptor(
    id="F21",
    title="n from the matrix [[2,1],[-1,0]] with both eigenvalues 1",
    anchor="power of a matrix with the repeated eigenvalue 1",
    statement="n = sum_i C(n-1-i,i) 2^(n-1-2i) (-1)^i",
    mode="numeric",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=60,
    domain=_n_domain(),
    lhs=_n_identity,
    rhs=_f21_rhs,
    in_domain=_n_positive,
    paths="lhs: n; rhs: binomial sum",
))


def _f22_rhs(p):
    n, s = p["n"], p["s"]
    return sum(B(s, k) * B(n - k - 1, s - 1) * sign_pow(k) for k in range(s + 1))


def _ns_domain(size, rng):
    for n in range(1, size + 1):
        for s in range(n):
            yield {"n": n, "s": s}


register(FamilyDescriptor(
    id="F22",
    title="alternating sum of C(s,k) C(n-k-1, s-1) vanishes",
    anchor="coefficients of i^s j^(n-s) in the power of diag(i, j)",
    statement="sum_{k>=0} C(s,k) C(n-k-1,s-1) (-1)^k = 0 for 0 <= s <= n-1",
    mode="numeric",
    param_spec={"n": (int, "1..size"), "s": (int, "0..n-1")},
    size_param="n",
    default_size=40,
    domain=_ns_domain,
    lhs=lambda p: 0,
    rhs=_f22_rhs,
    in_domain=lambda p: 0 <= p["s"] <= p["n"] - 1,
    paths="lhs: 0; rhs: the alternating sum",
))


def _f23_lhs(p):
    n, s, k = p["n"], p["s"], p["k"]
    return B(n - k, k) * B(n - 2 * k, s - k) - B(n - 1 - k, k) * B(n - 1 - 2 * k, s - k)


def _f23_rhs(p):
    n, s, k = p["n"], p["s"], p["k"]
    return B(s, k) * B(n - k - 1, s - 1)


def _nsk_domain(size, rng):
    for n in range(1, size + 1):
        for s in range(n):
            for k in range(s + 1):
                yield {"n": n, "s": s, "k": k}


register(FamilyDescriptor(
    id="F23",
    title="binomial lemma: difference of two products equals C(s,k) C(n-k-1,s-1)",
    anchor="binomial difference lemma used by the diag(i, j) expansion",
    statement="C(n-k,k) C(n-2k,s-k) - C(n-1-k,k) C(n-1-2k,s-k) = C(s,k) C(n-k-1,s-1)",
    mode="numeric",
    param_spec={"n": (int, "1..size"), "s": (int, "0..n-1"), "k": (int, "0..s")},
    size_param="n",
    default_size=30,
    domain=_nsk_domain,
    lhs=_f23_lhs,
    rhs=_f23_rhs,
    in_domain=lambda p: 0 <= p["k"] <= p["s"] <= p["n"] - 1,
    paths="lhs: difference of products; rhs: single product",
))


def _f24_lhs(p):
    A = _abcd(p)
    n = p["n"]
    T, D = A.trace(), A.det()
    factor = int_pow(_g * _g + T * _g + D, n)
    return pow_naive(A, n).map(lambda x: factor * x)


def _f24_rhs(p):
    a, b, c, d, n = p["a"], p["b"], p["c"], p["d"], p["n"]
    D = a * d - b * c
    total = Mat2(Poly(), Poly(), Poly(), Poly())
    for r in range(2 * n + 1):
        weight: dict = {}
        for i in range(max(0, r - n), min(r, n) + 1):
            e = n + r - 2 * i
            weight[e] = weight.get(e, 0) + B(n, i) * B(n, r - i) * D ** (n + i - r)
        w = Poly({((("g", e),) if e else ()): v for e, v in weight.items()})
        total = total + _binary_power(a, b, c, d, r).map(lambda x: w * x)
    return total


register(FamilyDescriptor(
    id="F24",
    title="A^n as a polynomial combination of A^0..A^(2n) in a free parameter g",
    anchor="product split raised to the n-th power for nonsingular A",
    statement=(
        "A^n = (gD/(g^2+Tg+D))^n sum_{r=0}^{2n} sum_i C(n,i) C(n,r-i) (D/g^2)^i (g/D)^r A^r"
    ),
    mode="matrix",
    param_spec={**_abcd_spec(F24_SAMPLES, True), "n": (int, "1..size")},
    size_param="n",
    default_size=8,
    domain=_sampled_domain(F24_SAMPLES, nonsingular=True),
    lhs=_f24_lhs,
    rhs=_f24_rhs,
    in_domain=lambda p: p["n"] >= 1 and p["a"] * p["d"] - p["b"] * p["c"] != 0,
    paths="lhs: pow_naive(A, n) times the clearing polynomial; rhs: pow_binary(A, r) combination",
    clearing="both sides multiplied by (g^2+Tg+D)^n; the rhs then has the exponents "
    "D^(n+i-r) and g^(n+r-2i), both nonnegative",
))


# -- polynomial families ----------------------------------------------------------------

_c, _s = Poly.var("c"), Poly.var("s")


def _chebyshev_recurrence(n):
    """``(T_n(c), U_{n-1}(c))`` from the three-term recurrence, independent of matrix powers."""
    t_prev, t_cur = Poly(1), _c
    u_prev, u_cur = Poly(0), Poly(1)  # U_{-1}, U_0
    for _ in range(n - 1):
        t_prev, t_cur = t_cur, 2 * _c * t_cur - t_prev
        u_prev, u_cur = u_cur, 2 * _c * u_cur - u_prev
    return t_cur, u_cur


def _f25_lhs(p):
    P = rotation_power(p["n"])
    norm = (P.a * P.a + P.b * P.b).reduce_sin_cos("s", "c")
    return {"power": P, "cos^2+sin^2": norm}


def _f25_rhs(p):
    t, u = _chebyshev_recurrence(p["n"])
    return {"power": Mat2(t, _s * u, -_s * u, t), "cos^2+sin^2": Poly(1)}


register(FamilyDescriptor(
    id="F25",
    title="rotation matrix powers give Chebyshev polynomials",
    anchor="cos and sin of n theta from the rotation matrix without De Moivre",
    statement=(
        "[[c, s], [-s, c]]^n = [[T_n(c), s U_(n-1)(c)], [-s U_(n-1)(c), T_n(c)]] mod s^2 + c^2 - 1"
    ),
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=16,
    domain=_n_domain(),
    lhs=_f25_lhs,
    rhs=_f25_rhs,
    in_domain=_n_positive,
    paths="lhs: trace/determinant closed form reduced mod s^2 = 1 - c^2; rhs: Chebyshev recurrences",
))


def _f26_lhs(p):
    m, x1, y1, n = p["m"], p["x1"], p["y1"], p["n"]
    P = theorem1_power(Mat2(x1, m * y1, y1, x1), n)
    return {
        "x": P.a,
        "y": P.c,
        "shape": P.a == P.d and P.b == m * P.c,
        "norm": P.a * P.a - m * P.c * P.c,
    }


def _f26_rhs(p):
    # (x1 + y1 sqrt(m))^n expanded in Z[sqrt(m)]
    m, x1, y1, n = p["m"], p["x1"], p["y1"], p["n"]
    x = sum(B(n, k) * x1 ** (n - k) * y1**k * m ** (k // 2) for k in range(0, n + 1, 2))
    y = sum(B(n, k) * x1 ** (n - k) * y1**k * m ** (k // 2) for k in range(1, n + 1, 2))
    return {"x": x, "y": y, "shape": True, "norm": 1}


def _f26_domain(size, rng):
    for m, x1, y1 in PELL_SEEDS:
        for n in range(1, size + 1):
            yield {"m": m, "x1": x1, "y1": y1, "n": n}


register(FamilyDescriptor(
    id="F26",
    title="Pell solutions from powers of [[x1, m y1], [y1, x1]]",
    anchor="solutions of the Pell equation x^2 - m y^2 = 1 from powers of [[x1, m y1], [y1, x1]]",
    statement="[[x1, m y1], [y1, x1]]^n = [[x_n, m y_n], [y_n, x_n]], x_n^2 - m y_n^2 = 1",
    mode="numeric",
    param_spec={
        "m": (int, "(m, x1, y1) in (2,3,2), (3,2,1), (5,9,4)"),
        "x1": (int, ""),
        "y1": (int, ""),
        "n": (int, "1..size"),
    },
    size_param="n",
    default_size=12,
    domain=_f26_domain,
    lhs=_f26_lhs,
    rhs=_f26_rhs,
    in_domain=lambda p: p["n"] >= 1 and p["x1"] ** 2 - p["m"] * p["y1"] ** 2 == 1,
    paths="lhs: trace/determinant closed form; rhs: binomial expansion of (x1 + y1 sqrt m)^n",
))


_x1, _y1, _t = Poly.var("x1"), Poly.var("y1"), Poly.var("t")


def _f27_lhs(p):
    P = theorem1_power(Mat2(_x1, _y1, _t * _y1, _x1), p["n"])
    return {"power": P, "norm": P.a * P.a - _t * P.b * P.b}


def _f27_rhs(p):
    n = p["n"]
    xn, yn = brahmagupta_pair(n)
    return {"power": Mat2(xn, yn, _t * yn, xn), "norm": int_pow(_x1 * _x1 - _t * _y1 * _y1, n)}


register(FamilyDescriptor(
    id="F27",
    title="Brahmagupta polynomials and their norm x_n^2 - t y_n^2",
    anchor="Brahmagupta polynomials from powers of [[x1, y1], [t y1, x1]]",
    statement="x_n^2 - t y_n^2 = (x1^2 - t y1^2)^n with [[x_n, y_n], [t y_n, x_n]] = [[x1, y1], [t y1, x1]]^n",
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=8,
    domain=_n_domain(),
    lhs=_f27_lhs,
    rhs=_f27_rhs,
    in_domain=_n_positive,
    paths="lhs: trace/determinant closed form and its norm; rhs: pow_naive entries and a polynomial power",
))


def _morgan_voyce_recurrence(n):
    big = [Poly(0), Poly(1)]  # B_{-1}, B_0
    small = [Poly(1), _x + 1]  # b_0, b_1
    for _ in range(n):
        big.append((_x + 2) * big[-1] - big[-2])
    while len(small) <= n:
        small.append((_x + 2) * small[-1] - small[-2])
    # big[k + 1] = B_k
    return big[n + 1], big[n], big[n - 1], small[n]


def _f28_lhs(p):
    n = p["n"]
    Bn, bn = morgan_voyce(n)
    return {"B": Bn, "b": bn, "power": theorem1_power(Mat2(_x + 2, Poly(-1), Poly(1), Poly(0)), n)}


def _f28_rhs(p):
    Bn, Bm, Bmm, bn = _morgan_voyce_recurrence(p["n"])
    return {"B": Bn, "b": bn, "power": Mat2(Bn, -Bm, Bm, -Bmm)}


register(FamilyDescriptor(
    id="F28",
    title="Morgan-Voyce polynomials B_n, b_n from powers of [[x+2, -1], [1, 0]]",
    anchor="Morgan-Voyce polynomials with b_n = B_n - B_(n-1)",
    statement=(
        "[[x+2, -1], [1, 0]]^n = [[B_n, -B_(n-1)], [B_(n-1), -B_(n-2)]], "
        "B_n = (x+2) B_(n-1) - B_(n-2), b_n = B_n - B_(n-1)"
    ),
    mode="symbolic",
    param_spec={"n": (int, "1..size")},
    size_param="n",
    default_size=16,
    domain=_n_domain(),
    lhs=_f28_lhs,
    rhs=_f28_rhs,
    in_domain=_n_positive,
    paths=(
        "lhs: pow_naive entries and the trace/determinant closed form; "
        "rhs: three-term recurrences with B_(-1) = 0, B_0 = 1, b_0 = 1, b_1 = x+1"
    ),
))


def _f29_lhs(p):
    return fixture_power(p["fixture"], p["n"])


def _f29_rhs(p):
    return pow_naive(FIXTURES[p["fixture"]], p["n"])


def _f29_domain(size, rng):
    for name in FIXTURES:
        for n in range(1, size + 1):
            yield {"fixture": name, "n": n}


register(FamilyDescriptor(
    id="F29",
    title="closed-form powers of the four fixture matrices",
    anchor="closed-form powers of the four fixture matrices",
    statement=(
        "I^n = I; [[2,1],[-1,0]]^n = [[n+1, n], [-n, -n+1]]; "
        "[[3,1],[-2,0]]^n = [[2^(n+1)-1, 2^n-1], [-2^(n+1)+2, -2^n+2]]; "
        "[[-2,-1],[1,1]]^n = (-1)^n [[F_(n+2), F_n], [-F_n, -F_(n-2)]]"
    ),
    mode="matrix",
    param_spec={"fixture": (str, ", ".join(FIXTURES)), "n": (int, "1..size")},
    size_param="n",
    default_size=20,
    domain=_f29_domain,
    lhs=_f29_lhs,
    rhs=_f29_rhs,
    in_domain=lambda p: p["fixture"] in FIXTURES and p["n"] >= 1,
    paths="lhs: printed closed form (F_(-1) = 1 at n = 1); rhs: pow_naive",
))
