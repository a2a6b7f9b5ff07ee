"""Acceptance gate: seven exact checks, each printing one PASS/FAIL line."""
import dataclasses
import io
import json
import random
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

import pytest

from matpow.cli import main
from matpow.closed_form import theorem1_power, williams_power, y_explicit, z_explicit
from matpow.exact import binomial as B, sign_pow
from matpow.identities import get_family, lhs_rhs, verify_family
from matpow.mat2 import Mat2, pow_binary, pow_naive
from matpow.poly import variables
from matpow.sequences import fixture_power

ACCEPTANCE_SEED = 20240613


@pytest.fixture
def report(capsys):
    def emit(number, name, ok, detail, elapsed):
        with capsys.disabled():
            status = "PASS" if ok else "FAIL"
            print(f"\n[criterion {number}] {status} {name}: {detail} ({elapsed:.2f} s)")
        return ok

    return emit


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue()


def test_1_oracle_equivalence(report):
    rng = random.Random(ACCEPTANCE_SEED)
    mats = [Mat2(*(rng.randint(-9, 9) for _ in range(4))) for _ in range(300)]
    t0 = time.perf_counter()
    mismatches = checked = 0
    for A in mats:
        for n in range(1, 26):
            ref = pow_naive(A, n)
            for method in (theorem1_power, williams_power, pow_binary):
                checked += 1
                mismatches += method(A, n) != ref
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 5
    report(1, "oracle equivalence", ok, f"{checked} comparisons, {mismatches} mismatches", elapsed)
    assert mismatches == 0
    assert elapsed < 5


def test_2_symbolic_trace_determinant_form(report):
    a, b, c, d = variables("a", "b", "c", "d")
    A = Mat2(a, b, c, d)
    t0 = time.perf_counter()
    nonzero = [n for n in range(1, 9) if not (theorem1_power(A, n) - pow_naive(A, n)).is_zero()]
    elapsed = time.perf_counter() - t0
    ok = not nonzero and elapsed < 10
    report(2, "symbolic power formula", ok, f"n = 1..8, nonzero differences at {nonzero}", elapsed)
    assert nonzero == []
    assert elapsed < 10


def test_3_bridge(report):
    T, D = variables("T", "D")
    t0 = time.perf_counter()
    bad = [n for n in range(1, 41) if not (y_explicit(T, D, n - 1) - z_explicit(T, D, n)).is_zero()]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 5
    report(3, "y_(n-1) = z_n bridge", ok, f"n = 1..40, nonzero at {bad}", elapsed)
    assert bad == []
    assert elapsed < 5


def test_4_full_identity_sweep(report):
    t0 = time.perf_counter()
    code, out = cli("verify", "--family", "all", "--format", "json")
    elapsed = time.perf_counter() - t0
    reports = {r["id"]: r for r in json.loads(out)}
    failures = sum(len(r["failures"]) for r in reports.values())
    instances = sum(r["instances"] for r in reports.values())
    sizes = {fid: reports[fid]["instances"] for fid in ("F03", "F04", "F21", "F11", "F08", "F20", "F27")}
    ok = code == 0 and len(reports) == 29 and failures == 0 and elapsed < 120
    report(4, "full identity sweep", ok,
           f"{len(reports)} families, {instances} instances, {failures} failures, exit {code}", elapsed)
    assert code == 0
    assert len(reports) == 29 and failures == 0
    assert sizes == {"F03": 60, "F04": 60, "F21": 60, "F11": 20, "F08": 18, "F20": 14, "F27": 8}
    # F01/F02 over all j up to n = 40
    expected_nj = sum((n - 1) // 2 for n in range(1, 41))
    assert reports["F01"]["instances"] == reports["F02"]["instances"] == expected_nj
    assert reports["F07"]["instances"] == sum(range(1, 26))
    assert reports["F15"]["instances"] == sum((2 * n + 1) ** 2 for n in range(1, 15))
    assert elapsed < 120


def test_5_spot_values(report):
    t0 = time.perf_counter()
    numerator = sum(B(5, 2 * m + 1) * 5**m for m in range(3))
    checks = {
        "F_5 halving numerator 80/16": numerator == 80 and Fraction(numerator, 2**4) == z_explicit(1, -1, 5) == 5,
        "C(5,3) = 12 - 2": lhs_rhs("F01", {"n": 5, "j": 1}) == ("10", "10") and 12 - 2 == B(5, 3),
        "(2,1;-1,0)^7": fixture_power("nilpotent-shift", 7) == Mat2(8, 7, -7, -6)
        == pow_naive(Mat2(2, 1, -1, 0), 7),
        "F06 imaginary parts": all(get_family("F06").rhs({"k": k}).im == 0 for k in range(1, 31)),
    }
    elapsed = time.perf_counter() - t0
    failed = [k for k, v in checks.items() if not v]
    report(5, "spot values", not failed, f"{len(checks)} values, failing: {failed}", elapsed)
    assert failed == []


def _strip_elapsed(reports):
    for r in reports:
        r.pop("elapsed_ms")
        for f in r["failures"]:
            f.pop("elapsed_ms")
    return reports


def test_6_determinism(report):
    t0 = time.perf_counter()
    runs = [cli("verify", "--family", "all", "--seed", str(ACCEPTANCE_SEED)) for _ in range(2)]
    elapsed = time.perf_counter() - t0
    first, second = (_strip_elapsed(json.loads(out)) for _, out in runs)
    same = json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    report(6, "determinism", same, "two seeded full runs, reports identical apart from timing", elapsed)
    assert same


def _f15_rhs_off_by_one(p):
    n, m, w = p["n"], p["m"], p["w"]
    return sum(
        B(n, k + w) * B(n, n + k + w - m) * B(k + n + 2 * w - m, k) * sign_pow(k)
        for k in range(-2 * w - n + m + 1, m - w + 1)
    )


def test_7_harness_sensitivity(report):
    perturbed = dataclasses.replace(get_family("F15"), rhs=_f15_rhs_off_by_one)
    t0 = time.perf_counter()
    rep = verify_family(perturbed)
    elapsed = time.perf_counter() - t0
    ok = bool(rep.failures)
    report(7, "harness sensitivity", ok,
           f"perturbed F15: {len(rep.failures)} of {rep.instances} instances fail", elapsed)
    assert rep.failures
