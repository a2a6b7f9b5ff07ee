"""Time naive, binary, trace/determinant and Williams powers on seeded integer matrices."""
from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from matpow.closed_form import theorem1_power, williams_power
from matpow.mat2 import Mat2, pow_binary, pow_naive

METHODS = {
    "naive": pow_naive,
    "binary": pow_binary,
    "theorem1": theorem1_power,
    "williams": williams_power,
}


@dataclass
class BenchConfig:
    matrices: int = 50
    exponents: tuple[int, ...] = (8, 32, 128, 512)
    entry_bound: int = 9
    seed: int = 20240613
    check: bool = True


def sample(cfg: BenchConfig) -> list[Mat2]:
    rng = random.Random(cfg.seed)
    b = cfg.entry_bound
    return [Mat2(*(rng.randint(-b, b) for _ in range(4))) for _ in range(cfg.matrices)]


def run(cfg: BenchConfig) -> list[tuple[int, str, float]]:
    mats = sample(cfg)
    rows = []
    for n in cfg.exponents:
        reference = [pow_naive(A, n) for A in mats] if cfg.check else None
        for name, fn in METHODS.items():
            t0 = time.perf_counter()
            results = [fn(A, n) for A in mats]
            ms = (time.perf_counter() - t0) * 1000
            if reference is not None and results != reference:
                raise AssertionError(f"{name} disagrees with the naive product at n={n}")
            rows.append((n, name, ms))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--matrices", type=int, default=BenchConfig.matrices)
    ap.add_argument("--exponents", type=int, nargs="+", default=list(BenchConfig.exponents))
    ap.add_argument("--seed", type=int, default=BenchConfig.seed)
    ap.add_argument("--no-check", action="store_true")
    args = ap.parse_args()
    cfg = BenchConfig(args.matrices, tuple(args.exponents), seed=args.seed, check=not args.no_check)
    print(f"{'n':>6}  {'method':10}  {'total ms':>10}")
    for n, name, ms in run(cfg):
        print(f"{n:6d}  {name:10}  {ms:10.2f}")


if __name__ == "__main__":
    main()
