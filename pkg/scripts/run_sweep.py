"""Run the full identity sweep and write JSON and CSV reports plus a text summary."""
from __future__ import annotations

import argparse
import os
from dataclasses import dataclass, field

from matpow.cli import RunConfig, format_reports, run_verify, write_atomic
from matpow.identities import DEFAULT_SEED


@dataclass
class SweepConfig:
    out_dir: str = "results"
    seed: int = DEFAULT_SEED
    jobs: int = 1
    families: list[str] = field(default_factory=lambda: ["all"])
    include_extensions: bool = False


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default=SweepConfig.out_dir)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--jobs", "-j", type=int, default=1)
    ap.add_argument("--family", action="append")
    ap.add_argument("--include-extensions", action="store_true")
    args = ap.parse_args()
    cfg = SweepConfig(args.out_dir, args.seed, args.jobs, args.family or ["all"],
                      args.include_extensions)

    reports = run_verify(RunConfig(
        families=cfg.families, seed=cfg.seed, jobs=cfg.jobs,
        include_extensions=cfg.include_extensions,
    ))
    os.makedirs(cfg.out_dir, exist_ok=True)
    for fmt in ("json", "csv"):
        write_atomic(os.path.join(cfg.out_dir, f"sweep.{fmt}"), format_reports(reports, fmt))
    summary = format_reports(reports, "text")
    write_atomic(os.path.join(cfg.out_dir, "sweep.txt"), summary)
    print(summary, end="")
    raise SystemExit(1 if any(r["failures"] for r in reports) else 0)


if __name__ == "__main__":
    main()
