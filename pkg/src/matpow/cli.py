"""Command-line interface: ``power``, ``verify``, ``list`` and ``seq``.

Exit codes: 0 success, 1 verification failures, 2 usage/parse error or unknown
family, 3 matrix without rational eigenvalues (``--method eigen``), 4 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .closed_form import (
    NonRationalEigenvalueError,
    sequence_for,
    theorem1_power,
    williams_eigen_power,
    williams_power,
)
from .exact import parse_scalar
from .identities import (
    DEFAULT_SEED,
    UnknownFamilyError,
    get_family,
    list_families,
    render,
    verify_family,
)
from .mat2 import identity, parse_matrix, pow_binary, pow_naive
from .sequences import (
    FIXTURES,
    brahmagupta_pair,
    chebyshev_pair,
    fibonacci,
    fixture_power,
    lucas,
    morgan_voyce,
    pell_pair,
)

SEED_ENV = "MATPOW_SEED"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_EIGEN, EXIT_IO = 0, 1, 2, 3, 4

METHODS = {
    "naive": pow_naive,
    "binary": pow_binary,
    "theorem1": theorem1_power,
    "williams": williams_power,
    "eigen": williams_eigen_power,
}


@dataclass
class RunConfig:
    families: list[str] = field(default_factory=lambda: ["all"])
    n_max: dict[str, int] = field(default_factory=dict)
    seed: int = DEFAULT_SEED
    format: str = "json"
    output: str | None = None
    jobs: int = 1
    include_extensions: bool = False

    def resolve(self) -> list[str]:
        """Expand ``all`` and reject unknown ids before any work is done."""
        ids: list[str] = []
        for f in self.families:
            if f.lower() == "all":
                ids.extend(d.id for d in list_families())
            else:
                ids.append(get_family(f).id)
        for key in self.n_max:
            if key != "*":
                get_family(key)
        return sorted(set(ids))

    def size_for(self, fid: str) -> int | None:
        return self.n_max.get(fid, self.n_max.get("*"))


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError:
        raise SystemExit(f"{SEED_ENV}={raw!r} is not an integer")


def _run_one(args: tuple) -> dict:
    fid, size, seed, ext = args
    return verify_family(fid, size, seed, include_extensions=ext).to_dict()


def run_verify(cfg: RunConfig) -> list[dict]:
    ids = cfg.resolve()
    work = [(fid, cfg.size_for(fid), cfg.seed, cfg.include_extensions) for fid in ids]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_run_one, work))
    else:
        reports = [_run_one(w) for w in work]
    return sorted(reports, key=lambda r: r["id"])


def format_reports(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(reports, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "instances", "failures", "elapsed_ms"])
        for r in reports:
            w.writerow([r["id"], r["instances"], len(r["failures"]), r["elapsed_ms"]])
        return buf.getvalue()
    lines = []
    for r in reports:
        status = "ok" if not r["failures"] else "FAIL"
        lines.append(
            f"{r['id']}  {status:4}  {r['instances']:6d} instances  "
            f"{len(r['failures']):4d} failures  {r['elapsed_ms']:10.1f} ms  {r['title']}"
        )
        for f in r["failures"][:5]:
            lines.append(f"      {f['params']}: lhs={f['lhs']} rhs={f['rhs']}")
    total = sum(r["instances"] for r in reports)
    bad = sum(len(r["failures"]) for r in reports)
    lines.append(f"{len(reports)} families, {total} instances, {bad} failures")
    return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- subcommands ----------------------------------------------------------------------


def cmd_power(args) -> int:
    try:
        A = parse_matrix(args.matrix)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.n < 0:
        print("error: --n must be nonnegative", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.n == 0:
            result = identity()
        else:
            result = METHODS[args.method](A, args.n)
    except NonRationalEigenvalueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EIGEN
    except TypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EIGEN
    print(f"{render(result.a)} {render(result.b)}")
    print(f"{render(result.c)} {render(result.d)}")
    return EXIT_OK


def _parse_n_max(values: list[str]) -> dict[str, int]:
    out: dict[str, int] = {}
    for v in values or []:
        key, sep, num = v.partition("=")
        if not sep:
            key, num = "*", v
        bound = int(num)
        if bound < 0:
            raise ValueError(f"negative bound in {v!r}")
        out[key if key == "*" else key.upper()] = bound
    return out


def cmd_verify(args) -> int:
    families = []
    for f in args.family or ["all"]:
        families.extend(x for x in f.split(",") if x)
    try:
        n_max = _parse_n_max(args.n_max)
    except ValueError as exc:
        print(f"error: bad --n-max: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cfg = RunConfig(
        families=families,
        n_max=n_max,
        seed=args.seed if args.seed is not None else default_seed(),
        format=args.format,
        output=args.output,
        jobs=args.jobs,
        include_extensions=args.include_extensions,
    )
    try:
        cfg.resolve()
    except UnknownFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = run_verify(cfg)
    text = format_reports(reports, cfg.format)
    if cfg.output:
        try:
            write_atomic(cfg.output, text)
        except OSError as exc:
            print(f"error: cannot write {cfg.output}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    failed = any(r["failures"] for r in reports)
    if cfg.output or cfg.format != "text":
        total = sum(r["instances"] for r in reports)
        bad = sum(len(r["failures"]) for r in reports)
        print(f"{len(reports)} families, {total} instances, {bad} failures", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_list(args) -> int:
    for d in list_families():
        print("\t".join((d.id, d.mode, d.title, d.anchor, d.domain_text())))
    return EXIT_OK


def cmd_seq(args) -> int:
    kind, n = args.kind, args.n
    try:
        if kind == "fibonacci":
            print(fibonacci(n))
        elif kind == "lucas":
            print(lucas(n))
        elif kind == "morgan-voyce":
            big, small = morgan_voyce(n)
            print(f"B_{n} = {big}")
            print(f"b_{n} = {small}")
        elif kind == "chebyshev":
            cos_n, sin_n = chebyshev_pair(n)
            print(f"cos({n}t) = {cos_n}")
            print(f"sin({n}t)/sin(t) = {sin_n}")
        elif kind == "brahmagupta":
            x, y = brahmagupta_pair(n)
            print(f"x_{n} = {x}")
            print(f"y_{n} = {y}")
        elif kind == "pell":
            x, y = pell_pair(args.m, args.x1, args.y1, n)
            print(f"{x} {y}")
        elif kind == "fixture":
            print(fixture_power(args.name, n))
        elif kind == "yz":
            T, D = parse_scalar(args.T), parse_scalar(args.D)
            seq = sequence_for(T, D)
            for k in range(n + 1):
                print(f"{k} y={render(seq.y(k))} z={render(seq.z(k))}")
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matpow",
        description="Exact 2x2 matrix powers and verification of the identities they generate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("power", help="compute A^n by a chosen method")
    p.add_argument("--matrix", required=True, help="entries a,b,c,d (integers or p/q)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=sorted(METHODS), default="theorem1")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("verify", help="sweep identity families and report")
    p.add_argument("--family", action="append",
                   help="family id, comma list, or 'all' (repeatable; default all)")
    p.add_argument("--n-max", action="append", metavar="[ID=]N",
                   help="bound for the size parameter, for all families or one id")
    p.add_argument("--seed", type=lambda s: int(s, 0), default=None,
                   help=f"sampling seed (default ${SEED_ENV} or {DEFAULT_SEED})")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    p.add_argument("--jobs", "-j", type=int, default=1)
    p.add_argument("--include-extensions", action="store_true",
                   help="also sweep observed extensions beyond the stated domains")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("list", help="list identity families")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("seq", help="print reference sequence values")
    p.add_argument("kind", choices=(
        "fibonacci", "lucas", "morgan-voyce", "chebyshev", "brahmagupta", "pell", "fixture", "yz",
    ))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--name", choices=sorted(FIXTURES), default="nilpotent-shift")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--x1", type=int, default=3)
    p.add_argument("--y1", type=int, default=2)
    p.add_argument("--T", default="1")
    p.add_argument("--D", default="-1")
    p.set_defaults(func=cmd_seq)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
