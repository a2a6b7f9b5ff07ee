"""Identity-family registry and the runner that sweeps families over their domains.

Each family pairs two evaluators that compute the two sides of one identity by
different routes. ``check_instance`` evaluates one parameter assignment,
``verify_family`` sweeps a whole domain and collects failures.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from ..exact import GaussianRational
from ..mat2 import Mat2
from ..poly import Poly

__all__ = [
    "DEFAULT_SEED",
    "CheckResult",
    "FamilyDescriptor",
    "FamilyReport",
    "MalformedParamsError",
    "UnknownFamilyError",
    "check_instance",
    "get_family",
    "lhs_rhs",
    "list_families",
    "register",
    "render",
    "verify_family",
]

DEFAULT_SEED = 20240613

Params = Mapping[str, Any]


class UnknownFamilyError(KeyError):
    def __str__(self):
        return f"unknown identity family: {self.args[0]}"


class MalformedParamsError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyDescriptor:
    """One identity family.

    ``param_spec`` maps each parameter name to ``(type, default domain text)``.
    ``domain(size, rng)`` yields the default sweep with the size parameter
    bounded by ``size``; ``rng`` is only consumed by families that sample
    random matrices. ``clearing`` names the factor both sides were multiplied
    by, if any, and ``paths`` says how the two sides are computed.
    """

    id: str
    title: str
    anchor: str
    statement: str
    mode: str
    param_spec: dict[str, tuple[type, str]]
    size_param: str
    default_size: int
    domain: Callable[[int, random.Random], Iterable[dict]]
    lhs: Callable[[Params], Any]
    rhs: Callable[[Params], Any]
    in_domain: Callable[[Params], bool]
    paths: str
    clearing: str = ""
    optional_params: tuple[str, ...] = ()
    extension_domain: Callable[[int], Iterable[dict]] | None = None

    def domain_text(self, size: int | None = None) -> str:
        size = self.default_size if size is None else size
        return "; ".join(
            f"{k}: {text.replace('size', str(size))}"
            for k, (_, text) in self.param_spec.items()
            if text
        )


@dataclass
class CheckResult:
    family: str
    params: dict
    lhs: str
    rhs: str
    equal: bool
    in_domain: bool = True
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "in_domain": self.in_domain,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class FamilyReport:
    id: str
    title: str
    anchor: str
    domain: str
    instances: int = 0
    failures: list[CheckResult] = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int | None = None

    @property
    def verified(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "anchor": self.anchor,
            "domain": self.domain,
            "seed": self.seed,
            "instances": self.instances,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
        }


_REGISTRY: dict[str, FamilyDescriptor] = {}


def register(desc: FamilyDescriptor) -> FamilyDescriptor:
    if desc.id in _REGISTRY:
        raise ValueError(f"duplicate family id {desc.id}")
    _REGISTRY[desc.id] = desc
    return desc


def _ensure_loaded():
    if not _REGISTRY:
        from . import families  # noqa: F401  (registers on import)


def list_families() -> list[FamilyDescriptor]:
    _ensure_loaded()
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def get_family(fid: str | FamilyDescriptor) -> FamilyDescriptor:
    if isinstance(fid, FamilyDescriptor):
        return fid
    _ensure_loaded()
    try:
        return _REGISTRY[fid.upper()]
    except KeyError:
        raise UnknownFamilyError(fid) from None


def render(value) -> str:
    """Deterministic text for scalars, polynomials, matrices and labelled tuples."""
    if isinstance(value, Mat2):
        return "[[" + ", ".join(map(render, (value.a, value.b))) + "], [" + ", ".join(
            map(render, (value.c, value.d))
        ) + "]]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {render(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (tuple, list)):
        return "(" + ", ".join(map(render, value)) + ")"
    if isinstance(value, Poly):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    if isinstance(value, (int, Fraction, GaussianRational, bool)):
        return str(value)
    raise TypeError(f"cannot render {type(value).__name__}")


def _validate(desc: FamilyDescriptor, params: Params) -> dict:
    if not isinstance(params, Mapping):
        raise MalformedParamsError(f"params must be a mapping, got {type(params).__name__}")
    allowed = set(desc.param_spec) | set(desc.optional_params)
    missing = [k for k in desc.param_spec if k not in params]
    extra = [k for k in params if k not in allowed]
    if missing or extra:
        raise MalformedParamsError(
            f"{desc.id}: missing {missing or 'nothing'}, unexpected {extra or 'nothing'}"
        )
    out = {}
    for k, v in params.items():
        kind = desc.param_spec[k][0] if k in desc.param_spec else int
        if kind is int and (isinstance(v, bool) or not isinstance(v, int)):
            raise MalformedParamsError(f"{desc.id}: parameter {k}={v!r} must be an integer")
        if kind is str and not isinstance(v, str):
            raise MalformedParamsError(f"{desc.id}: parameter {k}={v!r} must be a string")
        out[k] = v
    return out


def _evaluate(desc: FamilyDescriptor, params: Params):
    p = _validate(desc, params)
    return p, desc.lhs(p), desc.rhs(p)


def lhs_rhs(fid, params: Params) -> tuple[str, str]:
    """Both sides of one instance, rendered, without a verdict."""
    desc = get_family(fid)
    _, lhs, rhs = _evaluate(desc, params)
    return render(lhs), render(rhs)


def check_instance(fid, params: Params) -> CheckResult:
    desc = get_family(fid)
    t0 = time.perf_counter()
    p, lhs, rhs = _evaluate(desc, params)
    equal = bool(lhs == rhs)
    elapsed = (time.perf_counter() - t0) * 1000
    try:
        ok = bool(desc.in_domain(p))
    except Exception:
        ok = False
    return CheckResult(desc.id, dict(p), render(lhs), render(rhs), equal, ok, round(elapsed, 3))


def family_rng(fid: str, seed: int) -> random.Random:
    """Per-family generator, so a family's samples do not depend on which others ran."""
    return random.Random(f"{seed}:{fid}")


def verify_family(
    fid,
    size: int | None = None,
    seed: int = DEFAULT_SEED,
    *,
    domain: Iterable[Params] | None = None,
    include_extensions: bool = False,
) -> FamilyReport:
    """Sweep a family's default domain (or ``domain``) and collect the failing instances."""
    desc = get_family(fid)
    size = desc.default_size if size is None else size
    if size < 0:
        raise ValueError(f"size bound must be nonnegative, got {size}")
    if domain is None:
        instances = list(desc.domain(size, family_rng(desc.id, seed)))
        text = desc.domain_text(size)
        if include_extensions and desc.extension_domain is not None:
            instances += list(desc.extension_domain(size))
            text += " (+ extension)"
    else:
        instances = list(domain)
        text = "custom"
    report = FamilyReport(desc.id, desc.title, desc.anchor, text, seed=seed)
    t0 = time.perf_counter()
    for params in instances:
        res = check_instance(desc, params)
        report.instances += 1
        if not res.equal:
            report.failures.append(res)
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    return report
