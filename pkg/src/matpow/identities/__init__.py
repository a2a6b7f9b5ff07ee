"""Registry of identity families with independent left/right evaluators."""
from .registry import (
    DEFAULT_SEED,
    CheckResult,
    FamilyDescriptor,
    FamilyReport,
    MalformedParamsError,
    UnknownFamilyError,
    check_instance,
    get_family,
    lhs_rhs,
    list_families,
    render,
    verify_family,
)

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
    "render",
    "verify_family",
]
