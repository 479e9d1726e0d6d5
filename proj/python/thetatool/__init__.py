"""Python interface to the theta involution toolkit."""
import json

from ._core import (
    DEFAULT_CAP,
    BadPrimeError,
    CapExceededError,
    InvalidTypeError,
    ThetaError,
    UnknownLabelError,
    component_count,
    kp_dimensions,
    labels,
    report_text,
    restricted_type,
    suite_names,
)
from . import _core


def report(series, rank, label, cap=DEFAULT_CAP):
    """Report for one catalog class, as a dict (same fields as `theta-tool --format json report`)."""
    return json.loads(_core.report_json(series, rank, label, cap))


def verify(suite, seed=42, primes=(), cap=DEFAULT_CAP):
    """Run one verification suite and return its JSON summary as a dict."""
    return json.loads(_core.verify_json(suite, seed, list(primes), cap))


def weyl_poincare(series, rank, cap=DEFAULT_CAP):
    """Coefficients of sum_w t^l(w) for the Weyl group of a simple type."""
    return [int(c) for c in _core.weyl_poincare(series, rank, cap)]


__all__ = [
    "DEFAULT_CAP", "BadPrimeError", "CapExceededError", "InvalidTypeError", "ThetaError", "UnknownLabelError",
    "component_count", "kp_dimensions", "labels", "report", "report_text", "restricted_type", "suite_names",
    "verify", "weyl_poincare",
]
