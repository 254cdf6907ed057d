"""Exceptional sets of n -> n^gamma, multiplicative dependence and relation probing."""

import json

from ._core import (
    Error,
    canonicalize,
    carlitz_kernel_dimension,
    check_report,
    classify,
    factor,
    mult_independent,
    probe,
    run_cli,
)
from ._core import exceptional_set_json
from ._core import representant as _representant


def exceptional_set(gamma, N, assume_schanuel=False, assume_conjecture1=False):
    """Report for n = 1..N as a dict in the zetagamma/1 JSON layout."""
    return json.loads(exceptional_set_json(gamma, N, assume_schanuel, assume_conjecture1))


def _text(report):
    return report if isinstance(report, str) else json.dumps(report)


def representant(report):
    """(B, provenance) for a report given as a dict or JSON text."""
    return _representant(_text(report))


def check(report):
    """Closure and prop3 diagnostics for a report given as a dict or JSON text."""
    return check_report(_text(report))


__all__ = [
    "Error",
    "canonicalize",
    "carlitz_kernel_dimension",
    "check",
    "classify",
    "exceptional_set",
    "exceptional_set_json",
    "factor",
    "mult_independent",
    "probe",
    "representant",
    "run_cli",
]
