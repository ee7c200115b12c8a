"""Exact verification of the quantum deformations of GL(1|1) and gl(1|1)."""

import json

from ._gl11 import (
    ConfigError,
    PoleError,
    Scalar,
    list_checks,
    normal_form,
    pair,
    run_json,
    ybe,
)

__all__ = [
    "ConfigError",
    "PoleError",
    "Scalar",
    "list_checks",
    "normal_form",
    "pair",
    "run",
    "ybe",
]


def run(checks=(), cases=(), frameworks=(), mode="symbolic", seed=42, trials=3,
        max_degree=-1, jobs=0):
    """Run registry checks; returns the parsed JSON report."""
    return json.loads(run_json(list(checks), list(cases), list(frameworks), mode,
                               seed, trials, max_degree, jobs))
