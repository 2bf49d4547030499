"""Two-stage robust facility location under a k-client demand budget."""

import json

from ._core import (
    METHODS,
    InfeasibleError,
    Instance,
    procedure1,
    round_scrfl,
    round_urfl,
    run_method_json,
    second_stage_cost,
    solve_full_lp,
    solve_integral,
    solve_lp,
    solve_static,
    validate_metric,
    worst_case,
)


def run_method(inst, method, alpha=None, force=False):
    """Run one method with its reference comparisons; returns the report as a dict."""
    return json.loads(run_method_json(inst, method, alpha, force))


def trace(inst, x_star, opt2, alpha=None):
    """Ball-growing iterations and clusters for a fractional first stage."""
    return json.loads(procedure1(inst, x_star, opt2, alpha)["trace_json"])


__all__ = [
    "METHODS",
    "InfeasibleError",
    "Instance",
    "procedure1",
    "round_scrfl",
    "round_urfl",
    "run_method",
    "second_stage_cost",
    "solve_full_lp",
    "solve_integral",
    "solve_lp",
    "solve_static",
    "trace",
    "validate_metric",
    "worst_case",
]
