"""Solow-Polasky diversity: evaluation, subset selection and the Independent Set reduction.

Reports come back as plain dicts mirroring the CLI's JSON output.
"""

import json

from . import _spdiv
from ._spdiv import DEFAULT_ENUMERATION_CAP, SpdivError, sp_uniform, validate_metric

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "SpdivError",
    "decide",
    "deformation_scan",
    "encode_graph",
    "random_equivalence_suite",
    "select",
    "solve_is_via_sp",
    "sp_uniform",
    "sp_value",
    "validate_metric",
]


def sp_value(d, subset, theta):
    return json.loads(_spdiv.sp_value(d, list(subset), theta))


def select(d, k, theta, method="exact", enumeration_cap=DEFAULT_ENUMERATION_CAP):
    return json.loads(_spdiv.select(d, k, theta, method, enumeration_cap))


def decide(d, k, theta, threshold, enumeration_cap=DEFAULT_ENUMERATION_CAP):
    return json.loads(_spdiv.decide(d, k, theta, threshold, enumeration_cap))


def encode_graph(n, edges, k, theta0):
    """Returns (distance rows, reduction parameters)."""
    rows, params = _spdiv.encode_graph(n, [tuple(e) for e in edges], k, theta0)
    return rows, json.loads(params)


def solve_is_via_sp(n, edges, k, theta0):
    return json.loads(_spdiv.solve_is_via_sp(n, [tuple(e) for e in edges], k, theta0))


def deformation_scan(d, subset, pair, theta0, lambda_, samples=33):
    return json.loads(_spdiv.deformation_scan(d, list(subset), tuple(pair), theta0, lambda_, samples))


def random_equivalence_suite(seed, trials, n_max, theta0_choices=(0.5, 1.0, 3.0), with_records=False):
    return json.loads(
        _spdiv.random_equivalence_suite(seed, trials, n_max, list(theta0_choices), with_records)
    )
