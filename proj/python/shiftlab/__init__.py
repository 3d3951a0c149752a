"""Weighted shift operators on Koethe echelon and power series spaces."""

import json as _json

from . import _core
from ._core import (
    Budget,
    ConfigError,
    ExponentSequence,
    PreconditionError,
    ShiftlabError,
    ShiftOperator,
    Space,
    WeightSequence,
    analytic_log_product,
    catalog_names,
    catalog_operator,
    classify,
    forward_limit_sequence,
    load_config,
    log_gamma,
    log_rising,
    run_trajectory,
)

_CHECKS = [
    "check_continuity",
    "check_topologizable",
    "check_power_bounded",
    "check_cesaro_bounded",
    "check_mean_ergodic",
    "check_forward_limit",
    "check_continuity_power_series",
    "check_topologizable_power_series",
    "check_power_bounded_power_series",
    "check_cesaro_bounded_power_series",
    "check_mean_ergodic_power_series",
]


def _parsed(fn):
    def wrapper(*args, **kwargs):
        return _json.loads(fn(*args, **kwargs))

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


for _name in _CHECKS:
    globals()[_name] = _parsed(getattr(_core, _name))

check_montel = _parsed(_core.check_montel)
full_report = _parsed(_core.full_report)
verify_entry = _parsed(_core.verify_entry)

__all__ = [
    "Budget",
    "ConfigError",
    "ExponentSequence",
    "PreconditionError",
    "ShiftlabError",
    "ShiftOperator",
    "Space",
    "WeightSequence",
    "analytic_log_product",
    "catalog_names",
    "catalog_operator",
    "check_montel",
    "classify",
    "forward_limit_sequence",
    "full_report",
    "load_config",
    "log_gamma",
    "log_rising",
    "run_trajectory",
    "verify_entry",
    *_CHECKS,
]
