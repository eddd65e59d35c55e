"""Branch conventions: principal logarithms, complex powers and cut sets."""

from lerchzeta.branch.principal import cpow, nu, principal_arg, principal_log
from lerchzeta.branch.cuts import (
    arg_on_cut_complement,
    classify,
    in_domain_eq,
    in_domain_lerch,
    is_excluded_w,
    is_nonpositive_integer,
    on_cut_sym,
    on_cut_w,
    on_cut_z,
)

__all__ = [
    "cpow",
    "nu",
    "principal_arg",
    "principal_log",
    "arg_on_cut_complement",
    "classify",
    "in_domain_eq",
    "in_domain_lerch",
    "is_excluded_w",
    "is_nonpositive_integer",
    "on_cut_sym",
    "on_cut_w",
    "on_cut_z",
]
