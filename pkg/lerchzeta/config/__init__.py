"""Configuration and settings module."""

from lerchzeta.config.settings import Settings, settings
from lerchzeta.config.schemas import (
    CUT_TOL,
    BranchConfig,
    CliConfig,
    DomainClass,
    EvalParams,
    EvalResult,
    FEReport,
    QuadResult,
    SuiteReport,
)

__all__ = [
    "Settings",
    "settings",
    "CUT_TOL",
    "BranchConfig",
    "CliConfig",
    "DomainClass",
    "EvalParams",
    "EvalResult",
    "FEReport",
    "QuadResult",
    "SuiteReport",
]
