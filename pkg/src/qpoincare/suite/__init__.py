"""Named verification checks, the expression parser and the command line."""

from .checks import check_registry, default_checks, get_check, run_checks
from .parser import ParseError, parse_expression
from .registry import CheckReport, CheckSpec, Outcome, RunConfig, UnknownCheck
from .report import dumps_report, run_document

__all__ = [
    "CheckReport",
    "CheckSpec",
    "Outcome",
    "ParseError",
    "RunConfig",
    "UnknownCheck",
    "check_registry",
    "default_checks",
    "dumps_report",
    "get_check",
    "parse_expression",
    "run_checks",
    "run_document",
]
