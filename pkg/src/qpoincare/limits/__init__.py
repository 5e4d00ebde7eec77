"""Semiclassical limits: hbar -> 0 (Poisson brackets) and lambda -> 0 (Poincare)."""

from .checks import (CANONICAL_RELATIONS, CLASSICAL_RELATIONS, LIMIT_CHECKS, LimitResult,
                     canonical_limit_check, classical_limit_check, component_form_check,
                     omega_limit_check, pauli_lubanski_limit_check, r_vs_exp_check)
from .components import ComponentMap, component_map, poincare_rules, canonical_rules
from .expansions import compare_R_vs_exp, expand_R_in_hbar
from .rules import LimitRuleSet, classical_rules
from .series import TruncatedSeries, exp_matrix_truncated, exp_oracle

__all__ = [
    "CANONICAL_RELATIONS",
    "CLASSICAL_RELATIONS",
    "LIMIT_CHECKS",
    "LimitResult",
    "LimitRuleSet",
    "ComponentMap",
    "TruncatedSeries",
    "canonical_limit_check",
    "canonical_rules",
    "classical_limit_check",
    "classical_rules",
    "compare_R_vs_exp",
    "component_form_check",
    "component_map",
    "exp_matrix_truncated",
    "exp_oracle",
    "expand_R_in_hbar",
    "omega_limit_check",
    "pauli_lubanski_limit_check",
    "poincare_rules",
    "r_vs_exp_check",
]
