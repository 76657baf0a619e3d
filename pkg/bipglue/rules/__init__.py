"""Causal rules: extraction from trees, interaction semantics and tree reconstruction."""

from bipglue.rules.cause import FF, TT, TT_EFFECT, CauseFormula, absorb, conjoin, disjoin
from bipglue.rules.extract import cause_of, rules_of_tree
from bipglue.rules.reconstruct import tree_of_minimal, tree_of_rules
from bipglue.rules.syntax import format_rules, parse_rules
from bipglue.rules.system import (
    FIRING_ONLY,
    FULL,
    CausalRuleSystem,
    all_interactions,
    effect_universe,
    eval_rules,
    minimal_models,
    simplify_rules,
)

__all__ = [
    "FF",
    "FIRING_ONLY",
    "FULL",
    "TT",
    "TT_EFFECT",
    "CausalRuleSystem",
    "CauseFormula",
    "absorb",
    "all_interactions",
    "cause_of",
    "conjoin",
    "disjoin",
    "effect_universe",
    "eval_rules",
    "format_rules",
    "minimal_models",
    "parse_rules",
    "rules_of_tree",
    "simplify_rules",
    "tree_of_minimal",
    "tree_of_rules",
]
