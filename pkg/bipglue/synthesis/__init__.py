"""Synthesis of connectors from Boolean constraints on typed ports."""

from bipglue.synthesis.closure import close_formula, push_negations, split_axioms
from bipglue.synthesis.formula import (
    FALSE,
    TRUE,
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    act,
    cnf_clauses,
    conj,
    disj,
    fire,
    formula_ports,
    holds_in,
    neg,
)
from bipglue.synthesis.pipeline import SynthesisResult, config_predicate, satisfying_set, synthesize
from bipglue.synthesis.split import to_rule_systems
from bipglue.synthesis.syntax import parse_constraints, parse_formula, with_progress

__all__ = [
    "FALSE",
    "TRUE",
    "And",
    "Const",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "SynthesisResult",
    "Var",
    "act",
    "close_formula",
    "cnf_clauses",
    "config_predicate",
    "conj",
    "disj",
    "fire",
    "formula_ports",
    "holds_in",
    "neg",
    "parse_constraints",
    "parse_formula",
    "push_negations",
    "satisfying_set",
    "split_axioms",
    "synthesize",
    "to_rule_systems",
    "with_progress",
]
