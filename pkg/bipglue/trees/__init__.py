"""Causal interaction trees: notation, semantics, axioms and normal forms."""

from bipglue.trees.axioms import AXIOMS, applicable_positions, node_at, rewrite_axiom
from bipglue.trees.normal import equiv_tree, is_normal_tree, normalize_tree
from bipglue.trees.syntax import parse_tree
from bipglue.trees.tree import CausalTree, Node, canonical_forest, eval_tree

__all__ = [
    "AXIOMS",
    "CausalTree",
    "Node",
    "applicable_positions",
    "canonical_forest",
    "equiv_tree",
    "eval_tree",
    "is_normal_tree",
    "node_at",
    "normalize_tree",
    "parse_tree",
    "rewrite_axiom",
]
