"""Parser for the causal tree notation: ``p! -q -> r! (+) s!``.

Nodes are juxtaposed typed ports (or ``0`` / ``1``), ``->`` is causality
and associates to the right, ``(+)`` joins parallel trees and binds
weakest. Parentheses group a forest below a node.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, v_args

from bipglue.kernel.syntax import (
    PortTransformer,
    build_parser,
    label_from_items,
    run_parser,
)
from bipglue.kernel.algebra import One, Zero
from bipglue.trees.tree import CausalTree, Node

TREE_GRAMMAR = r"""
start: forest?

forest: chain ("(+)" chain)*

chain: label "->" chain     -> cause
     | label                -> leaf
     | "(" forest ")"       -> group

label: item+

?item: "0"                  -> zero
     | "1"                  -> one
     | typed_port
"""


class _TreeTransformer(PortTransformer):
    def start(self, items):
        return CausalTree(items[0] if items else ())

    def forest(self, chains):
        return tuple(node for chain in chains for node in chain)

    @v_args(inline=True)
    def cause(self, label, chain):
        return (Node(label, chain),)

    @v_args(inline=True)
    def leaf(self, label):
        return (Node(label),)

    @v_args(inline=True)
    def group(self, forest):
        return forest

    def label(self, items):
        return label_from_items(items)

    def zero(self, _):
        return Zero()

    def one(self, _):
        return One()


@lru_cache(maxsize=None)
def _tree_parser() -> Lark:
    return build_parser(TREE_GRAMMAR)


def parse_tree(text: str) -> CausalTree:
    """Parse a causal tree; the empty text is the empty forest."""
    return run_parser(_tree_parser(), _TreeTransformer(), text)
