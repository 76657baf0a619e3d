"""Causal trees rebuilt from firing-only rule systems."""

from __future__ import annotations

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.errors import ContractViolationError
from bipglue.kernel.equivalence import find_offer_witness
from bipglue.kernel.interaction import Interaction
from bipglue.rules.system import CausalRuleSystem, minimal_models
from bipglue.trees.normal import normalize_tree
from bipglue.trees.tree import CausalTree, Node, eval_tree


def _difference(big: Interaction, small: Interaction) -> Interaction:
    return Interaction(big.fire - small.fire, big.act - small.act, big.neg - small.neg)


def _size(a: Interaction) -> int:
    return len(a.fire) + len(a.act) + len(a.neg)


def tree_of_minimal(models: list[Interaction]) -> CausalTree:
    """Hang every model below the largest other model it extends, labelled with the difference.

    The merges of parent-closed node sets are then exactly the merges of
    models, and no two models sharing a firing set can extend one another.
    """
    ordered = sorted(models, key=lambda a: (_size(a), a.sort_key))
    parent: dict[Interaction, Interaction | None] = {}
    for index, a in enumerate(ordered):
        below = [b for b in ordered[:index] if b != a and b.issubset(a)]
        parent[a] = max(below, key=lambda b: (_size(b), b.sort_key)) if below else None

    def build(a: Interaction) -> Node:
        base = parent[a]
        label = a if base is None else _difference(a, base)
        children = tuple(build(c) for c in ordered if parent[c] == a)
        return Node(label, children)

    return CausalTree(tuple(build(a) for a in ordered if parent[a] is None))


def tree_of_rules(r: CausalRuleSystem, *, config: GlueConfig | None = None) -> CausalTree:
    """A normal causal tree offer-equivalent to ``|R|``.

    Raises:
        ContractViolationError: the rebuilt tree enables different firing
            sets than the rules (checked when ``check_contracts`` is on and
            the universe fits under ``max_ports``)
    """
    config = resolve(config)
    models = minimal_models(r, config=config)
    tree = normalize_tree(tree_of_minimal(models.sorted()), config=config)
    if not config.check_contracts:
        return tree
    if len(r.universe) > config.max_ports:
        logger.warning("skipping the tree_of_rules check over {} ports", len(r.universe))
        return tree
    witness = find_offer_witness(eval_tree(tree, r.universe), models, config=config)
    if witness is not None:
        raise ContractViolationError(f"rebuilt tree {tree} differs from the rules at {witness}")
    logger.debug("tree_of_rules: {}", tree)
    return tree
