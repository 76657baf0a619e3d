"""Causal rules read off a causal tree.

The cause of a typed port is the disjunction, over the nodes containing
it, of everything on the path from a root down to that node, the node's
own other ports included. The cause of ``tt`` is the disjunction of the
root labels.
"""

from __future__ import annotations

from typing import Iterator

from bipglue.kernel.interaction import CONTRADICTION, ONE, Interaction
from bipglue.kernel.ports import TypedPort
from bipglue.rules.cause import TT_EFFECT, CauseFormula, Effect
from bipglue.rules.system import FIRING_ONLY, CausalRuleSystem, effect_universe
from bipglue.trees.tree import CausalTree, Node


def _prefixes(
    nodes: tuple[Node, ...], above: Interaction, port: TypedPort
) -> Iterator[Interaction]:
    for node in nodes:
        if node.label is CONTRADICTION:
            continue
        if node.label.contains(port):
            yield above.merge(node.label.without_port(port.port))
            continue
        below = above.merge(node.label)
        if below is not CONTRADICTION:
            yield from _prefixes(node.children, below, port)


def cause_of(t: CausalTree, p: Effect) -> CauseFormula:
    if p == TT_EFFECT:
        return CauseFormula.of(n.label for n in t.forest)
    return CauseFormula.of(_prefixes(t.forest, ONE, p))


def rules_of_tree(t: CausalTree, mode: str = FIRING_ONLY) -> CausalRuleSystem:
    """One rule ``p => c_p(t)`` per effect; firing-only systems keep ``tt`` and firing effects."""
    rules = {effect: cause_of(t, effect) for effect in effect_universe(t.ports, mode)}
    return CausalRuleSystem.of(rules, t.ports, mode)
