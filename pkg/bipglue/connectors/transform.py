"""Translations between causal trees and connectors.

``sigma`` follows the tree shape: a node becomes a trigger on its label
fused with a synchron on its successors, and parallel trees become
parallel triggers. ``tau`` goes back by structural recursion; tree
semantics are closed under merging, which makes a fusion with triggers a
forest of triggers with the synchrons hung below every root, and a
product of two forests the forest of pairwise merged roots.
"""

from __future__ import annotations

from typing import Iterable

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.connectors.term import (
    ConnectorTerm,
    Fusion,
    Role,
    Typed,
    Union,
    eval_connector,
    synchron,
    trigger,
)
from bipglue.errors import ContractViolationError
from bipglue.kernel.algebra import One, PortAtom, Zero
from bipglue.kernel.interaction import CONTRADICTION, ONE, Contradiction, Interaction
from bipglue.trees.tree import CausalTree, Node, eval_tree

Forest = tuple[Node, ...]


def label_term(label: Interaction | Contradiction) -> ConnectorTerm:
    """``[a]`` for a node label: the fusion of its typed ports as synchrons."""
    if isinstance(label, Contradiction):
        return Zero()
    ports = label.typed_ports()
    if not ports:
        return One()
    if len(ports) == 1:
        return PortAtom(ports[0])
    return Fusion(tuple(Typed(PortAtom(p), Role.SYNCHRON) for p in ports))


def _sigma_node(node: Node) -> Typed | Fusion:
    head = label_term(node.label)
    if not node.children:
        return synchron(head)
    return Fusion((trigger(head), synchron(_sigma_forest(node.children))))


def _sigma_forest(nodes: Forest) -> Typed | Fusion:
    if not nodes:
        return synchron(Zero())
    if len(nodes) == 1:
        return _sigma_node(nodes[0])
    return Fusion(tuple(trigger(_sigma_node(n)) for n in nodes))


def sigma(t: CausalTree) -> ConnectorTerm:
    return _sigma_forest(t.forest)


def _product(left: Forest, right: Forest) -> Forest:
    out = []
    for a in left:
        for b in right:
            label = a.label.merge(b.label)
            if label is not CONTRADICTION:
                out.append(Node(label, a.children + b.children))
    return tuple(out)


def _hang(roots: Forest, below: Forest) -> Forest:
    if not below:
        return roots
    return tuple(Node(n.label, n.children + below) for n in roots)


def _concat(forests: Iterable[Forest]) -> Forest:
    return tuple(node for forest in forests for node in forest)


def _tau(x: ConnectorTerm, check: bool) -> Forest:
    if isinstance(x, Zero):
        return ()
    if isinstance(x, One):
        return (Node(ONE),)
    if isinstance(x, PortAtom):
        label = Interaction.of().add(x.port)
        return () if label is CONTRADICTION else (Node(label),)
    if isinstance(x, Typed):
        return _tau(x.body, check)
    if isinstance(x, Fusion):
        if not x.triggers:
            acc: Forest = (Node(ONE),)
            for part in x.synchrons:
                acc = _product(acc, _tau(part.body, check))
            return acc
        initiators = _concat(_tau(p.body, check) for p in x.triggers)
        return _hang(initiators, _concat(_tau(p.body, check) for p in x.synchrons))
    if isinstance(x, Union):
        left, right = _tau(x.left, check), _tau(x.right, check)
        joined = left + right
        if not check:
            return joined
        exact = eval_tree(CausalTree(left)).interactions | eval_tree(CausalTree(right)).interactions
        if eval_tree(CausalTree(joined)).interactions != exact:
            raise ContractViolationError(
                f"{x.to_text()} is not closed under merging; no causal tree denotes it"
            )
        return joined
    raise TypeError(f"not a connector term: {x!r}")


def tau(x: ConnectorTerm, *, config: GlueConfig | None = None) -> CausalTree:
    """A causal tree with exactly the interactions of ``x``.

    With ``check_contracts`` off no check runs, and a union that is not
    closed under merging comes back as the forest of both sides, which
    denotes its merge closure.

    Raises:
        ContractViolationError: ``x`` uses a union whose interactions are not
            closed under merging, or the result fails the semantic check
    """
    check = resolve(config).check_contracts
    tree = CausalTree(_tau(x, check))
    if check:
        want = eval_connector(x)
        got = eval_tree(tree, want.universe)
        if got.interactions != want.interactions:
            raise ContractViolationError(f"tau({x.to_text()}) = {tree} changes the interactions")
        logger.debug("tau({}) = {} checked", x.to_text(), tree)
    return tree
