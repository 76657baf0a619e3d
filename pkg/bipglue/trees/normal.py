"""Normal forms of causal trees.

A tree is normal when every non-root node fires some port, no 0 node is
left, and along each root-to-leaf path a port appears at most once per
typing, two typings of one port meeting only as activation above firing.
"""

from __future__ import annotations

from typing import Iterable

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.kernel.equivalence import equiv_offer, equiv_strong
from bipglue.kernel.interaction import CONTRADICTION
from bipglue.kernel.ports import Typing
from bipglue.trees.tree import CausalTree, Node, canonical_forest, eval_tree


def _eliminate(nodes: Iterable[Node], at_root: bool, strict: bool) -> tuple[Node, ...]:
    """Bottom-up: drop 0 nodes, remove or push down nodes that fire nothing."""
    out: list[Node] = []
    for node in nodes:
        if node.label is CONTRADICTION:
            continue
        children = _eliminate(node.children, False, strict)
        if node.label.fire:
            out.append(Node(node.label, children))
        elif children:
            for child in children:
                merged = node.label.merge(child.label)
                if merged is not CONTRADICTION:
                    out.append(Node(merged, child.children))
        elif at_root and not strict:
            out.append(Node(node.label))
    return tuple(out)


def _stronger(above: Typing | None, typing: Typing) -> Typing:
    if above is Typing.ACT and typing is Typing.FIRE:
        return Typing.FIRE
    return typing if above is None else above


def _resolve(nodes: Iterable[Node], above: dict[str, Typing]) -> tuple[Node, ...]:
    """Top-down: settle ports already typed by an ancestor."""
    out: list[Node] = []
    for node in nodes:
        label = node.label
        dropped = False
        for port in sorted(label.ports):
            ancestor = above.get(port)
            if ancestor is None:
                continue
            typing = label.typing_of(port)
            if ancestor is typing or (ancestor is Typing.FIRE and typing is Typing.ACT):
                label = label.without_port(port)
            elif ancestor is Typing.ACT and typing is Typing.FIRE:
                continue
            else:
                dropped = True
                break
        if dropped:
            logger.debug("dropping subtree under {}: conflicts with an ancestor typing", node.label)
            continue
        below = dict(above)
        for typed in label.typed_ports():
            below[typed.port] = _stronger(below.get(typed.port), typed.typing)
        out.append(Node(label, _resolve(node.children, below)))
    return tuple(out)


def normalize_tree(t: CausalTree, *, config: GlueConfig | None = None) -> CausalTree:
    """Rewrite ``t`` into an offer-equivalent normal tree.

    Alternates two passes until nothing changes: nodes that fire nothing are
    removed or merged into their successors, then ports typed again below
    an ancestor are deleted, or the subtree is dropped when the typings
    conflict. Siblings end up sorted and deduplicated, so equal normal
    forms print identically.
    """
    strict = resolve(config).strict_roots
    forest = canonical_forest(t.forest)
    rounds = 0
    while True:
        rounds += 1
        step = canonical_forest(_resolve(_eliminate(forest, True, strict), {}))
        if step == forest:
            break
        forest = step
    logger.debug("normalized {} in {} rounds: {}", t, rounds, CausalTree(forest))
    return CausalTree(forest)


def _path_ok(node: Node, above: dict[str, list[Typing]], root: bool) -> bool:
    label = node.label
    if label is CONTRADICTION:
        return False
    if not root and not label.fire:
        return False
    for typed in label.typed_ports():
        for ancestor in above.get(typed.port, ()):
            if not (ancestor is Typing.ACT and typed.typing is Typing.FIRE):
                return False
    below = {port: list(typings) for port, typings in above.items()}
    for typed in label.typed_ports():
        below.setdefault(typed.port, []).append(typed.typing)
    return all(_path_ok(child, below, False) for child in node.children)


def is_normal_tree(t: CausalTree) -> bool:
    return all(_path_ok(root, {}, True) for root in t.forest)


def equiv_tree(
    t1: CausalTree,
    t2: CausalTree,
    mode: str = "offer",
    *,
    config: GlueConfig | None = None,
) -> bool:
    """Compare the interaction semantics of two trees over the union of their ports."""
    universe = t1.ports | t2.ports
    s1, s2 = eval_tree(t1, universe), eval_tree(t2, universe)
    if mode == "strong":
        return equiv_strong(s1, s2)
    if mode == "offer":
        return equiv_offer(s1, s2, config=config)
    raise ValueError(f"unknown equivalence mode {mode!r}; expected 'strong' or 'offer'")
