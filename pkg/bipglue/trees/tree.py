"""Causal interaction trees and their interaction semantics.

A tree is a forest of nodes; the roots are combined with ``(+)``. A node
carries a canonical interaction label, or ``CONTRADICTION`` for the
constant 0, and the forest of its causal successors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from bipglue.kernel.interaction import (
    CONTRADICTION,
    Contradiction,
    Interaction,
    InteractionSet,
    sync_product,
)

Label = Interaction | Contradiction


def label_key(label: Label) -> tuple:
    if isinstance(label, Contradiction):
        return (0,)
    return (1, label.sort_key)


def label_text(label: Label) -> str:
    return label.to_text()


@dataclass(frozen=True)
class Node:
    label: Label
    children: tuple["Node", ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def sort_key(self) -> tuple:
        return (label_key(self.label), tuple(c.sort_key for c in self.children))

    def canonical(self) -> "Node":
        return Node(self.label, canonical_forest(self.children))

    def walk(self, path: tuple[int, ...] = ()) -> Iterator[tuple[tuple[int, ...], "Node"]]:
        yield path, self
        for index, child in enumerate(self.children):
            yield from child.walk(path + (index,))

    def to_text(self) -> str:
        head = label_text(self.label)
        if not self.children:
            return head
        if len(self.children) == 1:
            return f"{head} -> {self.children[0].to_text()}"
        return f"{head} -> ({forest_text(self.children)})"


def canonical_forest(nodes: Iterable[Node]) -> tuple[Node, ...]:
    """Sort and deduplicate siblings recursively and drop 0 leaves (``t (+) 0 = t``)."""
    unique = {
        node.canonical()
        for node in nodes
        if not (node.label is CONTRADICTION and node.is_leaf)
    }
    return tuple(sorted(unique, key=lambda n: n.sort_key))


def forest_text(nodes: Iterable[Node]) -> str:
    nodes = tuple(nodes)
    if not nodes:
        return "0"
    return " (+) ".join(node.to_text() for node in nodes)


@dataclass(frozen=True)
class CausalTree:
    forest: tuple[Node, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not isinstance(self.forest, tuple):
            object.__setattr__(self, "forest", tuple(self.forest))

    @classmethod
    def leaf(cls, label: Label) -> "CausalTree":
        return cls((Node(label),))

    def canonical(self) -> "CausalTree":
        return CausalTree(canonical_forest(self.forest))

    def same_as(self, other: "CausalTree") -> bool:
        """Structural equality modulo sibling order and duplicate siblings."""
        return self.canonical() == other.canonical()

    def nodes(self) -> Iterator[tuple[tuple[int, ...], Node]]:
        for index, root in enumerate(self.forest):
            yield from root.walk((index,))

    @property
    def ports(self) -> frozenset[str]:
        return frozenset().union(*(node.label.ports for _, node in self.nodes()))

    @property
    def depth(self) -> int:
        return max((len(path) for path, _ in self.nodes()), default=0)

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def to_text(self) -> str:
        return forest_text(self.forest)

    def __str__(self) -> str:
        return self.to_text()


def _eval_node(node: Node) -> frozenset[Interaction]:
    if node.label is CONTRADICTION:
        return frozenset()
    below = _eval_forest(node.children)
    return sync_product({node.label}, below | {Interaction()})


def _eval_forest(nodes: Iterable[Node]) -> frozenset[Interaction]:
    acc: frozenset[Interaction] = frozenset()
    for node in nodes:
        part = _eval_node(node)
        acc = acc | part | sync_product(acc, part)
    return acc


def eval_tree(t: CausalTree, universe: Iterable[str] | None = None) -> InteractionSet:
    """Interaction semantics: ``|a -> t| = a(1 + |t|)`` and ``|t1 (+) t2| = X + Y + XY``."""
    ports = t.ports if universe is None else t.ports | frozenset(universe)
    return InteractionSet.of(_eval_forest(t.forest), ports)
