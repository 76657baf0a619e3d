"""Graphviz export of behaviours, causal trees and connectors."""

from __future__ import annotations

import itertools

import pydot

from bipglue.behavior.lts import Behaviour
from bipglue.connectors.term import ConnectorTerm, Fusion, Typed, Union
from bipglue.trees.tree import CausalTree, Node, label_text


def _label(transition_label: frozenset[str]) -> str:
    return " ".join(sorted(transition_label)) or "1"


def behaviour_to_dot(b: Behaviour, name: str = "behaviour") -> pydot.Dot:
    """States are labelled with their offers; the initial state is a double circle."""
    graph = pydot.Dot(name, graph_type="digraph", rankdir="LR")
    ids = {state: f"s{i}" for i, state in enumerate(sorted(b.states))}
    for state, node_id in ids.items():
        offers = ",".join(sorted(b.offered(state)))
        graph.add_node(
            pydot.Node(
                node_id,
                label=f'"{state}\\n{{{offers}}}"',
                shape="doublecircle" if state == b.initial else "circle",
            )
        )
    for t in sorted(b.transitions, key=lambda t: t.sort_key):
        graph.add_edge(pydot.Edge(ids[t.source], ids[t.target], label=f'"{_label(t.label)}"'))
    return graph


def tree_to_dot(t: CausalTree, name: str = "tree") -> pydot.Dot:
    graph = pydot.Dot(name, graph_type="digraph")
    ids = itertools.count()

    def add(node: Node) -> str:
        node_id = f"n{next(ids)}"
        graph.add_node(pydot.Node(node_id, label=f'"{label_text(node.label)}"', shape="box"))
        for child in node.children:
            graph.add_edge(pydot.Edge(node_id, add(child)))
        return node_id

    for root in t.forest:
        add(root)
    return graph


def connector_to_dot(x: ConnectorTerm, name: str = "connector") -> pydot.Dot:
    """Fusions become bullets joining their operands; triggers are triangles, synchrons circles."""
    graph = pydot.Dot(name, graph_type="digraph", rankdir="BT")
    ids = itertools.count()

    def add(term: ConnectorTerm) -> str:
        node_id = f"c{next(ids)}"
        if isinstance(term, Typed):
            shape = "triangle" if term.is_trigger else "circle"
            graph.add_node(pydot.Node(node_id, label='""', shape=shape, width="0.2", style="filled"))
            graph.add_edge(pydot.Edge(add(term.body), node_id, arrowhead="none"))
        elif isinstance(term, Fusion):
            graph.add_node(pydot.Node(node_id, label='""', shape="point"))
            for part in term.parts:
                graph.add_edge(pydot.Edge(add(part), node_id, arrowhead="none"))
        elif isinstance(term, Union):
            graph.add_node(pydot.Node(node_id, label='"+"', shape="plaintext"))
            graph.add_edge(pydot.Edge(add(term.left), node_id, arrowhead="none"))
            graph.add_edge(pydot.Edge(add(term.right), node_id, arrowhead="none"))
        else:
            graph.add_node(pydot.Node(node_id, label=f'"{term.to_text()}"', shape="plaintext"))
        return node_id

    add(x)
    return graph
