"""Isomorphism of the reachable, offer-annotated parts of two behaviours."""

from __future__ import annotations

import networkx as nx
from networkx.algorithms import isomorphism

from bipglue.behavior.lts import Behaviour


def annotated_graph(b: Behaviour) -> nx.MultiDiGraph:
    """Reachable fragment of ``b`` with ``initial`` and ``offers`` node attributes."""
    reachable = b.restricted_to_reachable()
    graph = reachable.lts.to_graph()
    for state in graph.nodes:
        graph.nodes[state]["offers"] = reachable.offered(state)
    return graph


def behaviour_equal(b1: Behaviour, b2: Behaviour) -> bool:
    """Whether a state bijection fixing the initial states maps one behaviour onto the other.

    Transition labels and offered port sets must be preserved; state names
    are irrelevant.
    """
    if b1.ports != b2.ports:
        return False
    g1, g2 = annotated_graph(b1), annotated_graph(b2)
    if g1.number_of_nodes() != g2.number_of_nodes() or g1.number_of_edges() != g2.number_of_edges():
        return False
    return nx.is_isomorphic(
        g1,
        g2,
        node_match=isomorphism.categorical_node_match(["initial", "offers"], [False, frozenset()]),
        edge_match=isomorphism.categorical_multiedge_match("label", frozenset()),
    )
