"""Normal connectors: the images under ``sigma`` of normal causal trees."""

from __future__ import annotations

from bipglue.config import GlueConfig
from bipglue.connectors.term import ConnectorTerm, Fusion, Typed
from bipglue.connectors.transform import sigma, tau
from bipglue.kernel.algebra import One, PortAtom, Zero
from bipglue.kernel.interaction import ONE, Interaction, canonicalize_interaction
from bipglue.trees.normal import is_normal_tree, normalize_tree
from bipglue.trees.tree import CausalTree, Node


class _NotNormal(Exception):
    pass


def _bottom(term: ConnectorTerm) -> Interaction:
    """Label of a bottom node: a synchronisation of pairwise distinct typed ports."""
    if isinstance(term, One):
        return ONE
    if isinstance(term, PortAtom):
        return canonicalize_interaction([term.port])
    if isinstance(term, Fusion) and len(term.parts) > 1:
        ports = []
        for part in term.parts:
            if part.is_trigger or not isinstance(part.body, PortAtom):
                raise _NotNormal
            ports.append(part.body.port)
        if len({p.port for p in ports}) != len(ports):
            raise _NotNormal
        return canonicalize_interaction(ports)
    raise _NotNormal


def _level(term: ConnectorTerm) -> tuple[Node, ...]:
    if isinstance(term, Typed):
        if isinstance(term.body, Zero):
            return ()
        term = term.body
    if isinstance(term, Fusion):
        triggers, synchrons = term.triggers, term.synchrons
        if not triggers:
            return (Node(_bottom(term)),)
        if len(triggers) == 1 and len(synchrons) == 1:
            head = _bottom(triggers[0].body)
            below = _level(synchrons[0].body)
            if not below:
                raise _NotNormal
            return (Node(head, below),)
        if synchrons or len(triggers) < 2:
            raise _NotNormal
        return tuple(node for part in triggers for node in _level(part.body))
    return (Node(_bottom(term)),)


def connector_tree(x: ConnectorTerm) -> CausalTree | None:
    """Read ``x`` back as the tree it is the ``sigma`` image of, if it has that shape."""
    try:
        return CausalTree(_level(x))
    except _NotNormal:
        return None


def is_normal_connector(x: ConnectorTerm) -> bool:
    """Whether every non-bottom level has a trigger and the underlying tree is normal.

    Bottom nodes must synchronise pairwise distinct typed ports; a bottom
    node that fires nothing may only sit under triggers, i.e. be a root of
    the underlying tree.
    """
    tree = connector_tree(x)
    return tree is not None and is_normal_tree(tree)


def normalize_connector(x: ConnectorTerm, *, config: GlueConfig | None = None) -> ConnectorTerm:
    """``sigma`` of the normal tree of ``tau(x)``; unions fail as they do in ``tau``."""
    return sigma(normalize_tree(tau(x, config=config), config=config))
