"""The Algebra of Connectors and its translations to and from causal trees."""

from bipglue.connectors.normal import connector_tree, is_normal_connector, normalize_connector
from bipglue.connectors.syntax import parse_connector
from bipglue.connectors.term import (
    ConnectorTerm,
    Fusion,
    Role,
    Typed,
    Union,
    connector_ports,
    eval_connector,
    synchron,
    to_ai,
    trigger,
)
from bipglue.connectors.transform import label_term, sigma, tau

__all__ = [
    "ConnectorTerm",
    "Fusion",
    "Role",
    "Typed",
    "Union",
    "connector_ports",
    "connector_tree",
    "eval_connector",
    "is_normal_connector",
    "label_term",
    "normalize_connector",
    "parse_connector",
    "sigma",
    "synchron",
    "tau",
    "to_ai",
    "trigger",
]
