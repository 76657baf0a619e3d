"""Extended BIP glue: interactions, connectors, causal trees, causal rules and synthesis.

The library logs through loguru under the ``bipglue`` name and is silent
until an application calls ``logger.enable("bipglue")``; the command line
does so through :func:`bipglue.log.configure_logging`.
"""

from loguru import logger

__version__ = "0.1.0"

from bipglue.behavior import (
    Behaviour,
    ClassicalGlue,
    ExtendedGlue,
    behaviour_equal,
    compose_classical,
    compose_extended,
)
from bipglue.config import DEFAULT_CONFIG, GlueConfig
from bipglue.connectors import eval_connector, normalize_connector, parse_connector, sigma, tau
from bipglue.errors import GlueError
from bipglue.kernel import (
    Interaction,
    InteractionSet,
    TypedPort,
    equiv_offer,
    equiv_strong,
    eval_ai,
    normalize_interaction_set,
    parse_ai,
)
from bipglue.rules import CausalRuleSystem, eval_rules, parse_rules, rules_of_tree, tree_of_rules
from bipglue.synthesis import parse_constraints, synthesize
from bipglue.trees import CausalTree, eval_tree, normalize_tree, parse_tree

logger.disable("bipglue")

__all__ = [
    "DEFAULT_CONFIG",
    "Behaviour",
    "CausalRuleSystem",
    "CausalTree",
    "ClassicalGlue",
    "ExtendedGlue",
    "GlueConfig",
    "GlueError",
    "Interaction",
    "InteractionSet",
    "TypedPort",
    "__version__",
    "behaviour_equal",
    "compose_classical",
    "compose_extended",
    "equiv_offer",
    "equiv_strong",
    "eval_ai",
    "eval_connector",
    "eval_rules",
    "eval_tree",
    "normalize_connector",
    "normalize_interaction_set",
    "normalize_tree",
    "parse_ai",
    "parse_connector",
    "parse_constraints",
    "parse_rules",
    "parse_tree",
    "rules_of_tree",
    "sigma",
    "synthesize",
    "tau",
    "tree_of_rules",
]
