"""Typed ports, canonical interactions, the Algebra of Interactions and its equivalences."""

from bipglue.kernel.algebra import (
    AiTerm,
    One,
    PortAtom,
    Sync,
    Union,
    Zero,
    ai_ports,
    ai_product,
    ai_sum,
    eval_ai,
)
from bipglue.kernel.equivalence import (
    PortConfig,
    PortState,
    check_cap,
    enabled,
    equiv_offer,
    equiv_strong,
    find_offer_witness,
    is_enabled,
    normalize_interaction_set,
    port_configs,
)
from bipglue.kernel.interaction import (
    CONTRADICTION,
    ONE,
    Contradiction,
    Interaction,
    InteractionSet,
    canonicalize_interaction,
    firing_lift,
    sync_product,
)
from bipglue.kernel.ports import TypedPort, Typing, check_port_name
from bipglue.kernel.priority import PriorityModel, translate_priority
from bipglue.kernel.syntax import parse_ai, parse_interaction, parse_typed_port

__all__ = [
    "AiTerm",
    "CONTRADICTION",
    "Contradiction",
    "Interaction",
    "InteractionSet",
    "ONE",
    "One",
    "PortAtom",
    "PortConfig",
    "PortState",
    "PriorityModel",
    "Sync",
    "TypedPort",
    "Typing",
    "Union",
    "Zero",
    "ai_ports",
    "ai_product",
    "ai_sum",
    "canonicalize_interaction",
    "check_cap",
    "check_port_name",
    "enabled",
    "equiv_offer",
    "equiv_strong",
    "eval_ai",
    "find_offer_witness",
    "firing_lift",
    "is_enabled",
    "normalize_interaction_set",
    "parse_ai",
    "parse_interaction",
    "parse_typed_port",
    "port_configs",
    "sync_product",
    "translate_priority",
]
