"""Behaviours with offer predicates, their composition and priority restriction."""

from bipglue.behavior.compose import compose_classical, compose_extended, state_name
from bipglue.behavior.equality import annotated_graph, behaviour_equal
from bipglue.behavior.glue import (
    ClassicalGlue,
    ExtendedGlue,
    Glue,
    glue_from_dict,
    load_behaviour,
    load_glue,
)
from bipglue.behavior.lts import Behaviour, Lts, Transition, atomic, offer_closure
from bipglue.behavior.priority import (
    PriorityModel,
    restrict_priority_classical,
    restrict_priority_offer,
)

__all__ = [
    "Behaviour",
    "ClassicalGlue",
    "ExtendedGlue",
    "Glue",
    "Lts",
    "PriorityModel",
    "Transition",
    "annotated_graph",
    "atomic",
    "behaviour_equal",
    "compose_classical",
    "compose_extended",
    "glue_from_dict",
    "load_behaviour",
    "load_glue",
    "offer_closure",
    "restrict_priority_classical",
    "restrict_priority_offer",
    "state_name",
]
