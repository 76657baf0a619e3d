"""Glue operators as values, and the JSON form used by ``bipglue compose``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable

from loguru import logger

from bipglue.behavior.compose import compose_classical, compose_extended
from bipglue.behavior.lts import Behaviour
from bipglue.behavior.priority import restrict_priority_classical, restrict_priority_offer
from bipglue.errors import BehaviourError
from bipglue.kernel.interaction import CONTRADICTION, Interaction, InteractionSet
from bipglue.kernel.priority import PriorityModel
from bipglue.kernel.syntax import parse_interaction


@dataclass(frozen=True)
class ClassicalGlue:
    """Plain interactions with an optional priority on them."""

    interactions: frozenset[frozenset[str]]
    priority: PriorityModel = field(default_factory=PriorityModel)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "interactions", frozenset(frozenset(a) for a in self.interactions)
        )

    mode = "classical"

    def apply(self, *components: Behaviour) -> Behaviour:
        composed = compose_classical(self.interactions, components)
        return restrict_priority_classical(composed, self.priority)

    def to_dict(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "interactions": [sorted(a) for a in sorted(self.interactions, key=sorted)],
            "priority": self.priority.to_dict(),
        }


@dataclass(frozen=True)
class ExtendedGlue:
    """Typed interactions; priority, if any, is read in the offer world."""

    interactions: InteractionSet
    priority: PriorityModel = field(default_factory=PriorityModel)

    mode = "extended"

    def apply(self, *components: Behaviour) -> Behaviour:
        composed = compose_extended(self.interactions, components)
        return restrict_priority_offer(composed, self.priority)

    def to_dict(self) -> dict[str, Any]:
        return {
            "mode": self.mode,
            "interactions": [a.to_text() for a in self.interactions],
            "priority": self.priority.to_dict(),
        }


Glue = ClassicalGlue | ExtendedGlue


def _typed(items: Iterable[Any]) -> InteractionSet:
    out: list[Interaction] = []
    for item in items:
        value = Interaction.from_dict(item) if isinstance(item, dict) else parse_interaction(item)
        if value is CONTRADICTION:
            logger.debug("glue interaction {!r} is contradictory and dropped", item)
            continue
        out.append(value)
    return InteractionSet.of(out)


def glue_from_dict(data: dict[str, Any]) -> Glue:
    mode = data.get("mode", "extended")
    priority = PriorityModel.from_dict(data.get("priority") or {})
    items = data.get("interactions", [])
    if mode == "classical":
        return ClassicalGlue(frozenset(frozenset(a) for a in items), priority)
    if mode == "extended":
        return ExtendedGlue(_typed(items), priority)
    raise BehaviourError(f"unknown glue mode {mode!r}; expected 'classical' or 'extended'")


def load_glue(path: str | Path) -> Glue:
    return glue_from_dict(json.loads(Path(path).read_text()))


def load_behaviour(path: str | Path) -> Behaviour:
    return Behaviour.from_dict(json.loads(Path(path).read_text()))
