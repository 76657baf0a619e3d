"""Connector terms and their translation into the Algebra of Interactions.

Every operand of a fusion is typed: a synchron ``[x]`` joins an interaction
only when someone else initiates it, a trigger ``[x]'`` may initiate one
on its own. A fusion with triggers ``x1..xn`` and synchrons ``y1..ym``
denotes the sum over ``i`` of ``xi`` times every optional ``xk`` (``k != i``)
and every optional ``yj``; with no trigger it is the plain product.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union as _U

from bipglue.errors import GlueError
from bipglue.kernel.algebra import (
    AiTerm,
    One,
    PortAtom,
    Zero,
    ai_product,
    ai_sum,
    eval_ai,
)
from bipglue.kernel.algebra import Union as AiUnion
from bipglue.kernel.interaction import InteractionSet


class Role(Enum):
    SYNCHRON = "synchron"
    TRIGGER = "trigger"


@dataclass(frozen=True)
class Typed:
    body: "ConnectorTerm"
    role: Role = Role.SYNCHRON

    @property
    def is_trigger(self) -> bool:
        return self.role is Role.TRIGGER

    def to_text(self) -> str:
        mark = "'" if self.is_trigger else ""
        return f"[{self.body.to_text()}]{mark}"

    def part_text(self) -> str:
        if isinstance(self.body, PortAtom):
            return self.body.to_text() + ("'" if self.is_trigger else "")
        return self.to_text()


@dataclass(frozen=True)
class Fusion:
    parts: tuple[Typed, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise GlueError("a fusion needs at least one operand")
        for part in self.parts:
            if not isinstance(part, Typed):
                raise GlueError(f"fusion operands must be typed, got {part!r}")

    @property
    def triggers(self) -> tuple[Typed, ...]:
        return tuple(p for p in self.parts if p.is_trigger)

    @property
    def synchrons(self) -> tuple[Typed, ...]:
        return tuple(p for p in self.parts if not p.is_trigger)

    def to_text(self) -> str:
        return " ".join(part.part_text() for part in self.parts)


@dataclass(frozen=True)
class Union:
    left: "ConnectorTerm"
    right: "ConnectorTerm"

    def to_text(self) -> str:
        return f"{self.left.to_text()} + {self.right.to_text()}"


ConnectorTerm = _U[Zero, One, PortAtom, Typed, Fusion, Union]


def trigger(body: "ConnectorTerm") -> Typed:
    return Typed(body.body if isinstance(body, Typed) else body, Role.TRIGGER)


def synchron(body: "ConnectorTerm") -> Typed:
    return Typed(body.body if isinstance(body, Typed) else body, Role.SYNCHRON)


def fuse(parts: Iterable[Typed]) -> Fusion:
    return Fusion(tuple(parts))


def _optional(term: AiTerm) -> AiTerm:
    return AiUnion(One(), term)


def to_ai(x: ConnectorTerm) -> AiTerm:
    """Translate a connector into an AI term with the same interaction semantics."""
    if isinstance(x, (Zero, One, PortAtom)):
        return x
    if isinstance(x, Typed):
        return to_ai(x.body)
    if isinstance(x, Union):
        return AiUnion(to_ai(x.left), to_ai(x.right))
    if isinstance(x, Fusion):
        initiators = [to_ai(p.body) for p in x.triggers]
        followers = [_optional(to_ai(p.body)) for p in x.synchrons]
        if not initiators:
            return ai_product(to_ai(p.body) for p in x.synchrons)
        summands = []
        for i, head in enumerate(initiators):
            rest = [_optional(other) for k, other in enumerate(initiators) if k != i]
            summands.append(ai_product([head, *rest, *followers]))
        return ai_sum(summands)
    raise TypeError(f"not a connector term: {x!r}")


def connector_ports(x: ConnectorTerm) -> frozenset[str]:
    if isinstance(x, PortAtom):
        return frozenset({x.port.port})
    if isinstance(x, Typed):
        return connector_ports(x.body)
    if isinstance(x, Union):
        return connector_ports(x.left) | connector_ports(x.right)
    if isinstance(x, Fusion):
        return frozenset().union(*(connector_ports(p) for p in x.parts))
    return frozenset()


def eval_connector(x: ConnectorTerm, universe: Iterable[str] | None = None) -> InteractionSet:
    ports = connector_ports(x)
    if universe is not None:
        ports = ports | frozenset(universe)
    return eval_ai(to_ai(x), ports)
