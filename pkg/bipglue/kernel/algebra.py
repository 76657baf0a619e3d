"""Algebra of Interactions: terms built from 0, 1, typed ports, union and synchronisation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union as _U

from bipglue.kernel.interaction import (
    ONE,
    InteractionSet,
    canonicalize_interaction,
    sync_product,
)
from bipglue.kernel.ports import TypedPort


@dataclass(frozen=True)
class Zero:
    def to_text(self) -> str:
        return "0"


@dataclass(frozen=True)
class One:
    def to_text(self) -> str:
        return "1"


@dataclass(frozen=True)
class PortAtom:
    port: TypedPort

    def to_text(self) -> str:
        return str(self.port)


@dataclass(frozen=True)
class Union:
    left: "AiTerm"
    right: "AiTerm"

    def to_text(self) -> str:
        return f"{self.left.to_text()} + {self.right.to_text()}"


@dataclass(frozen=True)
class Sync:
    left: "AiTerm"
    right: "AiTerm"

    def to_text(self) -> str:
        return f"{_factor(self.left)} * {_factor(self.right)}"


AiTerm = _U[Zero, One, PortAtom, Union, Sync]


def _factor(term: AiTerm) -> str:
    if isinstance(term, Union):
        return f"({term.to_text()})"
    return term.to_text()


def ai_sum(terms: Iterable[AiTerm]) -> AiTerm:
    result: AiTerm | None = None
    for term in terms:
        result = term if result is None else Union(result, term)
    return Zero() if result is None else result


def ai_product(terms: Iterable[AiTerm]) -> AiTerm:
    result: AiTerm | None = None
    for term in terms:
        result = term if result is None else Sync(result, term)
    return One() if result is None else result


def ai_ports(term: AiTerm) -> frozenset[str]:
    if isinstance(term, PortAtom):
        return frozenset({term.port.port})
    if isinstance(term, (Union, Sync)):
        return ai_ports(term.left) | ai_ports(term.right)
    return frozenset()


def _evaluate(term: AiTerm):
    if isinstance(term, Zero):
        return frozenset()
    if isinstance(term, One):
        return frozenset({ONE})
    if isinstance(term, PortAtom):
        return frozenset({canonicalize_interaction([term.port])})
    if isinstance(term, Union):
        return _evaluate(term.left) | _evaluate(term.right)
    if isinstance(term, Sync):
        return sync_product(_evaluate(term.left), _evaluate(term.right))
    raise TypeError(f"not an AI term: {term!r}")


def eval_ai(term: AiTerm, universe: Iterable[str] | None = None) -> InteractionSet:
    """Interaction semantics of an AI term.

    ``0`` denotes the empty set, ``1`` the set holding the empty interaction,
    ``+`` is set union and synchronisation is the pairwise union of
    interactions, with contradictory results dropped.

    Args:
        term: the term to evaluate
        universe: port universe of the result; defaults to the ports of the term

    Returns:
        the canonical interaction set
    """
    ports = ai_ports(term)
    if universe is not None:
        ports = ports | frozenset(universe)
    return InteractionSet.of(_evaluate(term), ports)
