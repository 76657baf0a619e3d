"""Labelled transition systems with offer predicates.

Every state implicitly carries the idle self-loop labelled by the empty set;
it is never stored. A behaviour's offer predicate must contain every port of
every outgoing transition (closure); it may offer more.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable

import networkx as nx

from bipglue.errors import BehaviourError
from bipglue.kernel.ports import check_universe


@dataclass(frozen=True)
class Transition:
    source: str
    label: frozenset[str]
    target: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, frozenset):
            object.__setattr__(self, "label", frozenset(self.label))

    @property
    def sort_key(self) -> tuple[str, tuple[str, ...], str]:
        return (self.source, tuple(sorted(self.label)), self.target)

    def to_dict(self) -> dict[str, Any]:
        return {"from": self.source, "label": sorted(self.label), "to": self.target}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Transition":
        return cls(str(data["from"]), frozenset(data["label"]), str(data["to"]))



def _key(t: Transition):
    return t.sort_key


@dataclass(frozen=True)
class Lts:
    states: frozenset[str]
    ports: frozenset[str]
    transitions: frozenset[Transition]
    initial: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", frozenset(str(s) for s in self.states))
        object.__setattr__(self, "initial", str(self.initial))
        object.__setattr__(self, "ports", check_universe(self.ports))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        if self.initial not in self.states:
            raise BehaviourError(f"initial state {self.initial!r} is not a state")
        for t in self.transitions:
            if t.source not in self.states or t.target not in self.states:
                raise BehaviourError(f"transition {t.to_dict()} mentions an unknown state")
            if not t.label:
                raise BehaviourError(
                    f"transition from {t.source!r} has an empty label; idle steps are implicit"
                )
            if not t.label <= self.ports:
                raise BehaviourError(
                    f"transition label {sorted(t.label)} uses ports outside {sorted(self.ports)}"
                )

    def outgoing(self, state: str) -> list[Transition]:
        return sorted((t for t in self.transitions if t.source == state), key=_key)

    def successors(self, state: str, label: frozenset[str]) -> list[str]:
        return sorted(t.target for t in self.transitions if t.source == state and t.label == label)

    def to_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        for state in sorted(self.states):
            graph.add_node(state, initial=state == self.initial)
        for t in sorted(self.transitions, key=_key):
            graph.add_edge(t.source, t.target, label=t.label)
        return graph

    def reachable(self) -> frozenset[str]:
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            state = queue.popleft()
            for t in self.transitions:
                if t.source == state and t.target not in seen:
                    seen.add(t.target)
                    queue.append(t.target)
        return frozenset(seen)


@dataclass(frozen=True)
class Behaviour:
    lts: Lts
    offer: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        object.__setattr__(self, "offer", frozenset(self.offer))
        for state, port in self.offer:
            if state not in self.lts.states:
                raise BehaviourError(f"offer mentions unknown state {state!r}")
            if port not in self.lts.ports:
                raise BehaviourError(f"offer mentions unknown port {port!r}")
        missing = _closure(self.lts) - self.offer
        if missing:
            state, port = sorted(missing)[0]
            raise BehaviourError(
                f"port {port!r} fires from state {state!r} but is not offered there"
            )

    @property
    def states(self) -> frozenset[str]:
        return self.lts.states

    @property
    def ports(self) -> frozenset[str]:
        return self.lts.ports

    @property
    def initial(self) -> str:
        return self.lts.initial

    @property
    def transitions(self) -> frozenset[Transition]:
        return self.lts.transitions

    def offered(self, state: str) -> frozenset[str]:
        return frozenset(port for s, port in self.offer if s == state)

    def enabled(self, state: str) -> frozenset[frozenset[str]]:
        return frozenset(t.label for t in self.lts.transitions if t.source == state)

    def is_atomic(self) -> bool:
        """Whether a port is offered exactly when some transition through it is enabled."""
        return self.offer == _closure(self.lts)

    def restricted_to_reachable(self) -> "Behaviour":
        keep = self.lts.reachable()
        lts = Lts(
            keep,
            self.lts.ports,
            frozenset(t for t in self.lts.transitions if t.source in keep),
            self.lts.initial,
        )
        return Behaviour(lts, frozenset((s, p) for s, p in self.offer if s in keep))

    def to_dict(self) -> dict[str, Any]:
        closure = _closure(self.lts)
        return {
            "states": sorted(self.lts.states),
            "initial": self.lts.initial,
            "ports": sorted(self.lts.ports),
            "transitions": [t.to_dict() for t in sorted(self.lts.transitions, key=_key)],
            "offers": [
                {"state": s, "port": p} for s, p in sorted(self.offer - closure)
            ],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Behaviour":
        try:
            lts = Lts(
                frozenset(str(s) for s in data["states"]),
                frozenset(data["ports"]),
                frozenset(Transition.from_dict(t) for t in data.get("transitions", [])),
                str(data["initial"]),
            )
        except KeyError as error:
            raise BehaviourError(f"behaviour is missing field {error}") from error
        extra = frozenset((str(o["state"]), o["port"]) for o in data.get("offers", []))
        return offer_closure(lts, extra)


def _closure(lts: Lts) -> frozenset[tuple[str, str]]:
    return frozenset((t.source, port) for t in lts.transitions for port in t.label)


def offer_closure(lts: Lts, extra: Iterable[tuple[str, str]] = ()) -> Behaviour:
    """Smallest offer predicate containing the closure pairs of ``lts`` and ``extra``.

    With no extra pairs the result is atomic: a port is offered iff some
    transition through it is enabled.
    """
    extra = frozenset(extra)
    for state, port in extra:
        if state not in lts.states:
            raise BehaviourError(f"extra offer mentions unknown state {state!r}")
        if port not in lts.ports:
            raise BehaviourError(f"extra offer mentions unknown port {port!r}")
    return Behaviour(lts, _closure(lts) | extra)


def atomic(
    states: Iterable[str],
    transitions: Iterable[tuple[str, Iterable[str], str]],
    initial: str,
    ports: Iterable[str] | None = None,
) -> Behaviour:
    """Convenience constructor for an atomic behaviour from ``(source, label, target)`` triples."""
    moves = frozenset(Transition(str(s), frozenset(label), str(t)) for s, label, t in transitions)
    used = frozenset().union(*(t.label for t in moves)) if moves else frozenset()
    lts = Lts(frozenset(str(s) for s in states), used if ports is None else frozenset(ports) | used, moves, str(initial))
    return offer_closure(lts)
