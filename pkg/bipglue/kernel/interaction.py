"""Canonical typed interactions and finite sets of them.

An interaction keeps three disjoint port sets. Firing absorbs activation on
the same port (``p! p = p!``); a negative typing next to any positive typing
of the same port is a contradiction and equals the constant 0 (``p -p = 0``).
The empty interaction is the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator

from bipglue.errors import GlueError
from bipglue.kernel.ports import TypedPort, Typing, check_port_name, check_universe


class Contradiction:
    """The value of an interaction with conflicting typings; equal to 0."""

    __slots__ = ()
    _instance: "Contradiction | None" = None

    def __new__(cls) -> "Contradiction":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def merge(self, other: "Interaction | Contradiction") -> "Contradiction":
        return self

    @property
    def ports(self) -> frozenset[str]:
        return frozenset()

    def to_text(self) -> str:
        return "0"

    def __repr__(self) -> str:
        return "CONTRADICTION"

    def __reduce__(self):
        return (Contradiction, ())


CONTRADICTION = Contradiction()


def _names(ports: Iterable[str]) -> frozenset[str]:
    return frozenset(check_port_name(p) for p in ports)


@dataclass(frozen=True)
class Interaction:
    fire: frozenset[str] = field(default_factory=frozenset)
    act: frozenset[str] = field(default_factory=frozenset)
    neg: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for name in ("fire", "act", "neg"):
            value = getattr(self, name)
            if not isinstance(value, frozenset):
                object.__setattr__(self, name, _names(value))
        if self.fire & self.act or self.fire & self.neg or self.act & self.neg:
            raise GlueError(
                "interaction supports must be disjoint; use Interaction.of() to canonicalize"
            )

    @classmethod
    def of(
        cls,
        fire: Iterable[str] = (),
        act: Iterable[str] = (),
        neg: Iterable[str] = (),
    ) -> "Interaction | Contradiction":
        fire_set, act_set, neg_set = _names(fire), _names(act), _names(neg)
        if neg_set & (fire_set | act_set):
            return CONTRADICTION
        return cls(fire_set, act_set - fire_set, neg_set)

    @property
    def ports(self) -> frozenset[str]:
        return self.fire | self.act | self.neg

    @property
    def is_one(self) -> bool:
        return not (self.fire or self.act or self.neg)

    def typed_ports(self) -> tuple[TypedPort, ...]:
        items = [TypedPort(p, Typing.FIRE) for p in self.fire]
        items += [TypedPort(p, Typing.ACT) for p in self.act]
        items += [TypedPort(p, Typing.NEG) for p in self.neg]
        return tuple(sorted(items))

    def typing_of(self, port: str) -> Typing | None:
        if port in self.fire:
            return Typing.FIRE
        if port in self.act:
            return Typing.ACT
        if port in self.neg:
            return Typing.NEG
        return None

    def contains(self, typed: TypedPort) -> bool:
        """Whether the valuation of this interaction makes ``typed`` true (fire implies act)."""
        if typed.typing is Typing.FIRE:
            return typed.port in self.fire
        if typed.typing is Typing.ACT:
            return typed.port in self.act or typed.port in self.fire
        return typed.port in self.neg

    def merge(self, other: "Interaction | Contradiction") -> "Interaction | Contradiction":
        if other is CONTRADICTION:
            return CONTRADICTION
        return Interaction.of(self.fire | other.fire, self.act | other.act, self.neg | other.neg)

    def add(self, typed: TypedPort) -> "Interaction | Contradiction":
        return self.merge(canonicalize_interaction([typed]))

    def without_port(self, port: str) -> "Interaction":
        return Interaction(self.fire - {port}, self.act - {port}, self.neg - {port})

    def issubset(self, other: "Interaction") -> bool:
        """Componentwise inclusion of the three supports."""
        return self.fire <= other.fire and self.act <= other.act and self.neg <= other.neg

    def covers(self, monomial: "Interaction") -> bool:
        """Whether this interaction satisfies ``monomial`` read as a conjunction of typed variables."""
        return (
            monomial.fire <= self.fire
            and monomial.act <= (self.act | self.fire)
            and monomial.neg <= self.neg
        )

    @property
    def sort_key(self) -> tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]:
        return (tuple(sorted(self.fire)), tuple(sorted(self.act)), tuple(sorted(self.neg)))

    def __lt__(self, other: "Interaction") -> bool:
        if not isinstance(other, Interaction):
            return NotImplemented
        return self.sort_key < other.sort_key

    def to_text(self) -> str:
        if self.is_one:
            return "1"
        return " ".join(str(tp) for tp in self.typed_ports())

    def __str__(self) -> str:
        return self.to_text()

    def to_dict(self) -> dict[str, list[str]]:
        return {
            "fire": sorted(self.fire),
            "act": sorted(self.act),
            "neg": sorted(self.neg),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Interaction | Contradiction":
        unknown = set(data) - {"fire", "act", "neg"}
        if unknown:
            raise GlueError(f"unknown interaction keys: {sorted(unknown)}")
        return cls.of(data.get("fire", ()), data.get("act", ()), data.get("neg", ()))


ONE = Interaction()


def canonicalize_interaction(raw: Iterable[TypedPort]) -> Interaction | Contradiction:
    """Build the canonical interaction of a set of typed ports.

    Firing absorbs activation on the same port; a negative typing together
    with any positive typing of the same port yields ``CONTRADICTION``.
    """
    fire: set[str] = set()
    act: set[str] = set()
    neg: set[str] = set()
    for typed in raw:
        if typed.typing is Typing.FIRE:
            fire.add(typed.port)
        elif typed.typing is Typing.ACT:
            act.add(typed.port)
        else:
            neg.add(typed.port)
    return Interaction.of(fire, act, neg)


def sync_product(
    left: Iterable[Interaction], right: Iterable[Interaction]
) -> frozenset[Interaction]:
    right = tuple(right)
    out: set[Interaction] = set()
    for a in left:
        for b in right:
            merged = a.merge(b)
            if merged is not CONTRADICTION:
                out.add(merged)
    return frozenset(out)


@dataclass(frozen=True)
class InteractionSet:
    interactions: frozenset[Interaction] = field(default_factory=frozenset)
    universe: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.interactions, frozenset):
            object.__setattr__(self, "interactions", frozenset(self.interactions))
        if not isinstance(self.universe, frozenset):
            object.__setattr__(self, "universe", check_universe(self.universe))
        for item in self.interactions:
            if not isinstance(item, Interaction):
                raise GlueError(f"interaction sets hold Interaction values, got {item!r}")
            outside = item.ports - self.universe
            if outside:
                raise GlueError(f"ports {sorted(outside)} are outside the universe")

    @classmethod
    def of(
        cls,
        items: Iterable[Interaction | Contradiction],
        universe: Iterable[str] | None = None,
    ) -> "InteractionSet":
        """Collect ``items``, dropping contradictions; the universe defaults to the mentioned ports."""
        kept = frozenset(item for item in items if item is not CONTRADICTION)
        mentioned = frozenset().union(*(item.ports for item in kept)) if kept else frozenset()
        ports = mentioned if universe is None else check_universe(universe)
        return cls(kept, ports)

    def __iter__(self) -> Iterator[Interaction]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.interactions)

    def __contains__(self, item: object) -> bool:
        return item in self.interactions

    def sorted(self) -> list[Interaction]:
        return sorted(self.interactions, key=lambda a: a.sort_key)

    @property
    def mentioned_ports(self) -> frozenset[str]:
        return frozenset().union(*(a.ports for a in self.interactions)) if self.interactions else frozenset()

    def widen(self, universe: Iterable[str]) -> "InteractionSet":
        return InteractionSet(self.interactions, self.universe | check_universe(universe))

    def union(self, other: "InteractionSet") -> "InteractionSet":
        return InteractionSet(self.interactions | other.interactions, self.universe | other.universe)

    def product(self, other: "InteractionSet") -> "InteractionSet":
        return InteractionSet(
            sync_product(self.interactions, other.interactions), self.universe | other.universe
        )

    def filter(self, predicate) -> "InteractionSet":
        return InteractionSet(frozenset(a for a in self.interactions if predicate(a)), self.universe)

    def to_text(self) -> str:
        return "{" + ", ".join(a.to_text() for a in self.sorted()) + "}"

    def __str__(self) -> str:
        return self.to_text()

    def to_dict(self) -> dict[str, Any]:
        return {
            "universe": sorted(self.universe),
            "interactions": [a.to_dict() for a in self.sorted()],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any] | list) -> "InteractionSet":
        if isinstance(data, list):
            return cls.of(Interaction.from_dict(item) for item in data)
        items = [Interaction.from_dict(item) for item in data.get("interactions", [])]
        return cls.of(items, data.get("universe"))


def firing_lift(gamma: Iterable[Iterable[str]], universe: Iterable[str] | None = None) -> InteractionSet:
    """Turn plain interactions (port sets) into firing-only typed interactions."""
    return InteractionSet.of((Interaction.of(fire=ports) for ports in gamma), universe)
