"""Strong and offer equivalence of interaction sets.

Offer equivalence is decided by fingerprints: for every port configuration
(each port fires, is merely offered, or is silent) the set of firing supports
that the interaction set enables must coincide. Interactions whose firing
support is empty only ever produce the implicit idle step and are ignored.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, Mapping

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.errors import EnumerationCapError, UniverseMismatchError
from bipglue.kernel.interaction import Interaction, InteractionSet


class PortState(Enum):
    FIRE = "fire"
    OFFER = "offer"
    SILENT = "silent"


@dataclass(frozen=True)
class PortConfig:
    assignment: tuple[tuple[str, PortState], ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, PortState]) -> "PortConfig":
        return cls(tuple(sorted(mapping.items())))

    def __getitem__(self, port: str) -> PortState:
        for name, state in self.assignment:
            if name == port:
                return state
        raise KeyError(port)

    @property
    def universe(self) -> frozenset[str]:
        return frozenset(name for name, _ in self.assignment)

    @property
    def fired(self) -> frozenset[str]:
        return frozenset(n for n, s in self.assignment if s is PortState.FIRE)

    @property
    def offered(self) -> frozenset[str]:
        return frozenset(n for n, s in self.assignment if s is not PortState.SILENT)

    @property
    def silent(self) -> frozenset[str]:
        return frozenset(n for n, s in self.assignment if s is PortState.SILENT)

    def __str__(self) -> str:
        return ", ".join(f"{n}={s.value}" for n, s in self.assignment)


def check_cap(universe: Iterable[str], config: GlueConfig | None, what: str) -> None:
    size = len(frozenset(universe))
    cap = resolve(config).max_ports
    if size > cap:
        raise EnumerationCapError(
            f"{what} over {size} ports exceeds the cap of {cap}; raise max_ports to opt in"
        )


def port_configs(universe: Iterable[str]) -> Iterator[PortConfig]:
    ports = sorted(universe)
    for states in itertools.product(tuple(PortState), repeat=len(ports)):
        yield PortConfig(tuple(zip(ports, states)))


def is_enabled(a: Interaction, config: PortConfig) -> bool:
    return a.fire <= config.fired and a.act <= config.offered and a.neg <= config.silent


def enabled(s: InteractionSet, config: PortConfig) -> frozenset[frozenset[str]]:
    """Firing supports of the interactions of ``s`` enabled under ``config``."""
    return frozenset(a.fire for a in s.interactions if a.fire and is_enabled(a, config))


def equiv_strong(s1: InteractionSet, s2: InteractionSet) -> bool:
    _same_universe(s1, s2)
    return s1.interactions == s2.interactions


def normalize_interaction_set(s: InteractionSet) -> InteractionSet:
    """Drop interactions that cannot change any composed behaviour.

    Interactions with an empty firing support go first; then every
    interaction that strictly contains another one with the same firing
    support is dropped. The result is the set of componentwise-minimal
    interactions of each firing group.
    """
    groups: dict[frozenset[str], list[Interaction]] = {}
    for a in s.interactions:
        if a.fire:
            groups.setdefault(a.fire, []).append(a)
    kept: set[Interaction] = set()
    for members in groups.values():
        for a in members:
            if not any(b != a and b.issubset(a) for b in members):
                kept.add(a)
    return InteractionSet(frozenset(kept), s.universe)


def _same_universe(s1: InteractionSet, s2: InteractionSet) -> None:
    if s1.universe != s2.universe:
        raise UniverseMismatchError(
            f"universes differ: {sorted(s1.universe)} vs {sorted(s2.universe)}"
        )


def _masks(s: InteractionSet, index: dict[str, int]) -> list[tuple[int, int, int, int]]:
    out = []
    for a in s.interactions:
        if not a.fire:
            continue
        fire = sum(1 << index[p] for p in a.fire)
        act = sum(1 << index[p] for p in a.act)
        neg = sum(1 << index[p] for p in a.neg)
        out.append((fire, act, neg, fire))
    return out


def _enabled_masks(masks, fired: int, offered: int, silent: int) -> frozenset[int]:
    return frozenset(
        key
        for fire, act, neg, key in masks
        if fire & ~fired == 0 and act & ~offered == 0 and neg & ~silent == 0
    )


def find_offer_witness(
    s1: InteractionSet,
    s2: InteractionSet,
    *,
    config: GlueConfig | None = None,
    assume: Callable[[PortConfig], bool] | None = None,
) -> PortConfig | None:
    """Return a port configuration on which the two sets enable different firing supports."""
    _same_universe(s1, s2)
    check_cap(s1.universe, config, "offer equivalence")
    ports = sorted(s1.universe)
    index = {p: i for i, p in enumerate(ports)}
    m1 = _masks(normalize_interaction_set(s1), index)
    m2 = _masks(normalize_interaction_set(s2), index)
    codes = {PortState.FIRE: 0, PortState.OFFER: 1, PortState.SILENT: 2}
    for states in itertools.product(tuple(PortState), repeat=len(ports)):
        fired = offered = silent = 0
        for i, state in enumerate(states):
            code = codes[state]
            if code == 0:
                fired |= 1 << i
                offered |= 1 << i
            elif code == 1:
                offered |= 1 << i
            else:
                silent |= 1 << i
        if _enabled_masks(m1, fired, offered, silent) == _enabled_masks(m2, fired, offered, silent):
            continue
        witness = PortConfig(tuple(zip(ports, states)))
        if assume is not None and not assume(witness):
            continue
        logger.debug("offer fingerprints differ at {}", witness)
        return witness
    return None


def equiv_offer(
    s1: InteractionSet,
    s2: InteractionSet,
    *,
    config: GlueConfig | None = None,
    assume: Callable[[PortConfig], bool] | None = None,
) -> bool:
    """Offer equivalence by fingerprint enumeration over all port configurations.

    Args:
        s1, s2: interaction sets over the same universe
        config: supplies the port cap (``max_ports``)
        assume: optional predicate; configurations it rejects are not compared

    Returns:
        True iff both sets enable the same firing supports under every
        (admitted) configuration
    """
    return find_offer_witness(s1, s2, config=config, assume=assume) is None
