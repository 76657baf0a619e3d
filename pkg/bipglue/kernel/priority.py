"""Priority models and their translation into negative port typings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Iterable

import networkx as nx
from loguru import logger

from bipglue.errors import PriorityOrderError
from bipglue.kernel.interaction import Interaction, InteractionSet
from bipglue.kernel.ports import check_universe

PortSet = frozenset[str]


@dataclass(frozen=True)
class PriorityModel:
    """A strict partial order on interactions, given by generating pairs ``lower < higher``."""

    pairs: frozenset[tuple[PortSet, PortSet]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        pairs = frozenset(
            (check_universe(lower), check_universe(higher)) for lower, higher in self.pairs
        )
        object.__setattr__(self, "pairs", pairs)
        graph = self.to_graph()
        loops = [lower for lower, higher in pairs if lower == higher]
        if loops:
            raise PriorityOrderError(f"priority is not irreflexive at {sorted(loops[0])}")
        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise PriorityOrderError(f"priority has a cycle: {[sorted(u) for u, _ in cycle]}")

    @classmethod
    def of(cls, pairs: Iterable[tuple[Iterable[str], Iterable[str]]]) -> "PriorityModel":
        return cls(frozenset((frozenset(lo), frozenset(hi)) for lo, hi in pairs))

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_edges_from(self.pairs)
        return graph

    def closure(self) -> frozenset[tuple[PortSet, PortSet]]:
        graph = nx.transitive_closure_dag(self.to_graph())
        return frozenset(graph.edges())

    def dominators(self, a: Iterable[str]) -> list[PortSet]:
        """Interactions strictly above ``a`` in the transitive closure, sorted."""
        a = frozenset(a)
        graph = self.to_graph()
        if a not in graph:
            return []
        return sorted(nx.descendants(graph, a), key=lambda b: sorted(b))

    @property
    def ports(self) -> frozenset[str]:
        out: set[str] = set()
        for lower, higher in self.pairs:
            out |= lower | higher
        return frozenset(out)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pairs": [
                {"lower": sorted(lower), "higher": sorted(higher)}
                for lower, higher in sorted(self.pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))
            ]
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PriorityModel":
        return cls.of((item["lower"], item["higher"]) for item in data.get("pairs", []))


def translate_priority(
    gamma: Iterable[Iterable[str]],
    prec: PriorityModel,
    universe: Iterable[str] | None = None,
) -> InteractionSet:
    """Replace a priority model by negative typings.

    Each ``a`` dominated by ``b_1 .. b_m`` becomes every ``a!`` extended with
    one negated port chosen from each ``b_i``; undominated interactions become
    their firing lift. Choices that negate a port of ``a`` itself are
    contradictions and vanish.
    """
    gamma = [frozenset(a) for a in gamma]
    ports: set[str] = set().union(*gamma) if gamma else set()
    ports |= prec.ports
    if universe is not None:
        ports |= set(universe)
    out = []
    for a in gamma:
        higher = prec.dominators(a)
        if not higher:
            out.append(Interaction.of(fire=a))
            continue
        choices = list(itertools.product(*(sorted(b) for b in higher)))
        out.extend(Interaction.of(fire=a, neg=choice) for choice in choices)
        logger.debug("priority over {} expands into {} choices", sorted(a), len(choices))
    return InteractionSet.of(out, ports)
