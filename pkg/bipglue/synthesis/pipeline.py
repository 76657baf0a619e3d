"""Constraint to connectors: rule systems, causal trees, connectors."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.connectors.term import ConnectorTerm
from bipglue.connectors.transform import sigma
from bipglue.errors import FormulaShapeError
from bipglue.kernel.equivalence import PortConfig, PortState, check_cap
from bipglue.kernel.interaction import CONTRADICTION, Interaction, InteractionSet
from bipglue.kernel.ports import TypedPort, Typing
from bipglue.rules.cause import absorb
from bipglue.rules.reconstruct import tree_of_rules
from bipglue.rules.system import CausalRuleSystem, all_interactions
from bipglue.synthesis.formula import (
    Clause,
    Formula,
    cnf_clauses,
    evaluate,
    formula_ports,
    holds_in,
    is_tautology,
)
from bipglue.synthesis.split import to_rule_systems
from bipglue.trees.tree import CausalTree, eval_tree


def _options(clause: Clause, fire: frozenset[str]) -> frozenset[Interaction] | None:
    """Ways to satisfy ``clause`` when exactly ``fire`` fires; None when already satisfied."""
    out = set()
    for port, positive in clause:
        name = port.port
        if port.typing is Typing.FIRE:
            if (name in fire) == positive:
                return None
        elif not positive:
            raise FormulaShapeError(
                f"negated literal {port} needs a closed formula; close it first"
            )
        elif port.typing is Typing.ACT:
            if name in fire:
                return None
            out.add(Interaction(act=frozenset({name})))
        elif name not in fire:
            out.add(Interaction(neg=frozenset({name})))
    return frozenset(out)


def _minimal_models(phi: Formula, ports: list[str]) -> list[Interaction]:
    clauses = [c for c in cnf_clauses(phi) if not is_tautology(c)]
    out: list[Interaction] = []
    for size in range(1, len(ports) + 1):
        for fired in itertools.combinations(ports, size):
            fire = frozenset(fired)
            demands = frozenset({Interaction()})
            for clause in clauses:
                options = _options(clause, fire)
                if options is None:
                    continue
                merged = (a.merge(b) for a in demands for b in options)
                demands = absorb(m for m in merged if m is not CONTRADICTION)
                if not demands:
                    break
            out.extend(Interaction(fire, d.act, d.neg) for d in demands)
    return out


def satisfying_set(
    phi: Formula,
    *,
    universe: Iterable[str] | None = None,
    minimal: bool = False,
    config: GlueConfig | None = None,
) -> InteractionSet:
    """Interactions whose characteristic valuation satisfies ``phi``.

    With ``minimal`` only the componentwise-minimal interactions of each
    non-empty firing set are listed, which is the normal form of the
    exact set. That mode reads negated activation or negative literals as
    an error, so ``phi`` should be closed.
    """
    ports = sorted(formula_ports(phi) | frozenset(universe or ()))
    check_cap(ports, config, "satisfying set")
    if minimal:
        models = _minimal_models(phi, ports)
    else:
        models = [a for a in all_interactions(ports) if holds_in(phi, a)]
    return InteractionSet.of(models, ports)


def config_predicate(phi: Formula) -> Callable[[PortConfig], bool]:
    """``phi`` read over port configurations; ports outside the configuration are silent."""

    def holds(cfg: PortConfig) -> bool:
        def value(port: TypedPort) -> bool:
            try:
                state = cfg[port.port]
            except KeyError:
                state = PortState.SILENT
            if port.typing is Typing.FIRE:
                return state is PortState.FIRE
            if port.typing is Typing.ACT:
                return state is not PortState.SILENT
            return state is PortState.SILENT

        return evaluate(phi, value)

    return holds


@dataclass(frozen=True)
class SynthesisResult:
    universe: frozenset[str]
    systems: tuple[CausalRuleSystem, ...] = field(default_factory=tuple)
    trees: tuple[CausalTree, ...] = field(default_factory=tuple)
    connectors: tuple[ConnectorTerm, ...] = field(default_factory=tuple)

    def interactions(self) -> InteractionSet:
        """Union of the tree semantics over the constraint's ports."""
        out = InteractionSet.of([], self.universe)
        for tree in self.trees:
            out = out.union(eval_tree(tree, self.universe))
        return out


def synthesize(phi: Formula, *, config: GlueConfig | None = None) -> SynthesisResult:
    """Split ``phi`` into rule systems and turn each into a normal tree and a connector.

    Raises:
        SplitLimitError: the case split exceeds ``max_splits``
        ContractViolationError: a rebuilt tree disagrees with its rules
    """
    config = resolve(config)
    systems = to_rule_systems(phi, config=config)
    trees = tuple(tree_of_rules(r, config=config) for r in systems)
    connectors = tuple(sigma(t) for t in trees)
    for tree, connector in zip(trees, connectors):
        logger.info("synthesized {} from tree {}", connector.to_text(), tree)
    return SynthesisResult(formula_ports(phi), tuple(systems), trees, connectors)
