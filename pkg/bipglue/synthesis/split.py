"""From a closed constraint to a disjunction of firing-only causal rule systems.

The constraint is put in CNF. A clause without negated firing literals
but with some firing literal constrains every interaction, so it joins the
cause of ``tt``; a clause with exactly one negated firing literal ``e!``
is a rule for ``e!``. The remaining clauses, with several negated firing
literals or with no firing literal at all, are removed by case splitting
on their most frequent variable:

  * a firing variable ``x!`` splits into ``tt => x!`` (with ``x`` active
    and not negative) and ``x! => ff``;
  * an activation or negative variable ``L`` occurs only positively, so
    ``phi`` equals ``(L & phi[L := tt]) | phi[L := ff]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from loguru import logger

from bipglue.config import GlueConfig, resolve
from bipglue.errors import SplitLimitError
from bipglue.kernel.interaction import canonicalize_interaction
from bipglue.kernel.ports import TypedPort, Typing
from bipglue.rules.cause import TT, TT_EFFECT, CauseFormula, conjoin
from bipglue.rules.system import FIRING_ONLY, CausalRuleSystem, minimal_models
from bipglue.synthesis.closure import close_formula, split_axioms
from bipglue.synthesis.formula import (
    Clause,
    Formula,
    Literal,
    cnf_clauses,
    conj,
    formula_ports,
    is_tautology,
)


def _negated_fires(clause: Clause) -> list[TypedPort]:
    return sorted(p for p, positive in clause if not positive and p.typing is Typing.FIRE)


def _is_offending(clause: Clause) -> bool:
    if len(_negated_fires(clause)) >= 2:
        return True
    if any(not positive and p.typing is not Typing.FIRE for p, positive in clause):
        return True
    return not any(p.typing is Typing.FIRE for p, _ in clause)


def _assign(port: TypedPort, value: bool) -> dict[TypedPort, bool]:
    """The assignment of ``port`` together with what the typing axioms force."""
    out = {port: value}
    if value and port.typing is Typing.FIRE:
        out[TypedPort(port.port, Typing.ACT)] = True
        out[TypedPort(port.port, Typing.NEG)] = False
    elif value and port.typing is Typing.ACT:
        out[TypedPort(port.port, Typing.NEG)] = False
    elif value and port.typing is Typing.NEG:
        out[TypedPort(port.port, Typing.ACT)] = False
        out[TypedPort(port.port, Typing.FIRE)] = False
    return out


def _substitute(clauses: Iterable[Clause], values: dict[TypedPort, bool]) -> list[Clause] | None:
    """Simplify under ``values``; None when some clause becomes false."""
    out = []
    for clause in clauses:
        if any(port in values and values[port] == positive for port, positive in clause):
            continue
        rest = frozenset((p, s) for p, s in clause if p not in values)
        if not rest:
            return None
        out.append(rest)
    return out


@dataclass
class _Branch:
    clauses: list[Clause]
    forced: list[Literal] = field(default_factory=list)
    never: list[str] = field(default_factory=list)


def _child(branch: _Branch, values: dict[TypedPort, bool], forced: TypedPort | None) -> _Branch | None:
    clauses = _substitute(branch.clauses, values)
    if clauses is None:
        return None
    never = branch.never + [p.port for p, v in values.items() if not v and p.typing is Typing.FIRE]
    literals = branch.forced + ([(forced, True)] if forced is not None else [])
    return _Branch(clauses, literals, never)


def _monomial(literals: Iterable[Literal]) -> CauseFormula:
    return CauseFormula.of(canonicalize_interaction([p]) for p, _ in literals)


def _system(branch: _Branch, universe: frozenset[str]) -> CausalRuleSystem:
    tt_parts: list[CauseFormula] = []
    by_effect: dict[TypedPort, list[CauseFormula]] = {}
    for clause in branch.clauses:
        negated = _negated_fires(clause)
        positives = [lit for lit in clause if lit[1]]
        if negated:
            by_effect.setdefault(negated[0], []).append(_monomial(positives))
        else:
            tt_parts.append(_monomial(positives))
    for port, _ in branch.forced:
        tt_parts.append(CauseFormula.of([canonicalize_interaction([port])]))
    rules: dict = {TT_EFFECT: conjoin(tt_parts)}
    for port in sorted(universe):
        effect = TypedPort(port, Typing.FIRE)
        if port in branch.never:
            rules[effect] = CauseFormula()
        else:
            rules[effect] = conjoin(by_effect.get(effect, [TT]))
    return CausalRuleSystem.of(rules, universe, FIRING_ONLY)


def _pick(clauses: list[Clause]) -> TypedPort:
    counts = Counter(port for clause in clauses if _is_offending(clause) for port, _ in clause)
    best = max(counts.values())
    return min(port for port, n in counts.items() if n == best)


def to_rule_systems(phi: Formula, *, config: GlueConfig | None = None) -> list[CausalRuleSystem]:
    """Firing-only rule systems whose disjunction is ``phi``; empty systems are dropped.

    Raises:
        SplitLimitError: more than ``max_splits`` case splits are needed
    """
    config = resolve(config)
    closed = close_formula(phi)
    _, rest = split_axioms(closed)
    body = conj(rest)
    universe = formula_ports(closed)
    clauses = [c for c in cnf_clauses(body) if not is_tautology(c)]
    if any(not c for c in clauses):
        logger.debug("constraint is unsatisfiable")
        return []
    pending = [_Branch(clauses)]
    done: list[_Branch] = []
    splits = 0
    while pending:
        branch = pending.pop()
        if not any(_is_offending(c) for c in branch.clauses):
            done.append(branch)
            continue
        splits += 1
        if splits > config.max_splits:
            raise SplitLimitError(
                f"constraint needs more than {config.max_splits} case splits; raise max_splits"
            )
        var = _pick(branch.clauses)
        logger.debug("case split {} on {}", splits, var)
        high = _child(branch, _assign(var, True), var)
        low = _child(branch, {var: False}, None)
        # low is pushed first so the high branch is explored first
        pending.extend(child for child in (low, high) if child is not None)
    systems: list[CausalRuleSystem] = []
    for branch in done:
        system = _system(branch, universe)
        if not minimal_models(system, config=config):
            logger.debug("dropping a system without firing models")
            continue
        if system not in systems:
            systems.append(system)
    logger.debug("{} rule systems after {} splits", len(systems), splits)
    return systems
