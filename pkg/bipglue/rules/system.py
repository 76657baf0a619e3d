"""Systems of causal rules and their interaction semantics."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from loguru import logger

from bipglue.config import GlueConfig
from bipglue.errors import FormulaShapeError
from bipglue.kernel.equivalence import check_cap
from bipglue.kernel.interaction import CONTRADICTION, Interaction, InteractionSet
from bipglue.kernel.ports import TypedPort, Typing, check_universe
from bipglue.rules.cause import (
    FF,
    TT_EFFECT,
    CauseFormula,
    Effect,
    absorb,
    effect_key,
    effect_text,
)

FULL = "full"
FIRING_ONLY = "firing_only"


def effect_universe(universe: Iterable[str], mode: str) -> tuple[Effect, ...]:
    ports = sorted(universe)
    if mode == FIRING_ONLY:
        effects: list[Effect] = [TypedPort(p, Typing.FIRE) for p in ports]
    elif mode == FULL:
        effects = [TypedPort(p, typing) for p in ports for typing in Typing]
    else:
        raise FormulaShapeError(f"unknown rule system mode {mode!r}")
    return (TT_EFFECT, *sorted(effects))


def _own_port_free(effect: Effect, cause: CauseFormula) -> CauseFormula:
    """Rewrite a cause under the assumption that its effect holds.

    A firing effect makes its own port active and not negative; an
    activation effect rules out the negative typing; a negative effect
    rules out both positive ones.
    """
    if effect == TT_EFFECT:
        return cause
    port = effect.port
    kept = []
    for m in cause.monomials:
        typing = m.typing_of(port)
        if typing is None:
            kept.append(m)
        elif typing is effect.typing or (effect.typing is Typing.FIRE and typing is Typing.ACT):
            kept.append(m.without_port(port))
        elif effect.typing is Typing.ACT and typing is Typing.FIRE:
            kept.append(m)
    return CauseFormula(frozenset(kept))


@dataclass(frozen=True)
class CausalRuleSystem:
    """Exactly one cause per effect; ``|R|`` is the set of interactions satisfying every rule."""

    rules: tuple[tuple[Effect, CauseFormula], ...]
    universe: frozenset[str] = field(default_factory=frozenset)
    mode: str = FIRING_ONLY

    def __post_init__(self) -> None:
        object.__setattr__(self, "universe", check_universe(self.universe))
        ordered = tuple(sorted(self.rules, key=lambda item: effect_key(item[0])))
        object.__setattr__(self, "rules", ordered)
        effects = [effect for effect, _ in ordered]
        expected = list(effect_universe(self.universe, self.mode))
        if effects != expected:
            missing = [effect_text(e) for e in expected if e not in effects]
            extra = [effect_text(e) for e in effects if e not in expected]
            raise FormulaShapeError(
                f"a {self.mode} system needs one rule per effect; missing {missing}, unexpected {extra}"
            )
        for effect, cause in ordered:
            outside = cause.ports - self.universe
            if outside:
                raise FormulaShapeError(
                    f"cause of {effect_text(effect)} uses ports {sorted(outside)} outside the universe"
                )

    @classmethod
    def of(
        cls,
        rules: Mapping[Effect, CauseFormula],
        universe: Iterable[str] | None = None,
        mode: str = FIRING_ONLY,
    ) -> "CausalRuleSystem":
        """Complete ``rules`` with ``ff`` for unlisted effects and drop self references."""
        ports = set(universe or ())
        for effect, cause in rules.items():
            ports |= cause.ports
            if effect != TT_EFFECT:
                ports.add(effect.port)
        given = dict(rules)
        filled = []
        for effect in effect_universe(ports, mode):
            cause = given.pop(effect, FF)
            filled.append((effect, _own_port_free(effect, cause)))
        if given:
            raise FormulaShapeError(
                f"effects {[effect_text(e) for e in given]} are not allowed in a {mode} system"
            )
        return cls(tuple(filled), frozenset(ports), mode)

    def __iter__(self) -> Iterator[tuple[Effect, CauseFormula]]:
        return iter(self.rules)

    def cause(self, effect: Effect) -> CauseFormula:
        for candidate, cause in self.rules:
            if candidate == effect:
                return cause
        raise KeyError(effect_text(effect))

    def as_dict(self) -> dict[Effect, CauseFormula]:
        return dict(self.rules)

    def satisfied_by(self, a: Interaction) -> bool:
        for effect, cause in self.rules:
            if (effect == TT_EFFECT or a.contains(effect)) and not cause.holds(a):
                return False
        return True

    def with_universe(self, universe: Iterable[str]) -> "CausalRuleSystem":
        return CausalRuleSystem.of(self.as_dict(), self.universe | frozenset(universe), self.mode)


def all_interactions(universe: Iterable[str]) -> Iterator[Interaction]:
    """Every canonical interaction over ``universe``: each port absent, active, firing or negative."""
    ports = sorted(universe)
    for choice in itertools.product(range(4), repeat=len(ports)):
        fire = [p for p, c in zip(ports, choice) if c == 1]
        act = [p for p, c in zip(ports, choice) if c == 2]
        neg = [p for p, c in zip(ports, choice) if c == 3]
        yield Interaction(frozenset(fire), frozenset(act), frozenset(neg))


def eval_rules(r: CausalRuleSystem, *, config: GlueConfig | None = None) -> InteractionSet:
    """``|R|`` by exhaustive enumeration of the typed universe."""
    check_cap(r.universe, config, "rule evaluation")
    models = [a for a in all_interactions(r.universe) if r.satisfied_by(a)]
    logger.debug("rule system over {} ports has {} models", len(r.universe), len(models))
    return InteractionSet.of(models, r.universe)


def minimal_models(r: CausalRuleSystem, *, config: GlueConfig | None = None) -> InteractionSet:
    """The normalised ``|R|`` of a firing-only system, one firing set at a time.

    For a firing set ``F`` every triggered cause must pick a monomial whose
    firing ports lie in ``F`` and whose negative ports avoid ``F``; what is
    left are activation and negative demands on the silent ports. The
    minimal consistent combinations of those demands are the minimal
    interactions firing exactly ``F``.
    """
    if r.mode != FIRING_ONLY:
        raise FormulaShapeError("minimal models are computed for firing-only systems")
    causes = r.as_dict()
    candidates = sorted(
        e.port for e in causes if e != TT_EFFECT and not causes[e].is_ff
    )
    check_cap(candidates, config, "minimal model search")
    out: list[Interaction] = []
    for size in range(1, len(candidates) + 1):
        for fired in itertools.combinations(candidates, size):
            fire = frozenset(fired)
            triggered = [causes[TT_EFFECT]] + [causes[TypedPort(p, Typing.FIRE)] for p in fired]
            demands = frozenset({Interaction()})
            for cause in triggered:
                options = frozenset(
                    Interaction(frozenset(), m.act - fire, m.neg)
                    for m in cause.monomials
                    if m.fire <= fire and not m.neg & fire
                )
                demands = _combine(demands, options)
                if not demands:
                    break
            for demand in demands:
                out.append(Interaction(fire, demand.act, demand.neg))
    logger.debug("{} minimal models over {} candidate firing ports", len(out), len(candidates))
    return InteractionSet.of(out, r.universe)


def _combine(left: frozenset[Interaction], right: frozenset[Interaction]) -> frozenset[Interaction]:
    merged = (a.merge(b) for a in left for b in right)
    return absorb(m for m in merged if m is not CONTRADICTION)


def simplify_rules(r: CausalRuleSystem) -> CausalRuleSystem:
    """Absorption inside every cause; ``ff`` rules stay explicit."""
    return CausalRuleSystem(
        tuple((effect, cause.simplified()) for effect, cause in r.rules), r.universe, r.mode
    )
