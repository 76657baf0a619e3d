"""Priority restriction of composed behaviours."""

from __future__ import annotations

from typing import Callable

from loguru import logger

from bipglue.behavior.lts import Behaviour, Lts
from bipglue.kernel.priority import PriorityModel

__all__ = ["PriorityModel", "restrict_priority_classical", "restrict_priority_offer"]


def _restrict(
    b: Behaviour, prec: PriorityModel, blocks: Callable[[str, frozenset[str]], bool]
) -> Behaviour:
    if not prec:
        return b
    kept = []
    for t in b.transitions:
        if any(blocks(t.source, higher) for higher in prec.dominators(t.label)):
            logger.debug("priority inhibits {} at {}", sorted(t.label), t.source)
            continue
        kept.append(t)
    lts = Lts(b.states, b.ports, frozenset(kept), b.initial)
    return Behaviour(lts, b.offer).restricted_to_reachable()


def restrict_priority_classical(b: Behaviour, prec: PriorityModel) -> Behaviour:
    """Drop ``q -a-> q'`` whenever some ``a' > a`` labels a transition enabled at ``q``."""
    return _restrict(b, prec, lambda state, higher: higher in b.enabled(state))


def restrict_priority_offer(b: Behaviour, prec: PriorityModel) -> Behaviour:
    """Drop ``q -a-> q'`` whenever ``q`` offers every port of some ``a' > a``.

    Offered ports need not be able to fire, so a higher interaction that is
    offered but blocked still inhibits ``a``.
    """
    return _restrict(b, prec, lambda state, higher: higher <= b.offered(state))
