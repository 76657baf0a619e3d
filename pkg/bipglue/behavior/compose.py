"""Product composition of behaviours under plain and typed interaction models.

Composite states are tuples of component states, named ``(s1,s2,...)``.
Only the part reachable from the initial product state is built. Both
compositions lift offers componentwise, so their results can be glued again.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Callable, Iterable, Sequence

from loguru import logger

from bipglue.behavior.lts import Behaviour, Lts, Transition
from bipglue.errors import BehaviourError
from bipglue.kernel.interaction import InteractionSet

Step = Callable[[tuple[str, ...]], Iterable[tuple[frozenset[str], tuple[str, ...]]]]


def state_name(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def _check_components(comps: Sequence[Behaviour], mentioned: frozenset[str]) -> frozenset[str]:
    if not comps:
        raise BehaviourError("composition needs at least one component")
    union: set[str] = set()
    for index, comp in enumerate(comps):
        shared = union & comp.ports
        if shared:
            raise BehaviourError(
                f"component {index} shares ports {sorted(shared)} with an earlier component"
            )
        union |= comp.ports
    outside = mentioned - union
    if outside:
        raise BehaviourError(f"glue uses ports {sorted(outside)} that no component owns")
    return frozenset(union)


def _explore(comps: Sequence[Behaviour], ports: frozenset[str], step: Step) -> Behaviour:
    start = tuple(c.initial for c in comps)
    seen = {start}
    queue = deque([start])
    moves: set[Transition] = set()
    while queue:
        current = queue.popleft()
        for label, target in step(current):
            moves.add(Transition(state_name(current), label, state_name(target)))
            if target not in seen:
                seen.add(target)
                queue.append(target)
    offer = frozenset(
        (state_name(state), port)
        for state in seen
        for comp, local in zip(comps, state)
        for port in comp.offered(local)
    )
    lts = Lts(frozenset(state_name(s) for s in seen), ports, frozenset(moves), state_name(start))
    logger.debug("composed {} components into {} states, {} transitions", len(comps), len(seen), len(moves))
    return Behaviour(lts, offer)


def _successors(comp: Behaviour, local: str, label: frozenset[str]) -> list[str]:
    if not label:
        return [local]
    return comp.lts.successors(local, label)


def compose_extended(gamma: InteractionSet, comps: Sequence[Behaviour]) -> Behaviour:
    """Compose ``comps`` under a typed interaction model.

    An interaction ``a`` moves every component that owns a port of
    ``fire(a)`` by a transition labelled exactly with its share of the
    firing support; the other components idle. Every activation port of
    ``a`` must be offered by its owner and no negative port may be. The
    composite transition is labelled ``fire(a)``. Interactions with an empty
    firing support only contribute idle steps and are skipped.
    """
    comps = list(comps)
    ports = _check_components(comps, gamma.mentioned_ports)
    owned = [c.ports for c in comps]
    moving = [a for a in gamma.sorted() if a.fire]

    def step(state: tuple[str, ...]):
        offered = [c.offered(q) for c, q in zip(comps, state)]
        for a in moving:
            if not a.act <= frozenset().union(*offered):
                continue
            if any(a.neg & o for o in offered):
                continue
            options = [_successors(c, q, a.fire & p) for c, q, p in zip(comps, state, owned)]
            for target in itertools.product(*options):
                yield a.fire, tuple(target)

    return _explore(comps, ports, step)


def compose_classical(gamma: Iterable[Iterable[str]], comps: Sequence[Behaviour]) -> Behaviour:
    """Compose ``comps`` under a plain interaction model (sets of ports).

    Components owning a port of ``a`` take a transition labelled by their
    share of ``a``; the others idle.
    """
    comps = list(comps)
    interactions = sorted({frozenset(a) for a in gamma if a}, key=sorted)
    mentioned = frozenset().union(*interactions) if interactions else frozenset()
    ports = _check_components(comps, mentioned)
    owned = [c.ports for c in comps]

    def step(state: tuple[str, ...]):
        for a in interactions:
            options = [_successors(c, q, a & p) for c, q, p in zip(comps, state, owned)]
            for target in itertools.product(*options):
                yield a, tuple(target)

    return _explore(comps, ports, step)

