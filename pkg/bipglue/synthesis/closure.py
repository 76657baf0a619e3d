"""Closing a constraint under the typing axioms.

Negations are pushed to the variables. A negated activation becomes the
negative typing and a negated negative typing becomes activation; only
negated firing variables stay, to be removed later by case splitting.
The axioms ``p! => p`` and ``~(p & -p)`` are conjoined for every port.
"""

from __future__ import annotations

from bipglue.kernel.ports import TypedPort, Typing
from bipglue.synthesis.formula import (
    And,
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    act,
    conj,
    disj,
    fire,
    formula_ports,
    neg,
)


def _negated_var(port: TypedPort) -> Formula:
    if port.typing is Typing.ACT:
        return Var(TypedPort(port.port, Typing.NEG))
    if port.typing is Typing.NEG:
        return Var(TypedPort(port.port, Typing.ACT))
    return Not(Var(port))


def push_negations(phi: Formula, positive: bool = True) -> Formula:
    """Negation normal form with the typing rewrites applied to negated variables."""
    if isinstance(phi, Const):
        return Const(phi.value == positive)
    if isinstance(phi, Var):
        return phi if positive else _negated_var(phi.port)
    if isinstance(phi, Not):
        return push_negations(phi.arg, not positive)
    if isinstance(phi, And):
        parts = [push_negations(a, positive) for a in phi.args]
        return conj(parts) if positive else disj(parts)
    if isinstance(phi, Or):
        parts = [push_negations(a, positive) for a in phi.args]
        return disj(parts) if positive else conj(parts)
    if isinstance(phi, Implies):
        return push_negations(Or((Not(phi.left), phi.right)), positive)
    if isinstance(phi, Iff):
        both = And((Implies(phi.left, phi.right), Implies(phi.right, phi.left)))
        return push_negations(both, positive)
    raise TypeError(f"not a formula: {phi!r}")


def fire_axiom(port: str) -> Formula:
    return Implies(fire(port), act(port))


def exclusion_axiom(port: str) -> Formula:
    return Not(And((act(port), neg(port))))


def is_axiom(phi: Formula) -> bool:
    if isinstance(phi, Implies):
        return (
            isinstance(phi.left, Var)
            and phi.left.port.typing is Typing.FIRE
            and phi == fire_axiom(phi.left.port.port)
        )
    if isinstance(phi, Not) and isinstance(phi.arg, And) and len(phi.arg.args) == 2:
        first = phi.arg.args[0]
        return isinstance(first, Var) and phi == exclusion_axiom(first.port.port)
    return False


def split_axioms(phi: Formula) -> tuple[list[Formula], list[Formula]]:
    """Top-level conjuncts of ``phi``, split into axioms and the rest."""
    parts = phi.args if isinstance(phi, And) else (phi,)
    axioms = [p for p in parts if is_axiom(p)]
    rest = [p for p in parts if not is_axiom(p)]
    return axioms, rest


def close_formula(phi: Formula) -> Formula:
    """``phi`` in negation normal form, conjoined with the typing axioms of its ports.

    Closing twice gives the same formula.
    """
    axioms, rest = split_axioms(phi)
    body = push_negations(conj(rest))
    ports = sorted(formula_ports(body) | frozenset().union(*(formula_ports(a) for a in axioms)))
    extra = [fire_axiom(p) for p in ports] + [exclusion_axiom(p) for p in ports]
    return conj([body, *extra])
