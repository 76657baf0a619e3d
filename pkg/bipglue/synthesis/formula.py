"""Boolean constraints over typed port variables.

A variable ``p!`` holds when ``p`` fires, ``p`` when ``p`` is active or
fires, ``-p`` when ``p`` is negative. Formulas are immutable trees; CNF
conversion goes through sympy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Union as _U

import sympy
from sympy.logic.boolalg import BooleanFalse, BooleanTrue, to_cnf

from bipglue.errors import FormulaShapeError
from bipglue.kernel.interaction import Interaction
from bipglue.kernel.ports import TypedPort, Typing


@dataclass(frozen=True)
class Const:
    value: bool

    def to_text(self) -> str:
        return "tt" if self.value else "ff"


@dataclass(frozen=True)
class Var:
    port: TypedPort

    def to_text(self) -> str:
        return str(self.port)


@dataclass(frozen=True)
class Not:
    arg: "Formula"

    def to_text(self) -> str:
        return f"~{_wrap(self.arg, 5)}"


@dataclass(frozen=True)
class And:
    args: tuple["Formula", ...]

    def to_text(self) -> str:
        return " & ".join(_wrap(a, 4) for a in self.args) if self.args else "tt"


@dataclass(frozen=True)
class Or:
    args: tuple["Formula", ...]

    def to_text(self) -> str:
        return " | ".join(_wrap(a, 3) for a in self.args) if self.args else "ff"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def to_text(self) -> str:
        return f"{_wrap(self.left, 3)} => {_wrap(self.right, 2)}"


@dataclass(frozen=True)
class Iff:
    left: "Formula"
    right: "Formula"

    def to_text(self) -> str:
        return f"{_wrap(self.left, 2)} <=> {_wrap(self.right, 2)}"


Formula = _U[Const, Var, Not, And, Or, Implies, Iff]

TRUE = Const(True)
FALSE = Const(False)

_LEVEL = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5, Var: 6, Const: 6}


def _wrap(phi: Formula, level: int) -> str:
    text = phi.to_text()
    if _LEVEL[type(phi)] < level or (isinstance(phi, (And, Or)) and len(phi.args) < 2):
        return f"({text})"
    return text


def fire(port: str) -> Var:
    return Var(TypedPort(port, Typing.FIRE))


def act(port: str) -> Var:
    return Var(TypedPort(port, Typing.ACT))


def neg(port: str) -> Var:
    return Var(TypedPort(port, Typing.NEG))


def conj(args: Iterable[Formula]) -> Formula:
    """Flattened conjunction with ``tt`` dropped and ``ff`` absorbing."""
    out: list[Formula] = []
    for arg in args:
        parts = arg.args if isinstance(arg, And) else (arg,)
        for part in parts:
            if part == TRUE:
                continue
            if part == FALSE:
                return FALSE
            out.append(part)
    if not out:
        return TRUE
    return out[0] if len(out) == 1 else And(tuple(out))


def disj(args: Iterable[Formula]) -> Formula:
    """Flattened disjunction with ``ff`` dropped and ``tt`` absorbing."""
    out: list[Formula] = []
    for arg in args:
        parts = arg.args if isinstance(arg, Or) else (arg,)
        for part in parts:
            if part == FALSE:
                continue
            if part == TRUE:
                return TRUE
            out.append(part)
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else Or(tuple(out))


def variables(phi: Formula) -> frozenset[TypedPort]:
    if isinstance(phi, Var):
        return frozenset({phi.port})
    if isinstance(phi, Not):
        return variables(phi.arg)
    if isinstance(phi, (And, Or)):
        return frozenset().union(*(variables(a) for a in phi.args))
    if isinstance(phi, (Implies, Iff)):
        return variables(phi.left) | variables(phi.right)
    return frozenset()


def formula_ports(phi: Formula) -> frozenset[str]:
    return frozenset(v.port for v in variables(phi))


def evaluate(phi: Formula, value: Callable[[TypedPort], bool]) -> bool:
    if isinstance(phi, Const):
        return phi.value
    if isinstance(phi, Var):
        return value(phi.port)
    if isinstance(phi, Not):
        return not evaluate(phi.arg, value)
    if isinstance(phi, And):
        return all(evaluate(a, value) for a in phi.args)
    if isinstance(phi, Or):
        return any(evaluate(a, value) for a in phi.args)
    if isinstance(phi, Implies):
        return not evaluate(phi.left, value) or evaluate(phi.right, value)
    if isinstance(phi, Iff):
        return evaluate(phi.left, value) == evaluate(phi.right, value)
    raise TypeError(f"not a formula: {phi!r}")


def holds_in(phi: Formula, a: Interaction) -> bool:
    """Truth of ``phi`` under the characteristic valuation of ``a``."""
    return evaluate(phi, a.contains)


def to_sympy(phi: Formula, symbols: dict[TypedPort, sympy.Symbol]):
    if isinstance(phi, Const):
        return sympy.true if phi.value else sympy.false
    if isinstance(phi, Var):
        if phi.port not in symbols:
            symbols[phi.port] = sympy.Symbol(str(phi.port))
        return symbols[phi.port]
    if isinstance(phi, Not):
        return sympy.Not(to_sympy(phi.arg, symbols))
    if isinstance(phi, And):
        return sympy.And(*(to_sympy(a, symbols) for a in phi.args))
    if isinstance(phi, Or):
        return sympy.Or(*(to_sympy(a, symbols) for a in phi.args))
    if isinstance(phi, Implies):
        return sympy.Implies(to_sympy(phi.left, symbols), to_sympy(phi.right, symbols))
    if isinstance(phi, Iff):
        return sympy.Equivalent(to_sympy(phi.left, symbols), to_sympy(phi.right, symbols))
    raise TypeError(f"not a formula: {phi!r}")


Literal = tuple[TypedPort, bool]
Clause = frozenset[Literal]


def _literal(expr, ports: dict) -> Literal:
    if isinstance(expr, sympy.Not):
        return ports[expr.args[0]], False
    if isinstance(expr, sympy.Symbol):
        return ports[expr], True
    raise FormulaShapeError(f"unexpected CNF literal {expr}")


def cnf_clauses(phi: Formula) -> list[Clause]:
    """Clauses of a CNF of ``phi``; ``[]`` is ``tt`` and ``[frozenset()]`` is ``ff``."""
    symbols: dict[TypedPort, sympy.Symbol] = {}
    expr = to_cnf(to_sympy(phi, symbols), simplify=False)
    ports = {symbol: port for port, symbol in symbols.items()}
    if isinstance(expr, BooleanTrue):
        return []
    if isinstance(expr, BooleanFalse):
        return [frozenset()]
    conjuncts = expr.args if isinstance(expr, sympy.And) else (expr,)
    clauses = []
    for conjunct in conjuncts:
        literals = conjunct.args if isinstance(conjunct, sympy.Or) else (conjunct,)
        clauses.append(frozenset(_literal(lit, ports) for lit in literals))
    return clauses


def literal_text(literal: Literal) -> str:
    port, positive = literal
    return str(port) if positive else f"~{port}"


def is_tautology(clause: Clause) -> bool:
    """Clauses true in every interaction, the typing axioms among them."""
    for port, positive in clause:
        if (port, not positive) in clause:
            return True
        if positive:
            continue
        if port.typing is Typing.FIRE and (TypedPort(port.port, Typing.ACT), True) in clause:
            return True
        if port.typing is Typing.FIRE and (TypedPort(port.port, Typing.NEG), False) in clause:
            return True
        if port.typing is Typing.ACT and (TypedPort(port.port, Typing.NEG), False) in clause:
            return True
    return False
