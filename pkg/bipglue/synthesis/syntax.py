"""Text format of Boolean constraints.

Operators by increasing binding strength: ``<=>``, ``=>`` (right
associative), ``|``, ``&`` and the prefix ``~``. Variables are typed
ports; ``tt`` and ``ff`` are the constants. A constraints file holds one
formula per line, ``#`` starts a comment, and the lines are conjoined.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, v_args

from bipglue.errors import GlueSyntaxError
from bipglue.rules.syntax import Constant, ConstantPortTransformer
from bipglue.kernel.syntax import build_parser, run_parser
from bipglue.synthesis.formula import (
    Const,
    Formula,
    Iff,
    Implies,
    Not,
    Var,
    conj,
    disj,
    fire,
    formula_ports,
)

FORMULA_GRAMMAR = r"""
start: iff

?iff: implies
    | implies "<=>" iff             -> iff

?implies: disjunction
    | disjunction "=>" implies      -> implies

?disjunction: conjunction
    | disjunction "|" conjunction   -> disjunction

?conjunction: negation
    | conjunction "&" negation      -> conjunction

?negation: atom
    | "~" negation                  -> negation

?atom: typed_port                   -> var
     | "(" iff ")"
"""


class _FormulaTransformer(ConstantPortTransformer):
    def start(self, items):
        return items[0]

    @v_args(inline=True)
    def var(self, item):
        if isinstance(item, Constant):
            return Const(item.value)
        return Var(item)

    @v_args(inline=True)
    def negation(self, arg):
        return Not(arg)

    @v_args(inline=True)
    def conjunction(self, left, right):
        return conj([left, right])

    @v_args(inline=True)
    def disjunction(self, left, right):
        return disj([left, right])

    @v_args(inline=True)
    def implies(self, left, right):
        return Implies(left, right)

    @v_args(inline=True)
    def iff(self, left, right):
        return Iff(left, right)


@lru_cache(maxsize=None)
def _formula_parser() -> Lark:
    return build_parser(FORMULA_GRAMMAR)


def parse_formula(text: str) -> Formula:
    return run_parser(_formula_parser(), _FormulaTransformer(), text)


def with_progress(phi: Formula) -> Formula:
    """``phi`` and at least one port fires."""
    return conj([phi, disj(fire(p) for p in sorted(formula_ports(phi)))])


def parse_constraints(text: str, progress: bool = False) -> Formula:
    parts = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            parts.append(parse_formula(line))
        except GlueSyntaxError as exc:
            raise GlueSyntaxError(exc.reason, text, number, exc.column) from exc
    phi = conj(parts)
    return with_progress(phi) if progress else phi
