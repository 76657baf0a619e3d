"""Shared lark plumbing and the parsers for typed ports, interactions and AI terms.

Typed ports are written ``p`` (activation), ``p!`` (firing) and ``-p``
(negative). In compact mode every letter is a port of its own, so ``pqr``
reads as three ports; this is the notation of small algebraic examples.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from bipglue.errors import GlueError, GlueSyntaxError
from bipglue.kernel.algebra import AiTerm, One, PortAtom, Sync, Union, Zero, ai_product
from bipglue.kernel.interaction import (
    CONTRADICTION,
    Contradiction,
    Interaction,
    canonicalize_interaction,
)
from bipglue.kernel.ports import TypedPort, Typing

NAME_WORD = r"/[A-Za-z_][A-Za-z0-9_]*/"
NAME_LETTER = r"/[A-Za-z]/"

TYPED_PORT_RULES = r"""
typed_port: NAME      -> act_port
          | NAME "!"  -> fire_port
          | "-" NAME  -> neg_port

%import common.WS
%ignore WS
"""

AI_GRAMMAR = r"""
start: sum

?sum: product
    | sum "+" product       -> union

?product: atom
    | product "*" atom      -> sync
    | product "." atom      -> sync
    | product atom          -> sync

?atom: "0"                  -> zero
     | "1"                  -> one
     | typed_port           -> port_atom
     | "(" sum ")"
"""

LABEL_GRAMMAR = r"""
start: item*

?item: "0"                  -> zero
     | "1"                  -> one
     | typed_port
"""


def use_compact(text: str, compact: bool | None) -> bool:
    if compact is None:
        return not any(ch.isspace() for ch in text.strip())
    return compact


def build_parser(grammar: str, compact: bool = False, start: str = "start") -> Lark:
    name = NAME_LETTER if compact else NAME_WORD
    return Lark(
        grammar + TYPED_PORT_RULES + f"\nNAME: {name}\n",
        parser="lalr",
        start=start,
        maybe_placeholders=False,
    )


def run_parser(parser: Lark, transformer: Transformer, text: str):
    try:
        tree = parser.parse(text)
    except UnexpectedInput as exc:
        line = max(getattr(exc, "line", 0) or 0, 0)
        column = max(getattr(exc, "column", 0) or 0, 0)
        detail = str(exc).strip().splitlines()[0] if str(exc).strip() else "unexpected input"
        raise GlueSyntaxError(f"cannot parse {text!r}: {detail}", text, line, column) from exc
    try:
        return transformer.transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, GlueError):
            raise GlueSyntaxError(str(exc.orig_exc), text) from exc.orig_exc
        raise


class PortTransformer(Transformer):
    """Builds TypedPort values; subclasses add the constructs of each DSL."""

    @v_args(inline=True)
    def act_port(self, name):
        return TypedPort(str(name), Typing.ACT)

    @v_args(inline=True)
    def fire_port(self, name):
        return TypedPort(str(name), Typing.FIRE)

    @v_args(inline=True)
    def neg_port(self, name):
        return TypedPort(str(name), Typing.NEG)


class _AiTransformer(PortTransformer):
    def start(self, items):
        return items[0]

    def zero(self, _):
        return Zero()

    def one(self, _):
        return One()

    @v_args(inline=True)
    def port_atom(self, port):
        return PortAtom(port)

    @v_args(inline=True)
    def union(self, left, right):
        return Union(left, right)

    @v_args(inline=True)
    def sync(self, left, right):
        return Sync(left, right)


class _LabelTransformer(PortTransformer):
    def start(self, items):
        return items

    def zero(self, _):
        return Zero()

    def one(self, _):
        return One()


@lru_cache(maxsize=None)
def _ai_parser(compact: bool) -> Lark:
    return build_parser(AI_GRAMMAR, compact)


@lru_cache(maxsize=None)
def _label_parser() -> Lark:
    return build_parser(LABEL_GRAMMAR)


def parse_ai(text: str, compact: bool | None = None) -> AiTerm:
    return run_parser(_ai_parser(use_compact(text, compact)), _AiTransformer(), text)


def label_from_items(items) -> Interaction | Contradiction:
    """Canonical interaction of a juxtaposition of typed ports and constants."""
    if any(isinstance(item, Zero) for item in items):
        return CONTRADICTION
    return canonicalize_interaction(item for item in items if isinstance(item, TypedPort))


def parse_interaction(text: str) -> Interaction | Contradiction:
    """Parse juxtaposed typed ports such as ``p! -q r``; ``1`` is the empty interaction."""
    return label_from_items(run_parser(_label_parser(), _LabelTransformer(), text))


def parse_typed_port(text: str) -> TypedPort:
    items = run_parser(_label_parser(), _LabelTransformer(), text)
    if len(items) != 1 or not isinstance(items[0], TypedPort):
        raise GlueSyntaxError(f"expected a single typed port, got {text!r}", text)
    return items[0]


def ai_of_label(label: Interaction | Contradiction) -> AiTerm:
    if isinstance(label, Contradiction):
        return Zero()
    return ai_product(PortAtom(tp) for tp in label.typed_ports())
