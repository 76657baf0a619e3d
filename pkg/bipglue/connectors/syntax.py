"""Parser for connector terms: ``p'[q'r]``, ``[a! al!]'[test!]``, ``x + y``.

``[x]`` is a synchron and ``[x]'`` a trigger; a bare port ``p`` stands for
``[p]`` and ``p'`` for ``[p]'``. Juxtaposition is fusion and binds tighter
than ``+``. Parentheses group a fusion without typing it.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, v_args

from bipglue.connectors.term import Fusion, Role, Typed, Union
from bipglue.kernel.algebra import One, PortAtom, Zero
from bipglue.kernel.syntax import PortTransformer, build_parser, run_parser, use_compact

CONNECTOR_GRAMMAR = r"""
start: sum

?sum: fusion
    | sum "+" fusion            -> union

fusion: part+

?part: "[" sum "]"              -> synchron
     | "[" sum "]" "'"          -> trigger
     | typed_port               -> port_synchron
     | typed_port "'"           -> port_trigger
     | "0"                      -> zero
     | "1"                      -> one
     | "(" sum ")"              -> group
"""


class _ConnectorTransformer(PortTransformer):
    def start(self, items):
        return items[0]

    @v_args(inline=True)
    def union(self, left, right):
        return Union(left, right)

    def fusion(self, parts):
        flat: list[Typed] = []
        for part in parts:
            flat.extend(part if isinstance(part, tuple) else (part,))
        if len(flat) == 1:
            return flat[0]
        return Fusion(tuple(flat))

    @v_args(inline=True)
    def synchron(self, body):
        return Typed(_untyped(body), Role.SYNCHRON)

    @v_args(inline=True)
    def trigger(self, body):
        return Typed(_untyped(body), Role.TRIGGER)

    @v_args(inline=True)
    def port_synchron(self, port):
        return Typed(PortAtom(port), Role.SYNCHRON)

    @v_args(inline=True)
    def port_trigger(self, port):
        return Typed(PortAtom(port), Role.TRIGGER)

    def zero(self, _):
        return Typed(Zero(), Role.SYNCHRON)

    def one(self, _):
        return Typed(One(), Role.SYNCHRON)

    @v_args(inline=True)
    def group(self, body):
        if isinstance(body, Fusion):
            return body.parts
        if isinstance(body, Typed):
            return (body,)
        return (Typed(body, Role.SYNCHRON),)


def _untyped(body):
    """``[[x]]`` and ``[x]`` coincide; keep one level of typing."""
    return body.body if isinstance(body, Typed) else body


@lru_cache(maxsize=None)
def _connector_parser(compact: bool) -> Lark:
    return build_parser(CONNECTOR_GRAMMAR, compact)


def parse_connector(text: str, compact: bool | None = None):
    """Parse a connector term; ``compact=None`` reads one-letter ports when the text has no spaces."""
    return run_parser(_connector_parser(use_compact(text, compact)), _ConnectorTransformer(), text)
