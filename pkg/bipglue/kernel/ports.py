"""Ports and their three typings.

A typed port is written ``p`` (activation), ``p!`` (firing) or ``-p``
(negative). Port names are identifiers; ``0``, ``1``, ``tt`` and ``ff`` are
reserved for constants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from bipglue.errors import PortNameError

PORT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RESERVED = frozenset({"0", "1", "tt", "ff"})


class Typing(Enum):
    ACT = "act"
    FIRE = "fire"
    NEG = "neg"

    @property
    def rank(self) -> int:
        return _RANK[self]


_RANK = {Typing.FIRE: 0, Typing.ACT: 1, Typing.NEG: 2}


def check_port_name(name: str) -> str:
    if not isinstance(name, str):
        raise PortNameError(f"port name must be a string, got {type(name).__name__}")
    if name in RESERVED:
        raise PortNameError(f"{name!r} is reserved and cannot name a port")
    if PORT_RE.fullmatch(name) is None:
        raise PortNameError(f"invalid port name {name!r}")
    return name


def check_universe(names) -> frozenset[str]:
    return frozenset(check_port_name(name) for name in names)


@dataclass(frozen=True)
class TypedPort:
    port: str
    typing: Typing = Typing.ACT

    def __post_init__(self) -> None:
        check_port_name(self.port)
        if not isinstance(self.typing, Typing):
            raise TypeError(f"typing must be a Typing, got {self.typing!r}")

    @classmethod
    def act(cls, port: str) -> "TypedPort":
        return cls(port, Typing.ACT)

    @classmethod
    def fire(cls, port: str) -> "TypedPort":
        return cls(port, Typing.FIRE)

    @classmethod
    def neg(cls, port: str) -> "TypedPort":
        return cls(port, Typing.NEG)

    @classmethod
    def parse(cls, text: str) -> "TypedPort":
        text = text.strip()
        if text.startswith("-"):
            return cls(text[1:].strip(), Typing.NEG)
        if text.endswith("!"):
            return cls(text[:-1].strip(), Typing.FIRE)
        return cls(text, Typing.ACT)

    @property
    def sort_key(self) -> tuple[str, int]:
        return (self.port, self.typing.rank)

    def __lt__(self, other: "TypedPort") -> bool:
        if not isinstance(other, TypedPort):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __str__(self) -> str:
        if self.typing is Typing.FIRE:
            return f"{self.port}!"
        if self.typing is Typing.NEG:
            return f"-{self.port}"
        return self.port
