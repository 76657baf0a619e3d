"""Causes: positive formulas in disjunctive normal form over typed port variables.

A monomial is an interaction read as a conjunction of typed variables, so
``ONE`` is ``tt`` and the empty disjunction is ``ff``. An interaction
satisfies a monomial when it covers it (firing implies activation).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Union as _U

from bipglue.kernel.interaction import CONTRADICTION, ONE, Contradiction, Interaction
from bipglue.kernel.ports import TypedPort

TT_EFFECT = "tt"

Effect = _U[TypedPort, str]


def effect_key(effect: Effect) -> tuple:
    if effect == TT_EFFECT:
        return (0,)
    return (1, effect.sort_key)


def effect_text(effect: Effect) -> str:
    return TT_EFFECT if effect == TT_EFFECT else str(effect)


def absorb(monomials: Iterable[Interaction]) -> frozenset[Interaction]:
    """Keep the monomials not implied by another one (``a | a b = a``)."""
    unique = set(monomials)
    return frozenset(m for m in unique if not any(o != m and m.covers(o) for o in unique))


@dataclass(frozen=True)
class CauseFormula:
    monomials: frozenset[Interaction] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.monomials, frozenset):
            object.__setattr__(self, "monomials", frozenset(self.monomials))

    @classmethod
    def of(cls, monomials: Iterable[Interaction | Contradiction]) -> "CauseFormula":
        """Absorption-reduced disjunction; contradictory monomials are ``ff`` and vanish."""
        return cls(absorb(m for m in monomials if m is not CONTRADICTION))

    @property
    def is_tt(self) -> bool:
        return ONE in self.monomials

    @property
    def is_ff(self) -> bool:
        return not self.monomials

    @property
    def ports(self) -> frozenset[str]:
        return frozenset().union(*(m.ports for m in self.monomials))

    def sorted(self) -> list[Interaction]:
        return sorted(self.monomials, key=lambda m: (len(m.ports), m.sort_key))

    def simplified(self) -> "CauseFormula":
        return CauseFormula.of(self.monomials)

    def holds(self, a: Interaction) -> bool:
        return any(a.covers(m) for m in self.monomials)

    def or_(self, other: "CauseFormula") -> "CauseFormula":
        return CauseFormula.of(self.monomials | other.monomials)

    def and_(self, other: "CauseFormula") -> "CauseFormula":
        return CauseFormula.of(
            a.merge(b) for a, b in itertools.product(self.monomials, other.monomials)
        )

    def to_text(self) -> str:
        if self.is_ff:
            return "ff"
        return " | ".join("tt" if m.is_one else m.to_text() for m in self.sorted())

    def __str__(self) -> str:
        return self.to_text()


TT = CauseFormula(frozenset({ONE}))
FF = CauseFormula()


def conjoin(causes: Iterable[CauseFormula]) -> CauseFormula:
    result = TT
    for cause in causes:
        result = result.and_(cause)
        if result.is_ff:
            break
    return result


def disjoin(causes: Iterable[CauseFormula]) -> CauseFormula:
    result = FF
    for cause in causes:
        result = result.or_(cause)
    return result
