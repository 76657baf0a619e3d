"""Text format of rule systems: one rule per line, ``effect => m1 | m2``.

Effects are typed ports or ``tt``; several effects may share a line,
separated by commas. Monomials are juxtaposed typed ports; ``tt`` and
``ff`` are the constant causes. Unlisted effects get ``ff``. ``#`` starts
a comment. A system is read in full mode as soon as one effect is an
activation or negative port.
"""

from __future__ import annotations

from functools import lru_cache

from lark import Lark, v_args

from bipglue.errors import GlueSyntaxError
from bipglue.kernel.algebra import One, Zero
from bipglue.kernel.interaction import CONTRADICTION
from bipglue.kernel.ports import TypedPort, Typing
from bipglue.kernel.syntax import PortTransformer, build_parser, label_from_items, run_parser
from bipglue.rules.cause import TT_EFFECT, CauseFormula, effect_text
from bipglue.rules.system import FIRING_ONLY, FULL, CausalRuleSystem

RULE_GRAMMAR = r"""
start: effects "=>" cause

effects: typed_port ("," typed_port)*

cause: monomial ("|" monomial)*

monomial: item+

?item: "0"                  -> zero
     | "1"                  -> one
     | typed_port
"""


class Constant:
    """``tt`` or ``ff`` where a typed port was expected."""

    def __init__(self, value: bool):
        self.value = value


class ConstantPortTransformer(PortTransformer):
    """Reads the names ``tt`` and ``ff`` as Boolean constants."""

    @v_args(inline=True)
    def act_port(self, name):
        if str(name) == "tt":
            return Constant(True)
        if str(name) == "ff":
            return Constant(False)
        return TypedPort(str(name), Typing.ACT)


class _RuleTransformer(ConstantPortTransformer):
    @v_args(inline=True)
    def start(self, effects, cause):
        return effects, cause

    def effects(self, items):
        out = []
        for item in items:
            if isinstance(item, Constant):
                if not item.value:
                    raise GlueSyntaxError("ff cannot be the effect of a rule")
                out.append(TT_EFFECT)
            else:
                out.append(item)
        return out

    def cause(self, monomials):
        return CauseFormula(frozenset(m for m in monomials if m is not CONTRADICTION))

    def monomial(self, items):
        if any(isinstance(i, Constant) and not i.value for i in items):
            return CONTRADICTION
        return label_from_items([i for i in items if not isinstance(i, Constant)])

    def zero(self, _):
        return Zero()

    def one(self, _):
        return One()


@lru_cache(maxsize=None)
def _rule_parser() -> Lark:
    return build_parser(RULE_GRAMMAR)


def parse_rules(
    text: str, *, mode: str | None = None, universe=None
) -> CausalRuleSystem:
    rules: dict = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            effects, cause = run_parser(_rule_parser(), _RuleTransformer(), line)
        except GlueSyntaxError as exc:
            raise GlueSyntaxError(exc.reason, text, number, exc.column) from exc
        for effect in effects:
            rules[effect] = rules[effect].and_(cause) if effect in rules else cause
    if mode is None:
        typed = [e for e in rules if e != TT_EFFECT]
        mode = FULL if any(e.typing is not Typing.FIRE for e in typed) else FIRING_ONLY
    return CausalRuleSystem.of(rules, universe, mode)


def format_rules(r: CausalRuleSystem) -> str:
    """One line per rule that is not ``ff``, then all ``ff`` effects on a last line."""
    lines = []
    never = []
    for effect, cause in r.rules:
        if cause.is_ff:
            never.append(effect_text(effect))
        else:
            lines.append(f"{effect_text(effect)} => {cause.to_text()}")
    if never:
        lines.append(f"{', '.join(never)} => ff")
    return "\n".join(lines) + "\n"
