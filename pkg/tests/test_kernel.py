from __future__ import annotations

import random

import pytest
from loguru import logger

from bipglue.config import GlueConfig
from bipglue.errors import (
    EnumerationCapError,
    GlueSyntaxError,
    PortNameError,
    PriorityOrderError,
    UniverseMismatchError,
)
from bipglue.kernel import (
    CONTRADICTION,
    ONE,
    Interaction,
    InteractionSet,
    One,
    PortConfig,
    PortState,
    PriorityModel,
    Sync,
    TypedPort,
    Typing,
    Union,
    Zero,
    canonicalize_interaction,
    enabled,
    equiv_offer,
    equiv_strong,
    eval_ai,
    find_offer_witness,
    firing_lift,
    normalize_interaction_set,
    parse_ai,
    parse_interaction,
    parse_typed_port,
    translate_priority,
)
from bipglue.kernel.equivalence import port_configs
from tests import random_terms


def I(text: str) -> Interaction:
    return parse_interaction(text)


def S(*texts: str, universe=None) -> InteractionSet:
    return InteractionSet.of((I(t) for t in texts), universe)


class TestPorts:
    @pytest.mark.parametrize(
        "text, typing",
        [("p", Typing.ACT), ("p!", Typing.FIRE), ("-p", Typing.NEG)],
    )
    def test_parse_and_print(self, text: str, typing: Typing) -> None:
        port = parse_typed_port(text)
        assert port == TypedPort("p", typing)
        assert str(port) == text
        assert TypedPort.parse(text) == port

    @pytest.mark.parametrize("name", ["tt", "ff", "0", "1", "9x", ""])
    def test_reserved_and_malformed_names(self, name: str) -> None:
        with pytest.raises(PortNameError):
            TypedPort(name)

    def test_sort_order_is_name_then_fire_act_neg(self) -> None:
        ports = [TypedPort.neg("p"), TypedPort.act("p"), TypedPort.fire("q"), TypedPort.fire("p")]
        assert [str(p) for p in sorted(ports)] == ["p!", "p", "-p", "q!"]


class TestInteraction:
    def test_fire_absorbs_activation(self) -> None:
        assert I("p p!") == Interaction(fire=frozenset({"p"}))

    def test_negative_with_positive_is_contradiction(self) -> None:
        assert I("p! -p") is CONTRADICTION
        assert I("p -p") is CONTRADICTION
        assert I("-p -p") == Interaction(neg=frozenset({"p"}))

    def test_one_and_zero(self) -> None:
        assert I("1") == ONE
        assert I("0") is CONTRADICTION
        assert ONE.to_text() == "1"

    def test_merge_and_contains(self) -> None:
        a = I("p! -q").merge(I("r"))
        assert a.to_text() == "p! -q r"
        assert a.contains(TypedPort.act("p"))
        assert not a.contains(TypedPort.fire("r"))
        assert a.merge(I("q")) is CONTRADICTION
        assert a.merge(CONTRADICTION) is CONTRADICTION

    def test_covers_reads_fire_as_active(self) -> None:
        assert I("p! q").covers(I("p q"))
        assert not I("p q").covers(I("p!"))

    def test_dict_form(self) -> None:
        a = I("p! q -r")
        assert a.to_dict() == {"fire": ["p"], "act": ["q"], "neg": ["r"]}
        assert Interaction.from_dict(a.to_dict()) == a

    def test_disjoint_supports_required(self) -> None:
        with pytest.raises(ValueError):
            Interaction(fire=frozenset({"p"}), neg=frozenset({"p"}))

    def test_set_text_is_sorted(self) -> None:
        s = S("q!", "p! q!", "p!", "-r p!")
        assert s.to_text() == "{p!, p! -r, p! q!, q!}"

    def test_set_rejects_ports_outside_universe(self) -> None:
        with pytest.raises(ValueError, match="outside the universe"):
            InteractionSet(frozenset({I("p!")}), frozenset({"q"}))

    def test_firing_lift(self) -> None:
        s = firing_lift([["p", "q"], ["r"]])
        assert s == S("p! q!", "r!")


class TestAlgebra:
    def test_parse_operators(self) -> None:
        assert parse_ai("p! * q + 1") == Union(Sync(parse_ai("p!"), parse_ai("q")), One())
        assert parse_ai("p! . q") == parse_ai("p! q")

    def test_compact_mode(self) -> None:
        assert eval_ai(parse_ai("pq+r")) == eval_ai(parse_ai("p q + r"))
        assert eval_ai(parse_ai("pqr", compact=True)).to_text() == "{p q r}"

    def test_semantics(self) -> None:
        assert eval_ai(Zero()).interactions == frozenset()
        assert eval_ai(One()).interactions == frozenset({ONE})
        assert eval_ai(parse_ai("(p! + q!) * (1 + r)")) == S("p!", "q!", "p! r", "q! r")

    def test_contradictory_products_vanish(self) -> None:
        assert eval_ai(parse_ai("p! * (-p + q)")) == S("p! q", universe={"p", "q"})

    def test_universe_widening(self) -> None:
        assert eval_ai(parse_ai("p!"), {"q"}).universe == frozenset({"p", "q"})

    def test_syntax_error_has_position(self) -> None:
        with pytest.raises(GlueSyntaxError) as info:
            parse_ai("p! + + q")
        assert info.value.column > 0

    @pytest.mark.parametrize("seed", range(40))
    def test_label_laws(self, seed: int) -> None:
        rng = random.Random(seed)
        x, y, z = (random_terms.ai_term(rng, 2) for _ in range(3))
        universe = random_terms.PORTS

        def same(a, b) -> bool:
            return eval_ai(a, universe) == eval_ai(b, universe)

        assert same(Sync(x, Sync(y, z)), Sync(Sync(x, y), z))
        assert same(Sync(x, y), Sync(y, x))
        assert same(Sync(x, Union(y, z)), Union(Sync(x, y), Sync(x, z)))
        assert same(Sync(x, One()), x)
        assert same(Sync(x, Zero()), Zero())
        assert same(Union(x, x), x)
        port = random_terms.typed_port(rng)
        assert same(Sync(parse_ai(str(port)), parse_ai(str(port))), parse_ai(str(port)))


class TestEquivalence:
    def test_strong_needs_same_universe(self) -> None:
        with pytest.raises(UniverseMismatchError):
            equiv_strong(S("p!"), S("p!", universe={"p", "q"}))

    def test_strong(self) -> None:
        assert equiv_strong(S("p!", "q!"), S("q!", "p!"))
        assert not equiv_strong(S("-p", "-p q!"), S("-p q!", universe={"p", "q"}))

    def test_refinement_pair_is_offer_equivalent(self) -> None:
        left = S("-p", "-p q!")
        right = S("-p q!", universe={"p", "q"})
        assert equiv_offer(left, right)

    def test_witness_for_different_sets(self) -> None:
        witness = find_offer_witness(S("p!", universe={"p", "q"}), S("p! -q"))
        assert witness is not None
        assert witness["p"] is PortState.FIRE
        assert witness["q"] is not PortState.SILENT

    def test_assume_restricts_configurations(self) -> None:
        left, right = S("p!", universe={"p", "q"}), S("p! -q")
        assert equiv_offer(left, right, assume=lambda cfg: cfg["q"] is PortState.SILENT)

    def test_empty_firing_support_is_ignored(self) -> None:
        assert equiv_offer(S("p", "q!"), S("q!", universe={"p", "q"}))

    def test_normalize_keeps_minimal_per_firing_set(self) -> None:
        s = S("p!", "p! q", "p! -r", "q r", "q! -r", "q! -r s")
        assert normalize_interaction_set(s) == S("p!", "q! -r", universe=s.universe)

    def test_enabled(self) -> None:
        cfg = PortConfig.from_mapping({"p": PortState.FIRE, "q": PortState.OFFER, "r": PortState.SILENT})
        s = S("p!", "p! q", "p! r", "p! -q", "p! -r", "q!")
        assert enabled(s, cfg) == frozenset({frozenset({"p"})})
        assert str(cfg) == "p=fire, q=offer, r=silent"

    def test_port_configs_count(self) -> None:
        assert len(list(port_configs(["p", "q"]))) == 9

    def test_cap(self) -> None:
        ports = [f"p{i}" for i in range(5)]
        s = InteractionSet.of([], ports)
        with pytest.raises(EnumerationCapError, match="max_ports"):
            equiv_offer(s, s, config=GlueConfig(max_ports=4))

    @pytest.mark.parametrize("seed", range(30))
    def test_normal_form_is_offer_equivalent(self, seed: int) -> None:
        rng = random.Random(seed)
        s = eval_ai(random_terms.ai_term(rng, 3), random_terms.PORTS)
        assert equiv_offer(s, normalize_interaction_set(s))

    @pytest.mark.parametrize("seed", range(300))
    def test_random_pairs(self, seed: int) -> None:
        rng = random.Random(seed)
        term = random_terms.ai_term(rng, 3)
        s1 = eval_ai(term, random_terms.PORTS)
        assert equiv_strong(s1, eval_ai(Sync(term, One()), random_terms.PORTS))
        if rng.random() < 0.5:
            s2 = eval_ai(random_terms.ai_term(rng, 3), random_terms.PORTS)
        else:
            idle = [random_terms.interaction(rng) for _ in range(3)]
            s2 = InteractionSet.of(list(s1) + [a for a in idle if not a.fire], random_terms.PORTS)
        offer = equiv_offer(s1, s2)
        if equiv_strong(s1, s2):
            assert offer
        normal = equiv_offer(normalize_interaction_set(s1), normalize_interaction_set(s2))
        assert normal == offer


class TestPriority:
    def test_rejects_cycles_and_loops(self) -> None:
        with pytest.raises(PriorityOrderError, match="cycle"):
            PriorityModel.of([(["p"], ["q"]), (["q"], ["p"])])
        with pytest.raises(PriorityOrderError, match="irreflexive"):
            PriorityModel.of([(["p"], ["p"])])

    def test_dominators_use_transitive_closure(self) -> None:
        prec = PriorityModel.of([(["p"], ["q"]), (["q"], ["r", "s"])])
        assert prec.dominators(["p"]) == [frozenset({"q"}), frozenset({"r", "s"})]
        assert (frozenset({"p"}), frozenset({"r", "s"})) in prec.closure()

    def test_dict_round_trip(self) -> None:
        prec = PriorityModel.of([(["p"], ["r", "t"])])
        assert PriorityModel.from_dict(prec.to_dict()) == prec

    def test_translation_negates_one_port_per_dominator(self) -> None:
        prec = PriorityModel.of([(["p"], ["r", "t"])])
        s = translate_priority([["p"], ["q"], ["r", "t"]], prec)
        assert s == S("p! -r", "p! -t", "q!", "r! t!", universe={"p", "q", "r", "t"})

    def test_translation_of_the_flat_example(self) -> None:
        prec = PriorityModel.of([(["p"], ["r"])])
        s = translate_priority([["p"], ["q"], ["s"], ["r", "t"]], prec)
        assert s.to_text() == "{p! -r, q!, r! t!, s!}"

    def test_translation_logs_choices_per_interaction(self) -> None:
        messages = []
        logger.enable("bipglue")
        sink = logger.add(messages.append, level="DEBUG", format="{message}")
        try:
            prec = PriorityModel.of([(["p"], ["r", "t"]), (["q"], ["s"])])
            translate_priority([["p"], ["q"]], prec)
        finally:
            logger.remove(sink)
        lines = [str(m).strip() for m in messages]
        assert "priority over ['p'] expands into 2 choices" in lines
        assert "priority over ['q'] expands into 1 choices" in lines

    def test_translation_drops_self_negation(self) -> None:
        prec = PriorityModel.of([(["p"], ["p", "q"])])
        assert translate_priority([["p"]], prec) == S("p! -q", universe={"p", "q"})

    def test_canonicalize_interaction(self) -> None:
        assert canonicalize_interaction([TypedPort.fire("p"), TypedPort.neg("p")]) is CONTRADICTION
