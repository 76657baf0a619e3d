from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from bipglue.behavior import (
    Behaviour,
    ClassicalGlue,
    ExtendedGlue,
    Lts,
    PriorityModel,
    Transition,
    atomic,
    behaviour_equal,
    compose_classical,
    compose_extended,
    glue_from_dict,
    load_behaviour,
    load_glue,
    offer_closure,
    restrict_priority_classical,
    restrict_priority_offer,
)
from bipglue.errors import BehaviourError
from bipglue.kernel import (
    InteractionSet,
    firing_lift,
    normalize_interaction_set,
    parse_interaction,
    translate_priority,
)
from tests import random_terms

SAMPLES = Path(__file__).resolve().parents[1] / "samples" / "example1"


@pytest.fixture
def components() -> list[Behaviour]:
    return [load_behaviour(SAMPLES / f"b{i}.json") for i in (1, 2, 3)]


def _labels_from_initial(b: Behaviour) -> set[frozenset[str]]:
    return {t.label for t in b.transitions if t.source == b.initial}


class TestBehaviour:
    def test_offer_must_cover_enabled_ports(self) -> None:
        lts = Lts(frozenset({"0", "1"}), frozenset({"p"}), frozenset({Transition("0", {"p"}, "1")}), "0")
        with pytest.raises(BehaviourError, match="not offered"):
            Behaviour(lts, frozenset())

    def test_atomic_and_extra_offers(self) -> None:
        b = atomic(["0", "1"], [("0", ["p"], "1")], "0", ports=["p", "q"])
        assert b.is_atomic()
        assert b.offered("0") == frozenset({"p"})
        wider = offer_closure(b.lts, [("1", "q")])
        assert not wider.is_atomic()
        assert wider.offered("1") == frozenset({"q"})

    def test_rejects_empty_labels_and_unknown_states(self) -> None:
        with pytest.raises(BehaviourError, match="empty label"):
            Lts(frozenset({"0"}), frozenset({"p"}), frozenset({Transition("0", set(), "0")}), "0")
        with pytest.raises(BehaviourError, match="initial"):
            Lts(frozenset({"0"}), frozenset({"p"}), frozenset(), "9")

    def test_dict_form_keeps_only_extra_offers(self, components: list[Behaviour]) -> None:
        b3 = components[2]
        data = b3.to_dict()
        assert data["offers"] == []
        assert Behaviour.from_dict(data) == b3
        wider = offer_closure(b3.lts, [("6", "t")])
        assert wider.to_dict()["offers"] == [{"state": "6", "port": "t"}]
        assert Behaviour.from_dict(json.loads(json.dumps(wider.to_dict()))) == wider

    def test_state_names_become_strings(self) -> None:
        lts = Lts(frozenset({0, 1}), frozenset({"p"}), frozenset({Transition("0", {"p"}, "1")}), 0)
        assert lts.initial == "0"
        assert lts.states == frozenset({"0", "1"})

    def test_missing_field(self) -> None:
        with pytest.raises(BehaviourError, match="missing field"):
            Behaviour.from_dict({"states": ["0"]})


class TestComposition:
    def test_components_must_have_disjoint_ports(self, components: list[Behaviour]) -> None:
        with pytest.raises(BehaviourError, match="shares ports"):
            compose_classical([["p"]], [components[0], components[0]])

    def test_glue_ports_must_be_owned(self, components: list[Behaviour]) -> None:
        with pytest.raises(BehaviourError, match="no component owns"):
            compose_extended(InteractionSet.of([parse_interaction("z!")]), components)

    def test_extended_checks_offers(self, components: list[Behaviour]) -> None:
        b1, b2, _ = components
        gamma = InteractionSet.of([parse_interaction("q! p"), parse_interaction("p! -q")])
        composed = compose_extended(gamma, [b1, b2])
        assert _labels_from_initial(composed) == {frozenset({"q"})}
        assert composed.initial == "(1,3)"
        assert composed.offered("(1,3)") == frozenset({"p", "q", "r"})

    def test_firing_lift_matches_classical(self, components: list[Behaviour]) -> None:
        gamma = [["p"], ["q"], ["r"], ["s", "t"], ["r", "t"]]
        assert behaviour_equal(
            compose_extended(firing_lift(gamma), components), compose_classical(gamma, components)
        )

    def test_classical_priority_needs_the_higher_interaction_enabled(
        self, components: list[Behaviour]
    ) -> None:
        b1, b2, _ = components
        composed = compose_classical([["p"], ["q"], ["r"], ["s"]], [b1, b2])
        assert frozenset({"p"}) in _labels_from_initial(composed)
        restricted = restrict_priority_classical(composed, PriorityModel.of([(["p"], ["r"])]))
        assert _labels_from_initial(restricted) == {frozenset({"q"}), frozenset({"r"})}
        assert restrict_priority_classical(composed, PriorityModel()) is composed

    def test_offer_priority_matches_classical_on_atomic_components(
        self, components: list[Behaviour]
    ) -> None:
        b1, b2, _ = components
        f = load_glue(SAMPLES / "f.json")
        offer_world = ExtendedGlue(firing_lift([["p"], ["q"], ["r"], ["s"]]), f.priority)
        assert behaviour_equal(f.apply(b1, b2), offer_world.apply(b1, b2))


class TestExampleOne:
    def test_hierarchical_equals_flat_extended(self, components: list[Behaviour]) -> None:
        f, g = load_glue(SAMPLES / "f.json"), load_glue(SAMPLES / "g.json")
        b1, b2, b3 = components
        hierarchical = g.apply(f.apply(b1, b2), b3)
        flat = load_glue(SAMPLES / "flat_extended.json").apply(b1, b2, b3)
        assert isinstance(f, ClassicalGlue) and isinstance(flat, Behaviour)
        assert len(hierarchical.states) == 2
        assert {t.label for t in hierarchical.transitions} == {frozenset({"q"}), frozenset({"s"})}
        assert behaviour_equal(hierarchical, flat)

    def test_naive_flat_priority_lets_p_through(self, components: list[Behaviour]) -> None:
        b1, b2, b3 = components
        naive = load_glue(SAMPLES / "flat_classical.json").apply(b1, b2, b3)
        assert frozenset({"p"}) in _labels_from_initial(naive)
        flat = load_glue(SAMPLES / "flat_extended.json").apply(b1, b2, b3)
        assert not behaviour_equal(naive, flat)

    def test_offer_priority_on_rt_also_keeps_p(self, components: list[Behaviour]) -> None:
        gamma = firing_lift([["p"], ["q"], ["s"], ["r", "t"]])
        composed = compose_extended(gamma, components)
        restricted = restrict_priority_offer(composed, PriorityModel.of([(["p"], ["r", "t"])]))
        assert frozenset({"p"}) in _labels_from_initial(restricted)

    def test_glue_dict_round_trip(self) -> None:
        for name in ("f", "g", "flat_extended", "flat_classical"):
            glue = load_glue(SAMPLES / f"{name}.json")
            assert glue_from_dict(glue.to_dict()) == glue

    def test_unknown_glue_mode(self) -> None:
        with pytest.raises(BehaviourError, match="unknown glue mode"):
            glue_from_dict({"mode": "nested"})


PORT_GROUPS = (("a", "b"), ("c", "d"), ("e", "f"))


def _random_system(rng: random.Random):
    count = rng.randint(1, 3)
    comps = [
        random_terms.behaviour(rng, f"s{i}_", PORT_GROUPS[i], states=rng.randint(1, 3))
        for i in range(count)
    ]
    ports = tuple(p for group in PORT_GROUPS[:count] for p in group)
    gamma = InteractionSet.of(
        [random_terms.interaction(rng, ports, size=3) for _ in range(rng.randint(1, 5))], ports
    )
    return comps, ports, gamma


@pytest.mark.parametrize("seed", range(200))
def test_interaction_set_simplifications_keep_behaviour(seed: int) -> None:
    rng = random.Random(seed)
    comps, ports, gamma = _random_system(rng)
    reference = compose_extended(gamma, comps)
    assert behaviour_equal(reference, compose_extended(normalize_interaction_set(gamma), comps))
    idle = [random_terms.interaction(rng, ports) for _ in range(2)]
    idle = [a for a in idle if not a.fire]
    padded = InteractionSet.of(list(gamma) + idle, ports)
    assert behaviour_equal(reference, compose_extended(padded, comps))


def _random_priority(rng: random.Random, gamma: list[list[str]]) -> PriorityModel:
    distinct = sorted({frozenset(a) for a in gamma}, key=sorted)
    pairs = [
        (lower, higher)
        for i, lower in enumerate(distinct)
        for higher in distinct[i + 1 :]
        if rng.random() < 0.3
    ]
    return PriorityModel.of(pairs)


def _random_components(rng: random.Random, offers: float):
    count = rng.randint(1, 3)
    comps = [
        random_terms.behaviour(rng, f"s{i}_", PORT_GROUPS[i], states=rng.randint(1, 3), offers=offers)
        for i in range(count)
    ]
    ports = [p for group in PORT_GROUPS[:count] for p in group]
    gamma = [rng.sample(ports, rng.randint(1, min(3, len(ports)))) for _ in range(rng.randint(1, 5))]
    return comps, ports, gamma


@pytest.mark.parametrize("seed", range(200))
def test_firing_lift_matches_classical_on_random_systems(seed: int) -> None:
    comps, _, gamma = _random_components(random.Random(seed), offers=0.2)
    assert behaviour_equal(compose_extended(firing_lift(gamma), comps), compose_classical(gamma, comps))


@pytest.mark.parametrize("seed", range(200))
def test_translated_priority_matches_offer_restriction(seed: int) -> None:
    rng = random.Random(seed)
    comps, ports, gamma = _random_components(rng, offers=0.0)
    prec = _random_priority(rng, gamma)
    flat = compose_extended(translate_priority(gamma, prec, ports), comps)
    layered = restrict_priority_offer(compose_classical(gamma, comps), prec)
    assert behaviour_equal(flat, layered)


@pytest.mark.parametrize(
    "pairs",
    [
        [(["p"], ["r"])],
        [(["p"], ["r", "t"])],
        [(["q"], ["s"]), (["p"], ["q"])],
    ],
)
def test_translated_priority_on_example_one(components: list[Behaviour], pairs) -> None:
    gamma = [["p"], ["q"], ["r"], ["s"], ["t"], ["r", "t"]]
    prec = PriorityModel.of(pairs)
    flat = compose_extended(translate_priority(gamma, prec), components)
    layered = restrict_priority_offer(compose_classical(gamma, components), prec)
    assert behaviour_equal(flat, layered)


def test_flat_extended_glue_is_the_translated_priority(components: list[Behaviour]) -> None:
    prec = PriorityModel.of([(["p"], ["r"])])
    gamma = translate_priority([["p"], ["q"], ["s"], ["r", "t"]], prec)
    flat = load_glue(SAMPLES / "flat_extended.json").apply(*components)
    assert behaviour_equal(compose_extended(gamma, components), flat)
