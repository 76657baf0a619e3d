from __future__ import annotations

import random

import pytest

from bipglue.config import GlueConfig
from bipglue.connectors import (
    Fusion,
    Role,
    Typed,
    Union,
    connector_ports,
    connector_tree,
    eval_connector,
    is_normal_connector,
    label_term,
    normalize_connector,
    parse_connector,
    sigma,
    synchron,
    tau,
    to_ai,
    trigger,
)
from bipglue.errors import ContractViolationError, GlueError
from bipglue.kernel import PortAtom, equiv_offer, eval_ai, parse_interaction, parse_typed_port
from bipglue.trees import eval_tree, normalize_tree, parse_tree
from tests import random_terms


def C(text: str, compact: bool | None = None):
    return parse_connector(text, compact)


class TestSemantics:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("pqr", "{p q r}"),
            ("p'qr", "{p, p q, p q r, p r}"),
            ("p'[qr]", "{p, p q r}"),
            ("p'[q'r]", "{p, p q, p q r}"),
            ("p'q'", "{p, p q, q}"),
            ("p + q", "{p, q}"),
        ],
    )
    def test_small_connectors(self, text: str, expected: str) -> None:
        assert eval_connector(C(text)).to_text() == expected

    def test_typed_ports_in_connectors(self) -> None:
        s = eval_connector(C("[a! al!]' [test!]"))
        assert s.to_text() == "{a! al!, a! al! test!}"

    def test_zero_and_one(self) -> None:
        assert eval_connector(C("p' 0")).to_text() == "{p}"
        assert eval_connector(C("p 0")).interactions == frozenset()
        assert eval_connector(C("p' 1")).to_text() == "{p}"

    def test_to_ai_has_the_same_interactions(self) -> None:
        x = C("p'[q'r]")
        assert eval_ai(to_ai(x), connector_ports(x)) == eval_connector(x)

    def test_universe(self) -> None:
        assert eval_connector(C("p'q"), {"z"}).universe == frozenset({"p", "q", "z"})


class TestNotation:
    def test_structure(self) -> None:
        x = C("p'[q'r]")
        assert isinstance(x, Fusion)
        assert x.triggers == (Typed(PortAtom(parse_typed_port("p")), Role.TRIGGER),)
        assert len(x.synchrons) == 1
        assert isinstance(x.synchrons[0].body, Fusion)

    @pytest.mark.parametrize(
        "text, printed",
        [
            ("p'[q'r]", "p' [q' r]"),
            ("p!'[q!'r!]", "p!' [q!' r!]"),
            ("[a! al!]' [test!]", "[a! al!]' test!"),
            ("p' + q", "[p]' + [q]"),
        ],
    )
    def test_print_parses_back(self, text: str, printed: str) -> None:
        x = C(text)
        assert x.to_text() == printed
        assert C(printed, compact=False) == x

    def test_compact_needs_no_spaces(self) -> None:
        assert connector_ports(C("pq")) == frozenset({"p", "q"})
        assert connector_ports(C("pq", compact=False)) == frozenset({"pq"})

    def test_nested_typing_collapses(self) -> None:
        assert C("[[p]']", compact=False) == C("[p]", compact=False)
        assert trigger(synchron(PortAtom(parse_typed_port("p")))).role is Role.TRIGGER

    def test_empty_fusion_rejected(self) -> None:
        with pytest.raises(GlueError, match="at least one operand"):
            Fusion(())


class TestTranslations:
    def test_sigma_of_chain(self) -> None:
        x = sigma(parse_tree("p! -> -q -> (r! (+) s!)"))
        assert x.to_text() == "p!' [-q' [r!' s!']]"
        assert eval_connector(x) == eval_tree(parse_tree("p! -> -q -> (r! (+) s!)"))

    def test_label_term(self) -> None:
        assert label_term(parse_interaction("1")).to_text() == "1"
        assert label_term(parse_interaction("p! -q")).to_text() == "p! -q"

    def test_tau_of_small_connectors(self) -> None:
        assert tau(C("p'[q'r]")).to_text() == "p -> q -> r"
        assert tau(C("pqr")).to_text() == "p q r"
        assert tau(C("p'q'")).to_text() == "p (+) q"

    def test_tau_rejects_unions_that_are_not_merge_closed(self) -> None:
        with pytest.raises(ContractViolationError, match="not closed under merging"):
            tau(C("p! + q!", compact=False))

    def test_tau_accepts_merge_closed_unions(self) -> None:
        x = C("p + p q", compact=False)
        assert eval_tree(tau(x), {"p", "q"}) == eval_connector(x)

    def test_tau_without_check(self) -> None:
        tree = tau(C("p'q"), config=GlueConfig(check_contracts=False))
        assert tree.to_text() == "p -> q"
        loose = tau(C("p! + q!", compact=False), config=GlueConfig(check_contracts=False))
        assert loose.to_text() == "p! (+) q!"

    @pytest.mark.parametrize("seed", range(500))
    def test_sigma_is_exact(self, seed: int) -> None:
        tree = random_terms.tree(random.Random(seed), depth=3)
        ports = random_terms.PORTS
        assert eval_connector(sigma(tree), ports) == eval_tree(tree, ports)

    @pytest.mark.parametrize("seed", range(500))
    def test_tau_is_exact_on_union_free_connectors(self, seed: int) -> None:
        x = random_terms.connector(random.Random(seed), depth=3)
        ports = random_terms.PORTS
        assert eval_tree(tau(x), ports) == eval_connector(x, ports)


class TestNormalConnectors:
    def test_normalize(self) -> None:
        assert normalize_connector(C("p!'[q!'r!]")).to_text() == "p!' [q!' r!]"
        assert normalize_connector(C("p!'[-q'[r!' s!']]", compact=False)).to_text() == (
            "p!' [[-q r!]' [-q s!]']"
        )

    def test_is_normal(self) -> None:
        assert is_normal_connector(C("p!'[q!'r!]"))
        assert not is_normal_connector(C("p'[q'r]"))
        assert not is_normal_connector(Union(C("p!"), C("q!")))
        assert not is_normal_connector(C("p! p!", compact=False))

    def test_connector_tree_reads_sigma_images(self) -> None:
        tree = normalize_tree(parse_tree("p! -> -q -> (r! (+) s!)"))
        assert connector_tree(sigma(tree)) == tree

    @pytest.mark.parametrize("seed", range(500))
    def test_normal_forms(self, seed: int) -> None:
        rng = random.Random(seed)
        x = random_terms.connector(rng, depth=3)
        normal = normalize_connector(x)
        assert is_normal_connector(normal)
        ports = random_terms.PORTS
        assert equiv_offer(eval_connector(x, ports), eval_connector(normal, ports))
        tree = normalize_tree(random_terms.tree(rng, depth=3))
        assert is_normal_connector(sigma(tree))
