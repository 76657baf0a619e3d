from __future__ import annotations

from pathlib import Path

import pytest

from bipglue.config import GlueConfig
from bipglue.errors import FormulaShapeError, GlueSyntaxError, SplitLimitError
from bipglue.kernel import (
    PortConfig,
    PortState,
    TypedPort,
    equiv_offer,
    normalize_interaction_set,
    parse_interaction,
)
from bipglue.rules import minimal_models, parse_rules
from bipglue.synthesis import (
    FALSE,
    TRUE,
    Iff,
    Implies,
    Not,
    Or,
    Var,
    close_formula,
    cnf_clauses,
    config_predicate,
    fire,
    formula_ports,
    holds_in,
    parse_constraints,
    parse_formula,
    push_negations,
    satisfying_set,
    synthesize,
    to_rule_systems,
    with_progress,
)
from bipglue.synthesis.formula import is_tautology
from bipglue.trees import eval_tree, is_normal_tree, parse_tree

BACKUP = Path(__file__).resolve().parents[1] / "samples" / "backup"
UNIVERSE = frozenset({"a", "al", "b", "bl", "on", "onc", "off", "offc", "test"})


def F(text: str):
    return parse_formula(text)


def lit(text: str, positive: bool = True):
    return TypedPort.parse(text), positive


@pytest.fixture(scope="module")
def backup():
    phi = parse_constraints((BACKUP / "constraints.txt").read_text())
    return phi, synthesize(phi)


@pytest.fixture(scope="module")
def assume():
    return config_predicate(F("on => -b & -off"))


class TestFormulas:
    def test_precedence(self) -> None:
        assert F("p => q => r") == Implies(F("p"), Implies(F("q"), F("r")))
        assert F("~p! | q & r") == Or((Not(F("p!")), F("q & r")))
        assert F("a! <=> al!") == Iff(fire("a"), fire("al"))
        assert F("tt") == TRUE and F("ff") == FALSE

    def test_text_parses_back(self) -> None:
        for text in ("a! <=> al!", "~(p & -q) | r!", "p! => q => r", "(p | q) & r!"):
            assert F(F(text).to_text()) == F(text)

    def test_holds_in_reads_typings(self) -> None:
        phi = F("p & ~-p & ~q!")
        assert holds_in(phi, parse_interaction("p! q"))
        assert not holds_in(phi, parse_interaction("p q!"))
        assert not holds_in(phi, parse_interaction("-p"))

    def test_constraints_file(self) -> None:
        phi = parse_constraints("# header\np! => q   # inline\n\nq! => p\n")
        assert formula_ports(phi) == frozenset({"p", "q"})
        with pytest.raises(GlueSyntaxError) as info:
            parse_constraints("p! => q\np! =>")
        assert info.value.line == 2

    def test_progress(self) -> None:
        phi = parse_constraints("p => q!", progress=True)
        assert phi == with_progress(F("p => q!"))
        assert not holds_in(phi, parse_interaction("1"))
        assert holds_in(phi, parse_interaction("q!"))


class TestClosure:
    def test_negations_become_typings(self) -> None:
        assert push_negations(F("~(p & -q)")) == F("-p | q")
        assert push_negations(F("~p!")) == Not(Var(TypedPort.parse("p!")))

    def test_closing_adds_axioms_once(self) -> None:
        closed = close_formula(F("p! => -q"))
        assert close_formula(closed) == closed
        assert F("p! => p") in closed.args
        assert F("~(q & -q)") in closed.args

    def test_cnf(self) -> None:
        assert cnf_clauses(F("p! => q")) == [frozenset({lit("p!", False), lit("q")})]
        assert cnf_clauses(TRUE) == []
        assert cnf_clauses(FALSE) == [frozenset()]

    def test_tautologies(self) -> None:
        assert is_tautology(frozenset({lit("p!", False), lit("p")}))
        assert is_tautology(frozenset({lit("p", False), lit("-p", False)}))
        assert is_tautology(frozenset({lit("q"), lit("q", False)}))
        assert not is_tautology(frozenset({lit("p!", False), lit("q")}))


class TestSatisfyingSets:
    def test_exact_and_minimal_agree(self) -> None:
        phi = F("p! => q | -r")
        exact = satisfying_set(phi)
        minimal = satisfying_set(phi, minimal=True)
        assert minimal == normalize_interaction_set(exact)
        assert parse_interaction("p! -r") in minimal
        assert parse_interaction("p! q r") not in minimal

    def test_minimal_needs_closed_formulas(self) -> None:
        with pytest.raises(FormulaShapeError, match="closed formula"):
            satisfying_set(F("q => p!"), minimal=True)

    def test_universe_widening(self) -> None:
        assert satisfying_set(F("p!"), universe={"z"}).universe == frozenset({"p", "z"})

    def test_config_predicate(self) -> None:
        holds = config_predicate(F("on => -b & -off"))
        offered = PortConfig.from_mapping({"on": PortState.OFFER, "b": PortState.OFFER})
        quiet = PortConfig.from_mapping({"on": PortState.FIRE, "b": PortState.SILENT})
        assert not holds(offered)
        assert holds(quiet)


class TestSynthesis:
    def test_single_port(self) -> None:
        result = synthesize(F("p!"))
        assert len(result.systems) == 1
        assert result.trees[0].to_text() == "p!"
        assert result.connectors[0].to_text() == "[p!]"

    def test_unsatisfiable(self) -> None:
        assert to_rule_systems(FALSE) == []
        assert to_rule_systems(F("p! & ~p!")) == []
        assert synthesize(FALSE).trees == ()
        assert synthesize(F("ff")).connectors == ()

    def test_equal_firing_fuses_into_one_synchron(self) -> None:
        result = synthesize(F("p! <=> q!"))
        assert [x.to_text() for x in result.connectors] == ["[p! q!]"]

    def test_split_limit(self, backup) -> None:
        phi, _ = backup
        with pytest.raises(SplitLimitError, match="max_splits"):
            to_rule_systems(phi, config=GlueConfig(max_splits=0))

    def test_backup_controller_systems(self, backup, assume) -> None:
        _, result = backup
        assert len(result.systems) == 3
        tables = [parse_rules((BACKUP / f"s{i}.rules").read_text()) for i in (1, 2, 3)]
        matched = set()
        for system in result.systems:
            assert system.universe == UNIVERSE
            hits = [
                index
                for index, table in enumerate(tables)
                if equiv_offer(minimal_models(system), minimal_models(table), assume=assume)
            ]
            assert len(hits) == 1
            matched.add(hits[0])
        assert matched == {0, 1, 2}

    def test_backup_controller_trees(self, backup, assume) -> None:
        _, result = backup
        expected = [parse_tree(line) for line in (BACKUP / "trees.txt").read_text().splitlines() if line]
        for tree in result.trees:
            assert is_normal_tree(tree)
            got = eval_tree(tree, UNIVERSE)
            assert any(equiv_offer(got, eval_tree(t, UNIVERSE), assume=assume) for t in expected)

    def test_backup_controller_with_progress(self, assume) -> None:
        phi = parse_constraints((BACKUP / "constraints.txt").read_text(), progress=True)
        result = synthesize(phi)
        assert len(result.systems) == 3
        expected = [parse_tree(line) for line in (BACKUP / "trees.txt").read_text().splitlines() if line]
        for tree in result.trees:
            got = eval_tree(tree, UNIVERSE)
            assert any(equiv_offer(got, eval_tree(t, UNIVERSE), assume=assume) for t in expected)

    def test_backup_controller_is_exact(self, backup) -> None:
        phi, result = backup
        reference = satisfying_set(close_formula(phi), minimal=True)
        assert equiv_offer(result.interactions(), reference)
