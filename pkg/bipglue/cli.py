"""Command-line entry point: ``bipglue VERB [options] INPUT...``.

Inline inputs are term texts; ``@path`` reads the term from a file.
Exit status is 0 on success (or equivalence), 1 when ``equiv`` finds the
inputs different, 2 for usage, syntax or file errors and 3 for any other
glue error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from loguru import logger

from bipglue import __version__
from bipglue.behavior.glue import load_behaviour, load_glue
from bipglue.config import GlueConfig
from bipglue.connectors.normal import normalize_connector
from bipglue.connectors.syntax import parse_connector
from bipglue.connectors.term import eval_connector
from bipglue.connectors.transform import sigma, tau
from bipglue.errors import GlueError, GlueSyntaxError
from bipglue.kernel.algebra import eval_ai
from bipglue.kernel.equivalence import equiv_strong, find_offer_witness, normalize_interaction_set
from bipglue.kernel.interaction import InteractionSet
from bipglue.kernel.syntax import parse_ai, use_compact
from bipglue.log import configure_logging
from bipglue.render import behaviour_to_dot, connector_to_dot, tree_to_dot
from bipglue.rules.extract import rules_of_tree
from bipglue.rules.reconstruct import tree_of_rules
from bipglue.rules.syntax import format_rules, parse_rules
from bipglue.rules.system import FIRING_ONLY, FULL, eval_rules
from bipglue.synthesis.pipeline import synthesize
from bipglue.synthesis.syntax import parse_constraints
from bipglue.trees.normal import normalize_tree
from bipglue.trees.syntax import parse_tree
from bipglue.trees.tree import CausalTree, eval_tree

KINDS = ("ai", "conn", "tree", "rules")
FORMATS = ("conn", "tree", "rules", "rules-full")


def _read(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text(encoding="utf-8")
    return arg


def _compact(args: argparse.Namespace) -> bool | None:
    return {"auto": None, "on": True, "off": False}[args.compact]


def _universe(args: argparse.Namespace) -> frozenset[str]:
    if not args.universe:
        return frozenset()
    return frozenset(p.strip() for p in args.universe.split(",") if p.strip())


def _config(args: argparse.Namespace) -> GlueConfig:
    return GlueConfig.from_args(
        max_ports=args.max_ports,
        max_splits=args.max_splits,
        strict_roots=args.strict,
        check_contracts=not args.no_check,
    )


def _set_text(s: InteractionSet, compact: bool) -> str:
    if not compact:
        return s.to_text()
    items = ["".join(str(tp) for tp in a.typed_ports()) or "1" for a in s.sorted()]
    return "{" + ", ".join(items) + "}"


def _evaluate(kind: str, text: str, args: argparse.Namespace) -> InteractionSet:
    compact = _compact(args)
    universe = _universe(args)
    if kind == "ai":
        return eval_ai(parse_ai(text, compact), universe)
    if kind == "conn":
        return eval_connector(parse_connector(text, compact), universe)
    if kind == "tree":
        return eval_tree(parse_tree(text), universe)
    rules = parse_rules(text, universe=universe)
    return eval_rules(rules, config=_config(args))


def _as_tree(kind: str, text: str, args: argparse.Namespace) -> CausalTree:
    config = _config(args)
    if kind == "conn":
        return tau(parse_connector(text, _compact(args)), config=config)
    if kind == "tree":
        return parse_tree(text)
    return tree_of_rules(parse_rules(text, mode=FIRING_ONLY, universe=_universe(args)), config=config)


def _cmd_eval(args: argparse.Namespace) -> int:
    text = _read(args.expr)
    result = _evaluate(args.kind, text, args)
    compact = args.kind in ("ai", "conn") and use_compact(text, _compact(args))
    print(_set_text(result, compact))
    return 0


def _cmd_convert(args: argparse.Namespace) -> int:
    if args.source == "rules-full":
        raise GlueError("full rule systems cannot be converted; use a firing-only system")
    tree = _as_tree(args.source, _read(args.expr), args)
    if args.target == "conn":
        print(sigma(tree).to_text())
    elif args.target == "tree":
        print(tree.to_text())
    else:
        mode = FULL if args.target == "rules-full" else FIRING_ONLY
        print(format_rules(rules_of_tree(tree, mode)), end="")
    return 0


def _cmd_normalize(args: argparse.Namespace) -> int:
    text = _read(args.expr)
    config = _config(args)
    if args.kind == "tree":
        print(normalize_tree(parse_tree(text), config=config).to_text())
    elif args.kind == "conn":
        print(normalize_connector(parse_connector(text, _compact(args)), config=config).to_text())
    else:
        s = normalize_interaction_set(eval_ai(parse_ai(text, _compact(args)), _universe(args)))
        print(_set_text(s, use_compact(text, _compact(args))))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    s1 = _evaluate(args.kind, _read(args.left), args)
    s2 = _evaluate(args.kind, _read(args.right), args)
    universe = s1.universe | s2.universe
    s1, s2 = s1.widen(universe), s2.widen(universe)
    if args.mode == "strong":
        same = equiv_strong(s1, s2)
        print("equivalent" if same else "not equivalent")
        return 0 if same else 1
    witness = find_offer_witness(s1, s2, config=_config(args))
    if witness is None:
        print("equivalent")
        return 0
    print(f"not equivalent at {witness}")
    return 1


def _cmd_compose(args: argparse.Namespace) -> int:
    glue = load_glue(args.glue)
    components = [load_behaviour(path) for path in args.components]
    composed = glue.apply(*components)
    print(json.dumps(composed.to_dict(), indent=2))
    return 0


def _cmd_synthesize(args: argparse.Namespace) -> int:
    phi = parse_constraints(_read(args.file), progress=args.progress)
    result = synthesize(phi, config=_config(args))
    for system, tree, connector in zip(result.systems, result.trees, result.connectors):
        if args.emit == "rules":
            print(format_rules(system))
        elif args.emit == "trees":
            print(tree.to_text())
        else:
            print(connector.to_text())
    return 0


def _cmd_render(args: argparse.Namespace) -> int:
    if args.kind == "behaviour":
        graph = behaviour_to_dot(load_behaviour(args.expr))
    elif args.kind == "tree":
        graph = tree_to_dot(parse_tree(_read(args.expr)))
    else:
        graph = connector_to_dot(parse_connector(_read(args.expr), _compact(args)))
    print(graph.to_string())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bipglue", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--max-ports", type=int, default=16, help="enumeration cap")
    parser.add_argument("--max-splits", type=int, default=64, help="case-split cap in synthesis")
    parser.add_argument("--strict", action="store_true", help="drop non-firing root leaves")
    parser.add_argument("--no-check", action="store_true", help="skip contract checks")
    parser.add_argument("--universe", help="comma-separated ports added to every universe")
    parser.add_argument("--compact", choices=("auto", "on", "off"), default="auto")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    verbs = parser.add_subparsers(dest="verb", required=True)

    p = verbs.add_parser("eval", help="print the interaction semantics of a term")
    p.add_argument("--kind", choices=KINDS, default="ai")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_eval)

    p = verbs.add_parser("convert", help="translate between connectors, trees and rules")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", dest="target", choices=FORMATS, required=True)
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_convert)

    p = verbs.add_parser("normalize", help="print the normal form of a term")
    p.add_argument("--kind", choices=("tree", "conn", "set"), default="tree")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_normalize)

    p = verbs.add_parser("equiv", help="compare two terms; exit 1 when they differ")
    p.add_argument("--mode", choices=("strong", "offer"), default="offer")
    p.add_argument("--kind", choices=KINDS, default="tree")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(handler=_cmd_equiv)

    p = verbs.add_parser("compose", help="apply a glue file to component behaviours")
    p.add_argument("--glue", required=True, type=Path)
    p.add_argument("components", nargs="+", type=Path)
    p.set_defaults(handler=_cmd_compose)

    p = verbs.add_parser("synthesize", help="connectors from a constraints file")
    p.add_argument("file", help="constraints text or @path")
    p.add_argument("--progress", action="store_true", help="require some port to fire")
    p.add_argument("--emit", choices=("connectors", "trees", "rules"), default="connectors")
    p.set_defaults(handler=_cmd_synthesize)

    p = verbs.add_parser("render", help="Graphviz DOT for a behaviour, tree or connector")
    p.add_argument("--kind", choices=("behaviour", "tree", "conn"), required=True)
    p.add_argument("expr", help="behaviour JSON path, or a term text or @path")
    p.set_defaults(handler=_cmd_render)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (GlueSyntaxError, OSError) as error:
        print(f"bipglue: {error}", file=sys.stderr)
        return 2
    except GlueError as error:
        logger.debug("{} failed: {!r}", args.verb, error)
        print(f"bipglue: {error}", file=sys.stderr)
        return 3
    except ValueError as error:
        print(f"bipglue: {error}", file=sys.stderr)
        return 2


def main() -> None:
    raise SystemExit(run())
