"""Single rewrite steps of the causal tree axioms and their derived lemmas.

Positions are paths of child indices starting with the index of a root;
the empty path addresses the top-level forest. Axioms 2, 3, 4, 6 and 7
preserve the interaction semantics exactly; axiom 5 and the lemmas
preserve it up to offer equivalence.
"""

from __future__ import annotations

from typing import Callable

from loguru import logger

from bipglue.errors import AxiomApplicationError
from bipglue.kernel.interaction import CONTRADICTION, ONE, Interaction
from bipglue.kernel.ports import TypedPort
from bipglue.trees.tree import CausalTree, Node, canonical_forest

Path = tuple[int, ...]

AXIOMS = (
    "1a",
    "1b",
    "1c",
    "1d",
    "2",
    "3",
    "4",
    "5",
    "6",
    "7",
    "nofiring_leaf",
    "one_node",
    "pushdown_node",
)


def node_at(t: CausalTree, path: Path) -> Node:
    if not path:
        raise AxiomApplicationError("the empty path addresses the forest, not a node")
    nodes = t.forest
    node = None
    for index in path:
        if index < 0 or index >= len(nodes):
            raise AxiomApplicationError(f"no node at position {list(path)}")
        node = nodes[index]
        nodes = node.children
    return node


def _replace(nodes: tuple[Node, ...], path: Path, build: Callable[[Node], tuple[Node, ...]]):
    index, rest = path[0], path[1:]
    node = nodes[index]
    if rest:
        replacement = (Node(node.label, _replace(node.children, rest, build)),)
    else:
        replacement = build(node)
    return nodes[:index] + replacement + nodes[index + 1 :]


def _rewrite(t: CausalTree, path: Path, build: Callable[[Node], tuple[Node, ...]]) -> CausalTree:
    node_at(t, path)
    return CausalTree(_replace(t.forest, path, build))


def _fire_free(node: Node) -> bool:
    return isinstance(node.label, Interaction) and not node.label.fire


def _need_inner(path: Path, which: str) -> None:
    if len(path) < 2:
        raise AxiomApplicationError(f"axiom {which} applies below a cause only, not at a root")


def _axiom_2(t: CausalTree, path: Path) -> CausalTree:
    if not path:
        result = CausalTree(canonical_forest(t.forest))
    else:
        result = _rewrite(t, path, lambda n: (Node(n.label, canonical_forest(n.children)),))
    if result == t:
        raise AxiomApplicationError("forest is already in canonical (+) order")
    return result


def _axiom_3(t: CausalTree, path: Path) -> CausalTree:
    node = node_at(t, path)
    zero = Node(CONTRADICTION)
    if zero not in node.children:
        raise AxiomApplicationError("axiom 3 needs a 0 leaf below the node")
    return _rewrite(t, path, lambda n: (Node(n.label, tuple(c for c in n.children if c != zero)),))


def _axiom_4(t: CausalTree, path: Path) -> CausalTree:
    node = node_at(t, path)
    if node.label is not CONTRADICTION or node.is_leaf:
        raise AxiomApplicationError("axiom 4 needs a 0 node with successors")
    return _rewrite(t, path, lambda n: (Node(CONTRADICTION),))


def _axiom_5(t: CausalTree, path: Path) -> CausalTree:
    _need_inner(path, "5")
    node = node_at(t, path)
    if not _fire_free(node) or len(node.children) != 1:
        raise AxiomApplicationError("axiom 5 needs a node without firing ports and one successor")
    child = node.children[0]
    return _rewrite(t, path, lambda n: (Node(n.label.merge(child.label), child.children),))


def _with_port(node: Node, port: TypedPort) -> Node:
    if node.label is CONTRADICTION:
        return node
    return Node(node.label.add(port), node.children)


def _axiom_6(t: CausalTree, path: Path, port: TypedPort | None) -> CausalTree:
    node = node_at(t, path)
    if port is None:
        raise AxiomApplicationError("axiom 6 needs the typed port to push")
    if not isinstance(node.label, Interaction) or node.label.typing_of(port.port) is not port.typing:
        raise AxiomApplicationError(f"node label does not carry {port}")
    if node.is_leaf:
        raise AxiomApplicationError("axiom 6 needs successors to push into")
    result = _rewrite(
        t,
        path,
        lambda n: (Node(n.label, tuple(_with_port(c, port) for c in n.children)),),
    )
    if result == t:
        raise AxiomApplicationError(f"every successor already carries {port}")
    return result


def _axiom_7(t: CausalTree, path: Path) -> CausalTree:
    node = node_at(t, path)
    if len(node.children) < 2:
        raise AxiomApplicationError("axiom 7 needs a node with parallel successors")
    return _rewrite(t, path, lambda n: tuple(Node(n.label, (c,)) for c in n.children))


def _nofiring_leaf(t: CausalTree, path: Path) -> CausalTree:
    _need_inner(path, "nofiring_leaf")
    node = node_at(t, path)
    if not _fire_free(node) or not node.is_leaf:
        raise AxiomApplicationError("nofiring_leaf needs a leaf without firing ports")
    return _rewrite(t, path, lambda n: ())


def _one_node(t: CausalTree, path: Path) -> CausalTree:
    _need_inner(path, "one_node")
    if node_at(t, path).label != ONE:
        raise AxiomApplicationError("one_node needs a node labelled 1")
    return _rewrite(t, path, lambda n: n.children)


def _pushdown_node(t: CausalTree, path: Path) -> CausalTree:
    _need_inner(path, "pushdown_node")
    node = node_at(t, path)
    if not _fire_free(node) or node.is_leaf:
        raise AxiomApplicationError("pushdown_node needs an inner node without firing ports")
    return _rewrite(
        t, path, lambda n: tuple(Node(n.label.merge(c.label), c.children) for c in n.children)
    )


def rewrite_axiom(
    t: CausalTree,
    which: str,
    position: Path = (),
    port: TypedPort | None = None,
) -> CausalTree:
    """Apply one axiom or derived lemma at ``position``.

    Raises:
        AxiomApplicationError: unknown axiom, bad position, or the rewrite
            does not apply there
    """
    position = tuple(position)
    if which in ("1a", "1b", "1c", "1d"):
        node_at(t, position)
        raise AxiomApplicationError(
            f"axiom {which} is a law of node labels; labels are kept canonical, so it is a no-op"
        )
    steps = {
        "2": _axiom_2,
        "3": _axiom_3,
        "4": _axiom_4,
        "5": _axiom_5,
        "7": _axiom_7,
        "nofiring_leaf": _nofiring_leaf,
        "one_node": _one_node,
        "pushdown_node": _pushdown_node,
    }
    if which == "6":
        result = _axiom_6(t, position, port)
    elif which in steps:
        result = steps[which](t, position)
    else:
        raise AxiomApplicationError(f"unknown axiom {which!r}; expected one of {', '.join(AXIOMS)}")
    logger.debug("axiom {} at {}: {} => {}", which, list(position), t, result)
    return result


def applicable_positions(t: CausalTree, which: str, port: TypedPort | None = None) -> list[Path]:
    """Positions where ``which`` applies, in depth-first order."""
    out = []
    candidates = [()] + [path for path, _ in t.nodes()]
    for path in candidates:
        try:
            if which == "6":
                _axiom_6(t, path, port)
            elif which in ("1a", "1b", "1c", "1d"):
                continue
            else:
                rewrite_axiom(t, which, path)
        except AxiomApplicationError:
            continue
        out.append(path)
    return out
