"""DOT renderings of the tree-shaped values, labels as node text."""

from __future__ import annotations

from .gaptrees import LabeledTree
from .treeterms import Circ, TreeTerm
from .wexpr import (
    ConstVal,
    HoleVal,
    Leaf,
    ListVal,
    Node,
    PairVal,
    SumVal,
    TreeVal,
)


class _Dot:
    def __init__(self):
        self.lines = ["digraph {", '  node [shape=circle, fontsize=10];']
        self.counter = 0

    def node(self, label: str) -> str:
        name = f"n{self.counter}"
        self.counter += 1
        self.lines.append(f'  {name} [label="{label}"];')
        return name

    def edge(self, a: str, b: str):
        self.lines.append(f"  {a} -> {b};")

    def render(self) -> str:
        return "\n".join(self.lines + ["}"]) + "\n"


def labeled_tree_dot(t: LabeledTree) -> str:
    d = _Dot()

    def walk(node) -> str:
        me = d.node(str(node.label))
        for c in node.children:
            d.edge(me, walk(c))
        return me

    walk(t)
    return d.render()


def tree_term_dot(t: TreeTerm) -> str:
    d = _Dot()
    _tree_term_node(d, t)
    return d.render()


def _tree_term_node(d: _Dot, t: TreeTerm) -> str:
    me = d.node("o")
    if not isinstance(t, Circ):
        d.edge(me, _element_node(d, t.body))
    return me


def _element_node(d: _Dot, a) -> str:
    if isinstance(a, HoleVal):
        return _tree_term_node(d, a.value)
    if isinstance(a, ConstVal):
        return d.node(f"#{a.index}")
    if isinstance(a, SumVal):
        me = d.node("inl" if a.side == 0 else "inr")
        d.edge(me, _element_node(d, a.value))
        return me
    if isinstance(a, PairVal):
        me = d.node("pair")
        d.edge(me, _element_node(d, a.left))
        d.edge(me, _element_node(d, a.right))
        return me
    if isinstance(a, ListVal):
        me = d.node("seq")
        for x in a.items:
            d.edge(me, _element_node(d, x))
        return me
    if isinstance(a, TreeVal):
        return _btree_node(d, a.tree)
    raise TypeError(f"not an element: {a!r}")


def _btree_node(d: _Dot, t) -> str:
    if isinstance(t, Leaf):
        return _element_node(d, t.value)
    me = d.node("B")
    d.edge(me, _btree_node(d, t.left))
    d.edge(me, _btree_node(d, t.right))
    return me


def binary_tree_dot(t) -> str:
    d = _Dot()
    _btree_node(d, t)
    return d.render()
