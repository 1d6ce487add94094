"""Constructor expressions over a place-holder, and the induced orders.

A constructor expression is built from the hole ``_``, finite-poset
constants, disjoint unions, cartesian products, the finite-sequence
order, and leaf-labeled structured binary trees.  Plugging a carrier
order into the hole turns the expression into a decidable order on
structured values; every value decomposes into a naked shape plus the
list of carrier values sitting in its holes, read left to right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .posets import FinitePoset


class ShapeError(ValueError):
    """Element does not match the governing constructor expression."""


# --- constructor expressions


@dataclass(frozen=True)
class Hole:
    pass


@dataclass(frozen=True)
class Const:
    poset: FinitePoset


@dataclass(frozen=True)
class Sum:
    left: "WExpr"
    right: "WExpr"


@dataclass(frozen=True)
class Prod:
    left: "WExpr"
    right: "WExpr"


@dataclass(frozen=True)
class Star:
    inner: "WExpr"


@dataclass(frozen=True)
class BTree:
    inner: "WExpr"


WExpr = Union[Hole, Const, Sum, Prod, Star, BTree]


# --- elements


@dataclass(frozen=True)
class HoleVal:
    value: object


@dataclass(frozen=True)
class ConstVal:
    index: int


@dataclass(frozen=True)
class SumVal:
    side: int  # 0 = left, 1 = right
    value: "WElement"


@dataclass(frozen=True)
class PairVal:
    left: "WElement"
    right: "WElement"


@dataclass(frozen=True)
class ListVal:
    items: tuple["WElement", ...]


@dataclass(frozen=True)
class Leaf:
    value: "WElement"


@dataclass(frozen=True)
class Node:
    left: "BinaryTree"
    right: "BinaryTree"


BinaryTree = Union[Leaf, Node]


@dataclass(frozen=True)
class TreeVal:
    tree: BinaryTree


WElement = Union[HoleVal, ConstVal, SumVal, PairVal, ListVal, TreeVal]


def element_matches(w: WExpr, a: WElement) -> bool:
    if isinstance(w, Hole):
        return isinstance(a, HoleVal)
    if isinstance(w, Const):
        return isinstance(a, ConstVal) and 0 <= a.index < w.poset.size
    if isinstance(w, Sum):
        return isinstance(a, SumVal) and element_matches(
            w.left if a.side == 0 else w.right, a.value
        )
    if isinstance(w, Prod):
        return (
            isinstance(a, PairVal)
            and element_matches(w.left, a.left)
            and element_matches(w.right, a.right)
        )
    if isinstance(w, Star):
        return isinstance(a, ListVal) and all(
            element_matches(w.inner, x) for x in a.items
        )
    if isinstance(w, BTree):
        return isinstance(a, TreeVal) and _btree_matches(w.inner, a.tree)
    raise TypeError(f"not a constructor expression: {w!r}")


def _btree_matches(w: WExpr, t: BinaryTree) -> bool:
    if isinstance(t, Leaf):
        return element_matches(w, t.value)
    return _btree_matches(w, t.left) and _btree_matches(w, t.right)


# --- Higman sequence embedding


def higman_leq(xs, ys, leq: Callable) -> bool:
    """Subsequence embedding with componentwise domination, decided by
    greedy leftmost matching (equivalent to existence)."""
    j = 0
    for x in xs:
        while j < len(ys) and not leq(x, ys[j]):
            j += 1
        if j == len(ys):
            return False
        j += 1
    return True


def higman_leq_exhaustive(xs, ys, leq: Callable) -> bool:
    """Independent oracle: search all strictly increasing index maps."""
    n, m = len(xs), len(ys)
    if n > m:
        return False
    for positions in itertools.combinations(range(m), n):
        if all(leq(xs[k], ys[positions[k]]) for k in range(n)):
            return True
    return False


# --- structured binary tree embedding


def btree_embed(s: BinaryTree, t: BinaryTree, leaf_leq: Callable) -> bool:
    """Homeomorphic embedding of structured binary trees: leaf into leaf
    by label order, descent into either immediate subtree, or
    component-wise at the root.  Memoized over subtree pairs."""
    memo: dict = {}

    def go(a, b):
        key = (a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if isinstance(b, Leaf):
            out = isinstance(a, Leaf) and leaf_leq(a.value, b.value)
        else:
            out = go(a, b.left) or go(a, b.right)
            if not out and isinstance(a, Node):
                out = go(a.left, b.left) and go(a.right, b.right)
        memo[key] = out
        return out

    return go(s, t)


def btree_embed_naive(s: BinaryTree, t: BinaryTree, leaf_leq: Callable) -> bool:
    """Unmemoized literal recursion; oracle for btree_embed."""
    if isinstance(t, Leaf):
        return isinstance(s, Leaf) and leaf_leq(s.value, t.value)
    if btree_embed_naive(s, t.left, leaf_leq) or btree_embed_naive(s, t.right, leaf_leq):
        return True
    return (
        isinstance(s, Node)
        and btree_embed_naive(s.left, t.left, leaf_leq)
        and btree_embed_naive(s.right, t.right, leaf_leq)
    )


# --- the composite order


def w_leq(w: WExpr, a: WElement, b: WElement, base_leq: Callable) -> bool:
    """Decide the order of the plugged constructor compositionally."""
    if not element_matches(w, a) or not element_matches(w, b):
        raise ShapeError(f"elements do not fit {w!r}")
    return _w_leq(w, a, b, base_leq)


def _w_leq(w, a, b, base_leq) -> bool:
    if isinstance(w, Hole):
        return base_leq(a.value, b.value)
    if isinstance(w, Const):
        return w.poset.le(a.index, b.index)
    if isinstance(w, Sum):
        if a.side != b.side:
            return False
        return _w_leq(w.left if a.side == 0 else w.right, a.value, b.value, base_leq)
    if isinstance(w, Prod):
        return _w_leq(w.left, a.left, b.left, base_leq) and _w_leq(
            w.right, a.right, b.right, base_leq
        )
    if isinstance(w, Star):
        return higman_leq(
            a.items, b.items, lambda x, y: _w_leq(w.inner, x, y, base_leq)
        )
    if isinstance(w, BTree):
        return btree_embed(
            a.tree, b.tree, lambda x, y: _w_leq(w.inner, x, y, base_leq)
        )
    raise TypeError(f"not a constructor expression: {w!r}")


# --- naked terms


def naked_term(a: WElement):
    """Erase hole contents: returns the shape (holes as HoleVal(None))
    and the contents in left-to-right, depth-first order."""
    contents: list = []

    def strip(x):
        if isinstance(x, HoleVal):
            contents.append(x.value)
            return HoleVal(None)
        if isinstance(x, ConstVal):
            return x
        if isinstance(x, SumVal):
            return SumVal(x.side, strip(x.value))
        if isinstance(x, PairVal):
            return PairVal(strip(x.left), strip(x.right))
        if isinstance(x, ListVal):
            return ListVal(tuple(strip(i) for i in x.items))
        if isinstance(x, TreeVal):
            return TreeVal(strip_tree(x.tree))
        raise TypeError(f"not an element: {x!r}")

    def strip_tree(t):
        if isinstance(t, Leaf):
            return Leaf(strip(t.value))
        return Node(strip_tree(t.left), strip_tree(t.right))

    shape = strip(a)
    return shape, contents


def substitute(shape: WElement, contents) -> WElement:
    """Inverse of naked_term."""
    it = iter(contents)

    def fill(x):
        if isinstance(x, HoleVal):
            return HoleVal(next(it))
        if isinstance(x, ConstVal):
            return x
        if isinstance(x, SumVal):
            return SumVal(x.side, fill(x.value))
        if isinstance(x, PairVal):
            return PairVal(fill(x.left), fill(x.right))
        if isinstance(x, ListVal):
            return ListVal(tuple(fill(i) for i in x.items))
        if isinstance(x, TreeVal):
            return TreeVal(fill_tree(x.tree))
        raise TypeError(f"not an element: {x!r}")

    def fill_tree(t):
        if isinstance(t, Leaf):
            return Leaf(fill(t.value))
        return Node(fill_tree(t.left), fill_tree(t.right))

    out = fill(shape)
    leftover = object()
    if next(it, leftover) is not leftover:
        raise ValueError("too many hole contents")
    return out


# --- structural size and bounded element generation


def element_weight(a: WElement, value_weight: Callable) -> int:
    """Structural node count; hole slots and leaf wrappers are
    transparent, carrier values weigh in via value_weight."""
    if isinstance(a, HoleVal):
        return value_weight(a.value)
    if isinstance(a, ConstVal):
        return 1
    if isinstance(a, SumVal):
        return 1 + element_weight(a.value, value_weight)
    if isinstance(a, PairVal):
        return 1 + element_weight(a.left, value_weight) + element_weight(
            a.right, value_weight
        )
    if isinstance(a, ListVal):
        return 1 + sum(element_weight(x, value_weight) for x in a.items)
    if isinstance(a, TreeVal):
        return _tree_weight(a.tree, value_weight)
    raise TypeError(f"not an element: {a!r}")


def _tree_weight(t: BinaryTree, value_weight) -> int:
    if isinstance(t, Leaf):
        return element_weight(t.value, value_weight)
    return 1 + _tree_weight(t.left, value_weight) + _tree_weight(t.right, value_weight)


def elements_of_weight(w: WExpr, weight: int, values_by_weight) -> Iterator[WElement]:
    """All elements of w with exactly the given structural weight, where
    values_by_weight(k) lists the carrier values of weight k."""
    if isinstance(w, Hole):
        for v in values_by_weight(weight):
            yield HoleVal(v)
        return
    if isinstance(w, Const):
        if weight == 1:
            for i in range(w.poset.size):
                yield ConstVal(i)
        return
    if isinstance(w, Sum):
        if weight >= 2:
            for x in elements_of_weight(w.left, weight - 1, values_by_weight):
                yield SumVal(0, x)
            for x in elements_of_weight(w.right, weight - 1, values_by_weight):
                yield SumVal(1, x)
        return
    if isinstance(w, Prod):
        for k in range(1, weight - 1):
            for x in elements_of_weight(w.left, k, values_by_weight):
                for y in elements_of_weight(w.right, weight - 1 - k, values_by_weight):
                    yield PairVal(x, y)
        return
    if isinstance(w, Star):
        for items in _lists_of_weight(w.inner, weight - 1, values_by_weight):
            yield ListVal(items)
        return
    if isinstance(w, BTree):
        for t in _btrees_of_weight(w.inner, weight, values_by_weight):
            yield TreeVal(t)
        return
    raise TypeError(f"not a constructor expression: {w!r}")


def _lists_of_weight(inner, weight, values_by_weight):
    if weight == 0:
        yield ()
        return
    for k in range(1, weight + 1):
        for head in elements_of_weight(inner, k, values_by_weight):
            for tail in _lists_of_weight(inner, weight - k, values_by_weight):
                yield (head,) + tail


def _btrees_of_weight(inner, weight, values_by_weight):
    for x in elements_of_weight(inner, weight, values_by_weight):
        yield Leaf(x)
    for k in range(1, weight - 1):
        for l in _btrees_of_weight(inner, k, values_by_weight):
            for r in _btrees_of_weight(inner, weight - 1 - k, values_by_weight):
                yield Node(l, r)
