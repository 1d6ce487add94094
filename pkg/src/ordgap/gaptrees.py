"""Labeled rooted trees under the weak gap-embedding order.

An embedding is an injective, order- and infimum-preserving,
label-preserving map; the gap condition demands that every node
strictly between the images of a parent and its immediate successor
carries a label at least the successor's.  Nothing is required above
the image of the root (the weak variant).  Structured embeddings must
also keep each node's children in their left-to-right order.

The two-labeled restricted class (0-nodes with at most one child,
1-nodes with exactly two, root labeled 0) is order-isomorphic to the
tree terms over structured binary trees; to_gap / from_gap implement
the isomorphism in both directions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .treeterms import CIRC, Apply, Circ, TreeTerm
from .wexpr import BTree, Hole, HoleVal, Leaf, Node, TreeVal


@dataclass(frozen=True)
class LabeledTree:
    label: int
    children: tuple["LabeledTree", ...] = ()


def tree_nodes(t: LabeledTree) -> int:
    return 1 + sum(tree_nodes(c) for c in t.children)


class _Indexed:
    """Parent/ancestor/meet tables for one tree, nodes in preorder."""

    def __init__(self, t: LabeledTree):
        self.labels: list[int] = []
        self.parent: list[int] = []
        self.kids: list[list[int]] = []

        def walk(node, par):
            i = len(self.labels)
            self.labels.append(node.label)
            self.parent.append(par)
            self.kids.append([])
            if par >= 0:
                self.kids[par].append(i)
            for c in node.children:
                walk(c, i)

        walk(t, -1)
        self.n = len(self.labels)
        self.ancs = []
        for i in range(self.n):
            path = []
            j = i
            while j >= 0:
                path.append(j)
                j = self.parent[j]
            self.ancs.append(path)  # i up to the root, inclusive

    def le(self, a: int, b: int) -> bool:
        """Tree order: a <= b iff a is an ancestor of b (or equal)."""
        return a in self.ancs[b]

    def meet(self, a: int, b: int) -> int:
        sa = set(self.ancs[a])
        for x in self.ancs[b]:
            if x in sa:
                return x
        raise AssertionError("rooted trees always meet")

    def strictly_between(self, a: int, b: int) -> list[int]:
        """Nodes on the path from a down to b, both ends excluded."""
        out = []
        j = self.parent[b]
        while j >= 0 and j != a:
            out.append(j)
            j = self.parent[j]
        return out

    def child_slot(self, v: int, d: int) -> int:
        """Index of v's child whose subtree contains the descendant d."""
        path = self.ancs[d]
        for k, c in enumerate(self.kids[v]):
            if c in path:
                return k
        raise AssertionError("d is not a strict descendant of v")


def gap_leq(t1: LabeledTree, t2: LabeledTree, structured: bool = True) -> bool:
    """Weak gap-embeddability, decided by memoized search over pairs of
    a t1 subtree root and a t2 landing node."""
    a, b = _Indexed(t1), _Indexed(t2)
    memo: dict = {}

    def emb(u: int, v: int) -> bool:
        """Can the subtree at u map with u landing exactly on v?"""
        key = (u, v)
        hit = memo.get(key)
        if hit is not None:
            return hit
        out = False
        if a.labels[u] == b.labels[v]:
            slots = b.kids[v]
            admissible = [
                [s for s in range(len(slots)) if reach(slots[s], ci)]
                for ci in a.kids[u]
            ]
            out = _assign(admissible, len(slots), structured)
        memo[key] = out
        return out

    rmemo: dict = {}

    def reach(x: int, u: int) -> bool:
        """Can child u land at or below x with every node passed
        through (x included, the landing excluded) labeled >= u's?"""
        key = (x, u)
        hit = rmemo.get(key)
        if hit is not None:
            return hit
        out = emb(u, x) or (
            b.labels[x] >= a.labels[u] and any(reach(y, u) for y in b.kids[x])
        )
        rmemo[key] = out
        return out

    return any(emb(0, v) for v in range(b.n))


def _assign(admissible: list[list[int]], slot_count: int, structured: bool) -> bool:
    """Injective assignment of children to distinct slots; structured
    assignments must be strictly increasing."""
    if not admissible:
        return True
    if structured:
        # greedy leftmost is complete: admissibility is per-pair
        prev = -1
        for options in admissible:
            nxt = min((s for s in options if s > prev), default=None)
            if nxt is None:
                return False
            prev = nxt
        return True
    used: set[int] = set()

    def bt(i: int) -> bool:
        if i == len(admissible):
            return True
        for s in admissible[i]:
            if s not in used:
                used.add(s)
                if bt(i + 1):
                    return True
                used.remove(s)
        return False

    return bt(0)


def brute_gap_leq(t1: LabeledTree, t2: LabeledTree, structured: bool = True) -> bool:
    """Independent oracle: enumerate every injective node map and check
    all embedding conditions literally.  Guarded to small inputs."""
    a, b = _Indexed(t1), _Indexed(t2)
    if a.n > 8 or b.n > 9:
        raise ValueError("brute-force oracle is for small trees")
    if a.n > b.n:
        return False
    for image in itertools.permutations(range(b.n), a.n):
        if _check_map(a, b, image, structured):
            return True
    return False


def _check_map(a: _Indexed, b: _Indexed, f, structured: bool) -> bool:
    for u in range(a.n):
        if a.labels[u] != b.labels[f[u]]:
            return False
    for u, v in itertools.product(range(a.n), repeat=2):
        if a.le(u, v) and not b.le(f[u], f[v]):
            return False
        if f[a.meet(u, v)] != b.meet(f[u], f[v]):
            return False
    for u in range(a.n):
        for c in a.kids[u]:
            for between in b.strictly_between(f[u], f[c]):
                if b.labels[between] < b.labels[f[c]]:
                    return False
    if structured:
        for u in range(a.n):
            slots = [b.child_slot(f[u], f[c]) for c in a.kids[u]]
            if any(y <= x for x, y in zip(slots, slots[1:])):
                return False
    return True


# ---------------------------------------------------------------------------
# The restricted two-label class and its isomorphism with tree terms


def labeled_trees_of_size(n: int, labels=(0, 1)) -> list[LabeledTree]:
    """All ordered rooted trees with exactly n nodes over the alphabet."""
    if n <= 0:
        return []
    out = []
    for label in labels:
        for kids in _forests(n - 1, labels):
            out.append(LabeledTree(label, kids))
    return out


def _forests(total: int, labels) -> list[tuple[LabeledTree, ...]]:
    if total == 0:
        return [()]
    out = []
    for first in range(1, total + 1):
        for head in labeled_trees_of_size(first, labels):
            for tail in _forests(total - first, labels):
                out.append((head,) + tail)
    return out


def in_t2bar(t: LabeledTree) -> bool:
    """Root labeled 0, 0-nodes with at most one child, 1-nodes with
    exactly two."""
    if t.label != 0:
        return False

    def ok(node) -> bool:
        if node.label == 0:
            if len(node.children) > 1:
                return False
        elif node.label == 1:
            if len(node.children) != 2:
                return False
        else:
            return False
        return all(ok(c) for c in node.children)

    return ok(t)


def to_gap(t: TreeTerm) -> LabeledTree:
    """Tree term over structured binary trees as a two-labeled tree:
    a 0-root over the body's image, internal nodes labeled 1, leaves
    replaced by the images of their tree-term labels."""
    if isinstance(t, Circ):
        return LabeledTree(0)
    body = t.body
    if not isinstance(body, TreeVal):
        raise ValueError("to_gap expects terms over B(_)")
    return LabeledTree(0, (_btree_to_gap(body.tree),))


def _btree_to_gap(bt) -> LabeledTree:
    if isinstance(bt, Leaf):
        if not isinstance(bt.value, HoleVal):
            raise ValueError("to_gap expects terms over B(_)")
        return to_gap(bt.value.value)
    return LabeledTree(1, (_btree_to_gap(bt.left), _btree_to_gap(bt.right)))


def from_gap(t: LabeledTree) -> TreeTerm:
    """Inverse of to_gap on the restricted two-label class."""
    if not in_t2bar(t):
        raise ValueError("tree is not in the restricted two-label class")
    if not t.children:
        return CIRC
    return Apply(TreeVal(_gap_to_btree(t.children[0])))


def _gap_to_btree(node: LabeledTree):
    if node.label == 1:
        return Node(_gap_to_btree(node.children[0]), _gap_to_btree(node.children[1]))
    return Leaf(HoleVal(from_gap(node)))
