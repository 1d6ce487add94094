"""Ordinal terms as tree terms over structured binary trees.

Countable terms map to tree terms: zero to the minimum, a countable sum
to a right comb whose leaves carry the images of its omega-exponents
with a terminal minimum leaf, and a collapsed term v(b) to a node over
the binary tree of b's base-Omega normal form.  That normal-form tree
is a spine of (exponent-tree, coefficient-image) pairs, again ending in
a minimum leaf, so its leaf labels are exactly the images of the
coefficient set plus zero.  The map reflects the order: comparability
of images implies comparability of the ordinals, which the suites test
one-way (the converse is not claimed).
"""

from __future__ import annotations

from .ordinals import (
    CountableSum,
    OmegaCnf,
    OrdinalTerm,
    Ordering3,
    SystemId,
    Theta,
    ThetaPart,
    Zero,
    compare,
    is_countable,
    max_coefficient,
    validate,
)
from .treeterms import CIRC, Apply, TreeTerm
from .wexpr import BinaryTree, BTree, Hole, HoleVal, Leaf, Node, TreeVal

B_OF_HOLE = BTree(Hole())


class CollapseError(ValueError):
    pass


def is_collapsing_normal(t: OrdinalTerm) -> bool:
    """Every collapsed subterm v(b) satisfies k(b) < v(b).  The order
    criterion makes this automatic for valid terms; kept as an explicit
    guard because the mapping's correctness argument leans on it."""
    for b in _theta_args(t):
        if compare(max_coefficient(b), Theta(b)) is not Ordering3.LT:
            return False
    return True


def _theta_args(t: OrdinalTerm):
    if isinstance(t, Zero):
        return
    if isinstance(t, Theta):
        yield t.arg
        yield from _theta_args(t.arg)
    elif isinstance(t, CountableSum):
        for p in t.parts:
            inner = p.arg if isinstance(p, ThetaPart) else p.exponent
            if isinstance(p, ThetaPart):
                yield inner
            yield from _theta_args(inner)
    elif isinstance(t, OmegaCnf):
        for e, c in t.monomials:
            yield from _theta_args(e)
            yield from _theta_args(c)


def ord_to_tree(a: OrdinalTerm) -> TreeTerm:
    """The quasi-embedding g on countable FULL-system terms."""
    if not is_countable(a):
        raise CollapseError("only countable terms map to tree terms")
    report = validate(a, SystemId.FULL)
    if not report:
        raise CollapseError(
            f"not a valid FULL term: {report.clause} at {report.path}"
        )
    if not is_collapsing_normal(a):
        raise CollapseError("a collapsed subterm violates k(b) < v(b)")
    return _g(a)


def _g(a: OrdinalTerm) -> TreeTerm:
    if isinstance(a, Zero):
        return CIRC
    if isinstance(a, Theta):
        return Apply(TreeVal(_f(a.arg)))
    if isinstance(a, CountableSum):
        comb = Leaf(HoleVal(CIRC))
        for p in reversed(a.parts):
            comb = Node(Leaf(HoleVal(_g(p.exponent))), comb)
        return Apply(TreeVal(comb))
    raise CollapseError(f"no tree image for {a!r}")


def cnf_tree(b: OrdinalTerm) -> BinaryTree:
    """The binary tree f(b) of b's base-Omega normal form; countable b
    reads as the single monomial Omega^0 * b."""
    report = validate(b, SystemId.FULL)
    if not report:
        raise CollapseError(
            f"not a valid FULL term: {report.clause} at {report.path}"
        )
    if not is_collapsing_normal(b):
        raise CollapseError("a collapsed subterm violates k(b) < v(b)")
    return _f(b)


def _f(b: OrdinalTerm) -> BinaryTree:
    if isinstance(b, Zero):
        return Leaf(HoleVal(CIRC))
    if isinstance(b, OmegaCnf):
        monomials = b.monomials
    else:
        monomials = ((None, b),)  # Omega^0 * b, exponent tree f(0)
    spine: BinaryTree = Leaf(HoleVal(CIRC))
    for e, c in reversed(monomials):
        etree = Leaf(HoleVal(CIRC)) if e is None else _f(e)
        spine = Node(Node(etree, Leaf(HoleVal(_g(c)))), spine)
    return spine


def tree_labels(t: BinaryTree) -> list[TreeTerm]:
    """Leaf labels in left-to-right order."""
    if isinstance(t, Leaf):
        return [t.value.value]
    return tree_labels(t.left) + tree_labels(t.right)
