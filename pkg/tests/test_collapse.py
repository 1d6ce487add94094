"""Ordinal-to-tree map: figure fixtures, leaf-label containment, the
one-way order reflection, and composition with the two-label class."""

import itertools

import pytest

from ordgap.collapse import (
    CollapseError,
    cnf_tree,
    is_collapsing_normal,
    ord_to_tree,
    tree_labels,
)
from ordgap.gaptrees import in_t2bar, to_gap
from ordgap.ordinals import (
    CountableSum,
    OmegaCnf,
    OmegaPow,
    ONE,
    Ordering3,
    SystemId,
    Theta,
    ZERO,
    coefficient_set,
    compare,
    enumerate_terms,
    is_countable,
    natural,
)
from ordgap.parsing import format_tree_term, parse_term
from ordgap.treeterms import CIRC, Apply, t_leq
from ordgap.wexpr import BTree, Hole, HoleVal, Leaf, Node, TreeVal

B = BTree(Hole())
FULL = SystemId.FULL

OMEGA_CARD = OmegaCnf(((ONE, ONE),))


def leaf_circ():
    return Leaf(HoleVal(CIRC))


def test_zero_maps_to_minimum():
    assert ord_to_tree(ZERO) == CIRC


def test_collapse_of_zero_figure():
    # v(0) -> o[leaf o]
    assert ord_to_tree(ONE) == Apply(TreeVal(leaf_circ()))
    assert cnf_tree(ZERO) == leaf_circ()


def test_omega_plus_one_comb_figure():
    t = parse_term("w^v(0) + w^0")  # omega + 1
    expected = Apply(
        TreeVal(
            Node(
                Leaf(HoleVal(Apply(TreeVal(leaf_circ())))),
                Node(leaf_circ(), leaf_circ()),
            )
        )
    )
    assert ord_to_tree(t) == expected


def test_cnf_tree_countable_figure():
    # 0 < b < Omega: a single (exponent-0, image-of-b) pair over the spine
    b = Theta(ONE)
    got = cnf_tree(b)
    assert got == Node(Node(leaf_circ(), Leaf(HoleVal(ord_to_tree(b)))), leaf_circ())


def test_cnf_tree_of_omega_card_figure():
    f1 = Node(Node(leaf_circ(), Leaf(HoleVal(ord_to_tree(ONE)))), leaf_circ())
    assert cnf_tree(ONE) == f1
    got = cnf_tree(OMEGA_CARD)
    assert got == Node(Node(f1, Leaf(HoleVal(ord_to_tree(ONE)))), leaf_circ())


def test_rejects_uncountable():
    with pytest.raises(CollapseError):
        ord_to_tree(OMEGA_CARD)


def test_rejects_invalid():
    with pytest.raises(CollapseError):
        ord_to_tree(CountableSum((OmegaPow(ZERO),)))


def test_normality_holds_on_valid_terms():
    for t in enumerate_terms(FULL, 3, max_size=12):
        assert is_collapsing_normal(t)


def test_leaf_labels_are_coefficient_images():
    for b in enumerate_terms(FULL, 3, max_size=12):
        labels = set(tree_labels(cnf_tree(b)))
        expected = {ord_to_tree(x) for x in coefficient_set(b) | {ZERO}}
        assert labels == expected


def test_image_lands_in_two_label_class():
    for a in enumerate_terms(FULL, 3, countable_only=True, max_size=12):
        assert in_t2bar(to_gap(ord_to_tree(a)))


def test_order_reflection_exhaustive_small():
    universe = list(enumerate_terms(FULL, 3, countable_only=True, max_size=10))
    images = {a: ord_to_tree(a) for a in universe}
    for a, b in itertools.product(universe, repeat=2):
        if t_leq(images[a], images[b], B):
            assert compare(a, b) is not Ordering3.GT, (a, b)


def test_known_comparable_pairs_map_comparably_sane():
    # sanity spot checks that the image order is not vacuously empty
    a, b = natural(2, FULL), natural(3, FULL)
    assert t_leq(ord_to_tree(a), ord_to_tree(b), B)
    assert t_leq(ord_to_tree(ZERO), ord_to_tree(a), B)
