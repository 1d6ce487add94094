"""Gap embedding vs brute force, the restricted two-label class, and the
isomorphism with tree terms over binary trees (figure fixtures included).
"""

import itertools

import pytest

from ordgap.gaptrees import (
    LabeledTree,
    brute_gap_leq,
    from_gap,
    gap_leq,
    in_t2bar,
    labeled_trees_of_size,
    to_gap,
    tree_nodes,
)
from ordgap.parsing import format_labeled_tree, parse_labeled_tree, parse_tree_term
from ordgap.treeterms import CIRC, enumerate_terms, t_leq
from ordgap.wexpr import BTree, Hole

B = BTree(Hole())

# g of o[B(o, o[B(o, o)])]: a 0-root over a 1-spine with nested images.
FIGURE_TERM = parse_tree_term("o[(o, o[(o, o)])]", B)
FIGURE_TREE = parse_labeled_tree("(0 (1 (0) (0 (1 (0) (0)))))")


def test_figure_tree_has_seven_nodes():
    assert tree_nodes(FIGURE_TREE) == 7


def test_to_gap_base_cases():
    assert to_gap(CIRC) == LabeledTree(0)
    assert to_gap(parse_tree_term("o[o]", B)) == LabeledTree(0, (LabeledTree(0),))


def test_to_gap_figure():
    assert to_gap(FIGURE_TERM) == FIGURE_TREE


def test_from_gap_figure():
    assert from_gap(FIGURE_TREE) == FIGURE_TERM


def test_in_t2bar():
    assert in_t2bar(LabeledTree(0))
    assert not in_t2bar(LabeledTree(1))
    assert in_t2bar(FIGURE_TREE)
    assert not in_t2bar(LabeledTree(0, (LabeledTree(0), LabeledTree(0))))


def test_from_gap_rejects_outside_class():
    with pytest.raises(ValueError):
        from_gap(LabeledTree(1))


def test_round_trip_small():
    for t in enumerate_terms(B, 8):
        g = to_gap(t)
        assert in_t2bar(g)
        assert from_gap(g) == t


def test_gap_leq_reflexive():
    for t in labeled_trees_of_size(3) + labeled_trees_of_size(4)[:40]:
        assert gap_leq(t, t, structured=True)
        assert gap_leq(t, t, structured=False)


def test_gap_single_zero_node_embeds_anywhere_with_zero():
    needle = LabeledTree(0)
    hay = parse_labeled_tree("(1 (1 (0) (1)) (1))")
    assert gap_leq(needle, hay)
    assert not gap_leq(LabeledTree(1), LabeledTree(0, (LabeledTree(0),)))


def test_gap_label_preservation():
    all_zero = parse_labeled_tree("(0 (0 (0)))")
    assert not gap_leq(LabeledTree(1), all_zero)
    assert not brute_gap_leq(LabeledTree(1), all_zero)


def test_gap_condition_blocks_low_label_between():
    # 1-child under a 1-root: embedding (1 (1)) into (1 (0 (1))) must
    # route through a 0 < 1, violating the gap condition.
    small = parse_labeled_tree("(1 (1))")
    blocked = parse_labeled_tree("(1 (0 (1)))")
    open_path = parse_labeled_tree("(1 (1 (1)))")
    assert not gap_leq(small, blocked)
    assert not brute_gap_leq(small, blocked)
    assert gap_leq(small, open_path)
    assert brute_gap_leq(small, open_path)


def _pairs_up_to(total: int):
    trees = {n: labeled_trees_of_size(n) for n in range(1, total)}
    for n1 in range(1, total):
        for n2 in range(1, total + 1 - n1):
            for t1 in trees[n1]:
                for t2 in trees[n2]:
                    yield t1, t2


def test_gap_matches_brute_force_structured():
    for t1, t2 in _pairs_up_to(6):
        assert gap_leq(t1, t2, True) == brute_gap_leq(t1, t2, True), (
            format_labeled_tree(t1),
            format_labeled_tree(t2),
        )


def test_gap_matches_brute_force_unstructured():
    for t1, t2 in _pairs_up_to(5):
        assert gap_leq(t1, t2, False) == brute_gap_leq(t1, t2, False)


def test_gap_transitive_on_small_structured_trees():
    universe = [t for n in range(1, 5) for t in labeled_trees_of_size(n)]
    rel = {}
    for a, b in itertools.product(universe, repeat=2):
        rel[(a, b)] = gap_leq(a, b, True)
    for a, b in itertools.product(universe, repeat=2):
        if rel[(a, b)]:
            for c in universe:
                if rel[(b, c)]:
                    assert rel[(a, c)]
        if rel[(a, b)] and rel[(b, a)]:
            assert a == b


def test_order_isomorphism_small():
    universe = list(enumerate_terms(B, 6))
    for s, t in itertools.product(universe, repeat=2):
        assert t_leq(s, t, B) == gap_leq(to_gap(s), to_gap(t), structured=True)
