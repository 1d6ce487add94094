"""Tree-term order: recursion vs least-fixpoint oracle, enumeration
regressions, bounded left sets, and the (_*)* membership case split."""

import itertools

import pytest

from ordgap.parsing import format_tree_term, parse_tree_term, parse_wexpr
from ordgap.treeterms import (
    CIRC,
    Apply,
    XSTARSTAR,
    closure_oracle,
    components,
    children,
    enumerate_terms,
    left_set_bounded,
    t_leq,
    term_size,
    xstarstar_membership_cases,
)
from ordgap.wexpr import BTree, Hole, HoleVal, Leaf, ListVal, Node, TreeVal

B = BTree(Hole())


def bt(*terms):
    ts = [Leaf(HoleVal(t)) for t in terms]
    while len(ts) > 1:
        ts = [Node(ts[0], ts[1])] + ts[2:]
    return ts[0]


def test_components_round_trip():
    t = Apply(TreeVal(bt(CIRC, CIRC)))
    assert Apply(components(t)) == t
    with pytest.raises(ValueError):
        components(CIRC)


def test_minimum_below_everything():
    for t in enumerate_terms(B, 6):
        assert t_leq(CIRC, t, B)


def test_nested_leaf_label_descent():
    s = Apply(TreeVal(Node(Leaf(HoleVal(CIRC)), Leaf(HoleVal(CIRC)))))
    t = Apply(TreeVal(Node(Leaf(HoleVal(CIRC)), Leaf(HoleVal(s)))))
    assert t_leq(s, t, B)
    assert not t_leq(t, s, B)


def test_child_monotone():
    for t in enumerate_terms(B, 6):
        for c in children(t):
            assert t_leq(c, t, B)


def test_enumerate_smallest():
    assert list(enumerate_terms(B, 1)) == [CIRC]
    assert Apply(TreeVal(Leaf(HoleVal(CIRC)))) in list(enumerate_terms(B, 4))


def test_enumerate_counts_frozen():
    counts = {}
    for w_text, bound in [("B(_)", 7), ("_*", 6), ("(_*)*", 6), ("(_x_)+P{2;}", 6)]:
        w = parse_wexpr(w_text)
        terms = list(enumerate_terms(w, bound))
        assert len(terms) == len(set(terms))
        assert all(term_size(t) <= bound for t in terms)
        counts[w_text] = len(terms)
    assert counts == FROZEN_COUNTS


FROZEN_COUNTS = {"B(_)": 39, "_*": 18, "(_*)*": 23, "(_x_)+P{2;}": 4}


@pytest.mark.parametrize("w_text,bound", [("B(_)", 5), ("_*", 5), ("(_*)*", 5)])
def test_t_leq_matches_closure_oracle(w_text, bound):
    w = parse_wexpr(w_text)
    universe = list(enumerate_terms(w, bound))
    oracle = closure_oracle(universe, w)
    for s, t in itertools.product(universe, repeat=2):
        assert t_leq(s, t, w) == oracle[(s, t)], (format_tree_term(s), format_tree_term(t))


def test_t_leq_reflexive_transitive_antisymmetric():
    universe = list(enumerate_terms(B, 6))
    rel = {
        (s, t): t_leq(s, t, B) for s, t in itertools.product(universe, repeat=2)
    }
    for s in universe:
        assert rel[(s, s)]
    for s, t in itertools.product(universe, repeat=2):
        if rel[(s, t)] and rel[(t, s)]:
            assert s == t
        for u in universe:
            if rel[(s, t)] and rel[(t, u)]:
                assert rel[(s, u)]


def test_left_set_of_minimum_is_empty():
    assert left_set_bounded(CIRC, B, 5) == []


def test_left_set_of_leaf_term():
    t = Apply(TreeVal(Leaf(HoleVal(CIRC))))
    assert left_set_bounded(t, B, 1) == [CIRC]


def test_left_set_cardinalities_frozen():
    t = Apply(TreeVal(bt(CIRC, CIRC)))
    assert len(left_set_bounded(t, B, 6)) == FROZEN_LEFT_SET


FROZEN_LEFT_SET = 6


# --- membership case analysis over (_*)*


def rows_term(*rows):
    return Apply(
        ListVal(tuple(ListVal(tuple(HoleVal(x) for x in row)) for row in rows))
    )


def test_membership_vacuous_case():
    t = rows_term([CIRC])
    s = rows_term([], [])
    assert xstarstar_membership_cases(t, s)


def test_membership_nested_child():
    t = rows_term([CIRC])
    s = rows_term([t])
    assert not xstarstar_membership_cases(t, s)


def test_membership_equals_not_leq_exhaustive():
    universe = [t for t in enumerate_terms(XSTARSTAR, 6)]
    for t, s in itertools.product(universe, repeat=2):
        if isinstance(t, type(CIRC)) or isinstance(s, type(CIRC)):
            continue
        assert xstarstar_membership_cases(t, s) == (not t_leq(t, s, XSTARSTAR))


def test_parse_format_round_trip():
    for w_text, bound in [("B(_)", 6), ("_*", 5), ("(_*)*", 5), ("(_x_)+P{2;}", 6)]:
        w = parse_wexpr(w_text)
        for t in enumerate_terms(w, bound):
            assert parse_tree_term(format_tree_term(t), w) == t
