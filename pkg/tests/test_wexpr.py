"""Combinator order tests: Higman matching vs exhaustive search, binary
tree embedding vs naive recursion, compositional orders, naked terms,
and the lifting property along quasi-embeddings."""

import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from ordgap.posets import FinitePoset, antichain, chain, from_pairs, posets_up_to_iso, quasi_embeddings
from ordgap.wexpr import (
    BTree,
    Const,
    ConstVal,
    Hole,
    HoleVal,
    Leaf,
    ListVal,
    Node,
    PairVal,
    Prod,
    Star,
    Sum,
    SumVal,
    TreeVal,
    btree_embed,
    btree_embed_naive,
    element_matches,
    elements_of_weight,
    higman_leq,
    higman_leq_exhaustive,
    naked_term,
    substitute,
    w_leq,
)


def test_finite_poset_rejects_non_transitive():
    import pytest

    with pytest.raises(ValueError):
        FinitePoset(3, ((True, True, False), (False, True, True), (False, False, True)))


def test_poset_iso_classes():
    reps = posets_up_to_iso(3)
    assert len(reps) == 8  # 1 + 2 + 5 classes


# --- Higman


def test_higman_empty_embeds():
    assert higman_leq([], [1, 2, 3], lambda x, y: x == y)


def test_higman_identity_subsequence():
    leq = lambda x, y: x == y
    assert higman_leq(["a", "b"], ["a", "c", "b"], leq)


def test_higman_swapped_incomparables():
    leq = lambda x, y: x == y
    assert not higman_leq(["b", "a"], ["a", "b"], leq)
    assert not higman_leq_exhaustive(["b", "a"], ["a", "b"], leq)


def test_higman_greedy_equals_exhaustive_small():
    p = from_pairs(3, [(0, 1)])
    seqs = [
        s for n in range(4) for s in itertools.product(range(3), repeat=n)
    ]
    for xs, ys in itertools.product(seqs, repeat=2):
        assert higman_leq(xs, ys, p.le) == higman_leq_exhaustive(xs, ys, p.le)


@given(
    st.lists(st.integers(0, 2), max_size=6),
    st.lists(st.integers(0, 2), max_size=6),
    st.sampled_from(posets_up_to_iso(3)),
)
@settings(max_examples=300, deadline=None)
def test_higman_greedy_equals_exhaustive_random(xs, ys, p):
    xs = [x % p.size for x in xs]
    ys = [y % p.size for y in ys]
    assert higman_leq(xs, ys, p.le) == higman_leq_exhaustive(xs, ys, p.le)


# --- binary trees


def leaves(*labels):
    ts = [Leaf(ConstVal(i)) for i in labels]
    while len(ts) > 1:
        ts = [Node(ts[0], ts[1])] + ts[2:]
    return ts[0]


def test_btree_leaf_reflexive():
    eq = lambda a, b: a == b
    assert btree_embed(Leaf(0), Leaf(0), eq)


def test_btree_right_descent():
    eq = lambda a, b: a == b
    t = Node(Leaf("y"), Leaf("x"))
    assert btree_embed(Leaf("x"), t, eq)


def test_btree_componentwise_and_converse():
    eq = lambda a, b: a == b
    s = Node(Leaf("x"), Leaf("x"))
    t = Node(Leaf("x"), Node(Leaf("x"), Leaf("x")))
    assert btree_embed(s, t, eq)
    assert not btree_embed(t, s, eq)


def _all_shapes(n_leaves, labels):
    if n_leaves == 1:
        return [Leaf(l) for l in labels]
    out = []
    for k in range(1, n_leaves):
        for l in _all_shapes(k, labels):
            for r in _all_shapes(n_leaves - k, labels):
                out.append(Node(l, r))
    return out


def test_btree_memoized_equals_naive():
    trees = [t for n in range(1, 5) for t in _all_shapes(n, [0, 1])]
    le = lambda a, b: a <= b
    for s, t in itertools.product(trees, repeat=2):
        assert btree_embed(s, t, le) == btree_embed_naive(s, t, le)
    shapes = [t for n in range(1, 7) for t in _all_shapes(n, [0])]
    eq = lambda a, b: True
    for s, t in itertools.product(shapes, repeat=2):
        assert btree_embed(s, t, eq) == btree_embed_naive(s, t, eq)


# --- composite orders


def test_sum_compares_same_side_only():
    w = Sum(Hole(), Hole())
    eq = lambda a, b: a == b
    assert not w_leq(w, SumVal(0, HoleVal("x")), SumVal(1, HoleVal("x")), eq)
    assert w_leq(w, SumVal(1, HoleVal("x")), SumVal(1, HoleVal("x")), eq)


def test_prod_componentwise():
    w = Prod(Hole(), Hole())
    eq = lambda a, b: a == b
    a = PairVal(HoleVal("x"), HoleVal("y"))
    assert w_leq(w, a, a, eq)


def test_nested_star_over_antichain():
    w = Star(Star(Const(antichain(2))))
    a = ListVal((ListVal((ConstVal(0),)), ListVal((ConstVal(1),))))
    b = ListVal((ListVal((ConstVal(1),)), ListVal((ConstVal(0),))))
    le = lambda x, y: x == y
    assert not w_leq(w, a, b, le)
    assert w_leq(w, a, a, le)


def test_w_leq_partial_order_on_generated_universe():
    w = Prod(Star(Const(chain(2))), Const(antichain(2)))
    values = []
    for k in range(1, 6):
        values.extend(elements_of_weight(w, k, lambda _: []))
    assert values
    eq = lambda a, b: a == b
    rel = {}
    for a, b in itertools.product(values, repeat=2):
        rel[(a, b)] = w_leq(w, a, b, eq)
    for a in values:
        assert rel[(a, a)]
    for a, b in itertools.product(values, repeat=2):
        if rel[(a, b)] and rel[(b, a)]:
            assert a == b
        for c in values:
            if rel[(a, b)] and rel[(b, c)]:
                assert rel[(a, c)]


# --- naked terms


def test_naked_term_single_hole():
    shape, contents = naked_term(HoleVal("x"))
    assert contents == ["x"]
    assert substitute(shape, contents) == HoleVal("x")


def test_naked_term_pair_with_const():
    a = PairVal(HoleVal("x"), ConstVal(1))
    shape, contents = naked_term(a)
    assert contents == ["x"]
    assert substitute(shape, contents) == a


def test_naked_term_star_left_to_right():
    a = ListVal((HoleVal("x"), HoleVal("y")))
    shape, contents = naked_term(a)
    assert contents == ["x", "y"]
    assert substitute(shape, contents) == a


def test_naked_term_btree_order():
    a = TreeVal(Node(Leaf(HoleVal("l")), Leaf(HoleVal("r"))))
    _, contents = naked_term(a)
    assert contents == ["l", "r"]


# --- lifting along quasi-embeddings


def test_lifting_lemma_sampled():
    w = Prod(Star(Hole()), Hole())
    y = from_pairs(3, [(0, 1)])
    z = antichain(3)
    embeddings = quasi_embeddings(y, z)
    assert len(embeddings) == 6  # exactly the injections into an antichain

    def values_over(p):
        return [i for i in range(p.size)]

    elems_y = []
    for k in range(1, 5):
        elems_y.extend(
            elements_of_weight(w, k, lambda kk: values_over(y) if kk == 1 else [])
        )

    for q in embeddings[:6]:

        def push(e):
            shape, contents = naked_term(e)
            return substitute(shape, [q[v] for v in contents])

        for a, b in itertools.product(elems_y, repeat=2):
            if w_leq(w, push(a), push(b), z.le):
                assert w_leq(w, a, b, y.le)
