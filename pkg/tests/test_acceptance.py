"""Acceptance gate: every criterion at its stated bound, one line each.

Exhaustive universes are the width-capped enumerations (rank bounds
alone admit unboundedly long unit sums, so finite slices carry explicit
width and size caps; see ordinals.enumerate_terms).  Randomized checks
are seeded and bit-reproducible.
"""

import itertools

from ordgap.collapse import cnf_tree, ord_to_tree
from ordgap.gaptrees import LabeledTree, in_t2bar, to_gap
from ordgap.ordinals import ONE, OmegaCnf, SystemId, ZERO
from ordgap.parsing import (
    format_labeled_tree,
    parse_labeled_tree,
    parse_term,
    parse_tree_term,
)
from ordgap.suites import SUITES
from ordgap.treeterms import CIRC
from ordgap.wexpr import BTree, Hole, HoleVal, Leaf, Node

FULL = SystemId.FULL
RESTRICTED = SystemId.RESTRICTED


def _run(label, name, **kwargs):
    rep = SUITES[name](**kwargs)
    status = "PASS" if rep.ok else "FAIL"
    print(f"[{status}] {label}: checked={rep.checked} failures={len(rep.failures)}")
    for f in rep.failures[:5]:
        print(f"    inputs={f['inputs']} expected={f['expected']} got={f['got']}")
    assert rep.ok, f"{label}: {len(rep.failures)} failures"


def test_criterion_01_order_axioms():
    _run("1a order-axioms FULL G<=3", "order-axioms", system=FULL, g=3)
    _run("1b order-axioms RESTRICTED G<=3", "order-axioms", system=RESTRICTED, g=3)


def test_criterion_02_theta_criterion():
    _run("2a theta-criterion FULL G<=3", "theta-criterion", system=FULL, g=3)
    _run("2b theta-criterion RESTRICTED G<=3", "theta-criterion", system=RESTRICTED, g=3)


def test_criterion_03_coeff_lemmas():
    _run("3 coeff-lemmas 10^4 pairs G<=5", "coeff-lemmas", seed=0, samples=10000, g=5)


def test_criterion_04_g_monotone_and_encode():
    _run("4a g-monotone FULL G<=4", "g-monotone", system=FULL, g=4)
    _run("4b g-monotone RESTRICTED G<=4", "g-monotone", system=RESTRICTED, g=4)
    _run("4c encode-monotone FULL G<=4", "encode-monotone", system=FULL, g=4)
    _run("4d encode-monotone RESTRICTED G<=4", "encode-monotone", system=RESTRICTED, g=4)


def test_criterion_05_tleq_fixpoint():
    _run("5 tleq-fixpoint size<=5 (B: 6)", "tleq-fixpoint", size=5)


def test_criterion_06_iso():
    _run("6 iso size<=8 with round trip", "iso", size=8)


def test_criterion_07_gap_oracle():
    _run("7 gap-oracle pairs of <=7 nodes", "gap-oracle", size=7)


def test_criterion_08_higman_oracle():
    _run("8 higman-oracle len<=5 posets<=3", "higman-oracle", size=5)


def test_criterion_09_quasi_embedding():
    _run(
        "9 quasi-embedding exhaustive G<=3 + 10^4 at G<=6",
        "quasi-embedding",
        seed=0,
        samples=10000,
        g=3,
        g_random=6,
    )


def test_criterion_10_xstarstar_cases():
    _run("10 xstarstar-cases size<=6", "xstarstar-cases", size=6)


def test_criterion_11_fixtures():
    b = BTree(Hole())
    leaf_circ = Leaf(HoleVal(CIRC))
    failures = []

    def check(label, got, want):
        if got != want:
            failures.append((label, got, want))

    check("g(0)", ord_to_tree(ZERO), CIRC)
    check("g(v(0))", ord_to_tree(ONE), parse_tree_term("o[o]", b))
    check("f(0)", cnf_tree(ZERO), leaf_circ)
    omega = parse_term("v(v(0))")
    check(
        "f(b) for countable b",
        cnf_tree(omega),
        Node(Node(leaf_circ, Leaf(HoleVal(ord_to_tree(omega)))), leaf_circ),
    )
    cap_omega = OmegaCnf(((ONE, ONE),))
    f1 = Node(Node(leaf_circ, Leaf(HoleVal(ord_to_tree(ONE)))), leaf_circ)
    check("f(Omega)", cnf_tree(cap_omega), Node(Node(f1, Leaf(HoleVal(ord_to_tree(ONE)))), leaf_circ))
    check(
        "g(omega + 1) comb",
        ord_to_tree(parse_term("w^v(0) + w^0")),
        parse_tree_term("o[(o[o], (o, o))]", b),
    )
    figure_term = parse_tree_term("o[(o, o[(o, o)])]", b)
    figure_tree = parse_labeled_tree("(0 (1 (0) (0 (1 (0) (0)))))")
    check("g-figure image", to_gap(figure_term), figure_tree)
    check("figure in restricted class", in_t2bar(figure_tree), True)
    check(
        "single 1-node outside the class",
        in_t2bar(LabeledTree(1)),
        False,
    )

    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] 11 figure fixtures: {9 - len(failures)}/9 exact")
    assert not failures, failures
