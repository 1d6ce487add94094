"""Ordinal notations below the Howard-Bachmann ordinal, constructor
orders on well-partial-orders, recursive tree terms, gap embeddings of
labeled trees, and the ordinal-to-tree collapse, with brute-force
verification suites for every finitely checkable law."""

from .ordinals import (
    CountableSum,
    FuelError,
    OmegaCnf,
    OmegaPow,
    ONE,
    OrdinalTerm,
    Ordering3,
    RangeError,
    SystemId,
    Theta,
    ThetaPart,
    ValidityReport,
    ZERO,
    Zero,
    coefficient_set,
    compare,
    compare_principals,
    complexity,
    decode,
    encode,
    enumerate_terms,
    exponent_of_principal,
    is_additively_closed,
    is_countable,
    make_cnf,
    make_sum,
    max_coefficient,
    natural,
    natural_product,
    natural_sum,
    omega_tower,
    theta_of_omega_exponent,
    validate,
)
from .posets import FinitePoset, antichain, chain, from_pairs, posets_up_to_iso
from .wexpr import (
    BTree,
    BinaryTree,
    Const,
    ConstVal,
    Hole,
    HoleVal,
    Leaf,
    ListVal,
    Node,
    PairVal,
    Prod,
    ShapeError,
    Star,
    Sum,
    SumVal,
    TreeVal,
    WElement,
    WExpr,
    btree_embed,
    higman_leq,
    naked_term,
    substitute,
    w_leq,
)
from .treeterms import (
    Apply,
    CIRC,
    Circ,
    TreeTerm,
    closure_oracle,
    components,
    left_set_bounded,
    t_leq,
    term_size,
    xstarstar_membership_cases,
)
from .treeterms import enumerate_terms as enumerate_tree_terms
from .gaptrees import (
    LabeledTree,
    brute_gap_leq,
    from_gap,
    gap_leq,
    in_t2bar,
    labeled_trees_of_size,
    to_gap,
)
from .collapse import CollapseError, cnf_tree, is_collapsing_normal, ord_to_tree
from .parsing import (
    ParseError,
    format_labeled_tree,
    format_term,
    format_tree_term,
    format_wexpr,
    parse_labeled_tree,
    parse_term,
    parse_tree_term,
    parse_wexpr,
)
from .suites import SUITES, SuiteReport
