"""Recursive tree terms over a constructor expression, and their order.

A term is the minimum ``o`` or a node ``o[w(t1,...,tn)]`` whose body is
an element of the governing constructor expression with tree terms in
its holes.  The order is the least reflexive-transitive relation with
``o`` below everything, descent into any hole, and body comparison at
the root; t_leq decides it by structural recursion and closure_oracle
recomputes it as an honest least fixpoint for differential testing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Union

from .wexpr import (
    Hole,
    HoleVal,
    ListVal,
    ShapeError,
    Star,
    WElement,
    WExpr,
    element_matches,
    element_weight,
    elements_of_weight,
    higman_leq,
    naked_term,
    w_leq,
)


@dataclass(frozen=True)
class Circ:
    def __repr__(self) -> str:
        return "Circ"


@dataclass(frozen=True)
class Apply:
    body: WElement

    def __repr__(self) -> str:
        return f"Apply({self.body!r})"


TreeTerm = Union[Circ, Apply]

CIRC = Circ()


def components(t: TreeTerm) -> WElement:
    """The body of a non-minimal term."""
    if isinstance(t, Circ):
        raise ValueError("the minimum term has no components")
    return t.body


def children(t: TreeTerm) -> list:
    if isinstance(t, Circ):
        return []
    return naked_term(t.body)[1]


def term_size(t: TreeTerm) -> int:
    """Number of o-nodes plus structural body constructors (hole slots
    and leaf wrappers are free); fixes the meaning of every size bound."""
    if isinstance(t, Circ):
        return 1
    return 1 + element_weight(t.body, term_size)


def check_term(w: WExpr, t: TreeTerm) -> bool:
    if isinstance(t, Circ):
        return True
    if not element_matches(w, t.body):
        return False
    return all(check_term(w, c) for c in children(t))


def t_leq(s: TreeTerm, t: TreeTerm, w: WExpr) -> bool:
    """Decide the tree-term order by structural recursion; the memo
    cache lives for this query only."""
    memo: dict = {}

    def go(a, b) -> bool:
        if isinstance(a, Circ):
            return True
        if isinstance(b, Circ):
            return False
        key = (a, b)
        hit = memo.get(key)
        if hit is not None:
            return hit
        memo[key] = False  # cycle guard; pairs shrink, so never consulted
        out = any(go(a, c) for c in children(b))
        if not out:
            out = w_leq(w, a.body, b.body, go)
        memo[key] = out
        return out

    if not check_term(w, s) or not check_term(w, t):
        raise ShapeError("terms do not fit the constructor expression")
    return go(s, t)


def enumerate_terms(w: WExpr, size_bound: int) -> Iterator[TreeTerm]:
    """All terms with term_size <= size_bound, smallest first, then by
    text order within a size; finite and duplicate-free."""
    from .parsing import format_tree_term

    by_size: dict[int, list[TreeTerm]] = {}

    def values_by_weight(k: int):
        return by_size.get(k, [])

    for s in range(1, size_bound + 1):
        batch = []
        if s == 1:
            batch.append(CIRC)
        for body in elements_of_weight(w, s - 1, values_by_weight):
            batch.append(Apply(body))
        batch.sort(key=format_tree_term)
        by_size[s] = batch

    for s in range(1, size_bound + 1):
        yield from by_size[s]


def closure_oracle(universe, w: WExpr) -> dict:
    """Least reflexive-transitive relation closed under the three order
    clauses, computed by iteration to a fixpoint on a downward-closed
    finite universe.  Returns {(s, t): True/False} on universe pairs."""
    terms = list(universe)
    index = {t: i for i, t in enumerate(terms)}
    n = len(terms)
    rows = [0] * n  # rows[i] bit j set iff terms[i] <= terms[j]
    full = (1 << n) - 1

    for i, t in enumerate(terms):
        rows[i] |= 1 << i
        if isinstance(t, Circ):
            rows[i] = full

    kids = {i: [index[c] for c in children(t)] for i, t in enumerate(terms)}

    def rel(a, b) -> bool:
        return bool(rows[index[a]] >> index[b] & 1)

    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if rows[i] >> j & 1:
                    continue
                tj = terms[j]
                hit = any(rows[i] >> c & 1 for c in kids[j])
                if not hit and not isinstance(terms[i], Circ) and not isinstance(tj, Circ):
                    hit = w_leq(w, terms[i].body, tj.body, rel)
                if hit:
                    rows[i] |= 1 << j
                    changed = True
        # transitive closure
        for k in range(n):
            mask = 1 << k
            for i in range(n):
                if rows[i] & mask and rows[i] | rows[k] != rows[i]:
                    rows[i] |= rows[k]
                    changed = True

    return {
        (terms[i], terms[j]): bool(rows[i] >> j & 1)
        for i in range(n)
        for j in range(n)
    }


def left_set_bounded(t: TreeTerm, w: WExpr, size_bound: int) -> list:
    """All terms s of size <= size_bound with t not below s."""
    return [s for s in enumerate_terms(w, size_bound) if not t_leq(t, s, w)]


# ---------------------------------------------------------------------------
# Membership case analysis for W = (_*)*

XSTARSTAR: WExpr = Star(Star(Hole()))


def _rows(t: Apply) -> list[list]:
    return [[x.value for x in row.items] for row in t.body.items]


def xstarstar_membership_cases(t: TreeTerm, s: TreeTerm) -> bool:
    """The explicit characterization of "s lies in the left set of t"
    for terms over (_*)*: a literal disjunction over splitting indices
    of the outer sequences, with the analogous inner case split one
    level down and the recursive requirement on nested children.
    Coincides with (not t_leq(t, s)).
    """
    if not check_term(XSTARSTAR, t) or not check_term(XSTARSTAR, s):
        raise ShapeError("terms do not fit (_*)*")
    return _not_leq(t, s)


def _not_leq(t, s) -> bool:
    if isinstance(t, Circ):
        return False
    if isinstance(s, Circ):
        return True
    trows, srows = _rows(t), _rows(s)
    for srow in srows:
        for x in srow:
            if not _not_leq(t, x):
                return False
    return _outer_fails(trows, srows)


def _outer_fails(trows, srows) -> bool:
    """Cases 1..k: t's first c-1 rows embed at positions l_1<...<l_{c-1}
    in order, and row c embeds nowhere after l_{c-1}."""
    k = len(trows)
    if k == 0:
        return False
    for c in range(1, k + 1):
        for ls in itertools.combinations(range(len(srows)), c - 1):
            ok = True
            prev = -1
            for q in range(c - 1):
                l_q = ls[q]
                if any(
                    not _row_fails(trows[q], srows[i]) for i in range(prev + 1, l_q)
                ):
                    ok = False
                    break
                if _row_fails(trows[q], srows[l_q]):
                    ok = False
                    break
                prev = l_q
            if ok and all(
                _row_fails(trows[c - 1], srows[i])
                for i in range(prev + 1, len(srows))
            ):
                return True
    return False


def _row_fails(trow, srow) -> bool:
    """Inner cases 1..n_i: the same splitting pattern one level down,
    grounded in the recursive left-set requirement."""
    n = len(trow)
    if n == 0:
        return False
    for c in range(1, n + 1):
        for rs in itertools.combinations(range(len(srow)), c - 1):
            ok = True
            prev = -1
            for q in range(c - 1):
                r_q = rs[q]
                if any(not _not_leq(trow[q], srow[i]) for i in range(prev + 1, r_q)):
                    ok = False
                    break
                if _not_leq(trow[q], srow[r_q]):
                    ok = False
                    break
                prev = r_q
            if ok and all(
                _not_leq(trow[c - 1], srow[i]) for i in range(prev + 1, len(srow))
            ):
                return True
    return False
