"""Named verification suites.

Every suite checks a finitely testable law against an independent
reading of it (a brute-force oracle, a least fixpoint, a second
implementation, or a literal restatement) over either an exhaustively
enumerated bounded universe or a seeded pseudo-random sample.  Reports
are deterministic: identical seeds and parameters give identical
reports, failures are shrunk by greedy child replacement and sorted
before emission.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import ordinals as ords
from .collapse import cnf_tree, ord_to_tree, tree_labels
from .gaptrees import (
    LabeledTree,
    brute_gap_leq,
    from_gap,
    gap_leq,
    in_t2bar,
    labeled_trees_of_size,
    to_gap,
)
from .ordinals import (
    CountableSum,
    OmegaCnf,
    OmegaPow,
    ONE,
    Ordering3,
    SystemId,
    Theta,
    ThetaPart,
    ZERO,
    compare,
    complexity,
    coefficient_set,
    encode,
    is_countable,
    is_natural_term,
    make_cnf,
    make_sum,
    max_coefficient,
    natural,
    natural_product,
    natural_sum,
    theta_of_omega_exponent,
)
from .posets import posets_up_to_iso
from .treeterms import (
    XSTARSTAR,
    CIRC,
    Apply,
    Circ,
    closure_oracle,
    enumerate_terms as enumerate_tree_terms,
    t_leq,
    xstarstar_membership_cases,
)
from .wexpr import BTree, Hole, higman_leq, higman_leq_exhaustive

B_OF_HOLE = BTree(Hole())


@dataclass
class SuiteReport:
    suite: str
    params: dict
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, inputs, expected, got):
        self.failures.append(
            {"inputs": list(inputs), "expected": str(expected), "got": str(got)}
        )

    def finish(self) -> "SuiteReport":
        self.failures.sort(key=lambda f: (f["inputs"], f["expected"], f["got"]))
        return self

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "checked": self.checked,
            "failures": self.failures,
        }


# ---------------------------------------------------------------------------
# Universes and pretty-printing helpers


_FULL_CAPS = dict(max_sum_parts=3, max_monomials=2, max_nat_exponent=2)
_RESTRICTED_CAPS = dict(max_sum_parts=3, max_monomials=3, max_nat_exponent=3)
_SIZE_CAPS = {
    (SystemId.FULL, 3): 16,
    (SystemId.FULL, 4): 16,
    (SystemId.RESTRICTED, 3): 24,
    (SystemId.RESTRICTED, 4): 24,
}


def ordinal_universe(sys: SystemId, g: int, countable_only: bool = False) -> list:
    caps = _FULL_CAPS if sys is SystemId.FULL else _RESTRICTED_CAPS
    size_cap = _SIZE_CAPS.get((sys, g), 12 + 2 * max(0, 3 - g))
    return list(
        ords.enumerate_terms(sys, g, countable_only, max_size=size_cap, **caps)
    )


def _fmt(x) -> str:
    from .parsing import format_labeled_tree, format_term, format_tree_term

    if isinstance(x, (Circ, Apply)):
        return format_tree_term(x)
    if isinstance(x, LabeledTree):
        return format_labeled_tree(x)
    try:
        return format_term(x)
    except TypeError:
        return repr(x)


def _term_children(t):
    if isinstance(t, ords.Zero):
        return []
    if isinstance(t, Theta):
        return [t.arg]
    if isinstance(t, CountableSum):
        out = [p.exponent if isinstance(p, OmegaPow) else p.arg for p in t.parts]
        if len(t.parts) > 2:
            out.append(CountableSum(t.parts[1:]))
        return out
    if isinstance(t, OmegaCnf):
        out = []
        for e, c in t.monomials:
            out += [e, c]
        if len(t.monomials) > 1:
            out.append(OmegaCnf(t.monomials[1:]))
        return out
    if isinstance(t, (Circ, Apply)):
        from .treeterms import children

        return children(t)
    if isinstance(t, LabeledTree):
        return list(t.children)
    return []


def shrink(inputs: tuple, still_fails) -> tuple:
    """Greedy child replacement, larger candidates first, until no
    single replacement keeps the failure alive."""

    def weight(x):
        try:
            return ords.size(x)
        except TypeError:
            return 1

    current = list(inputs)
    improved = True
    while improved:
        improved = False
        for i, x in enumerate(current):
            for cand in sorted(_term_children(x), key=weight, reverse=True):
                trial = list(current)
                trial[i] = cand
                try:
                    bad = still_fails(tuple(trial))
                except Exception:
                    bad = False
                if bad:
                    current = trial
                    improved = True
                    break
            if improved:
                break
    return tuple(current)


# ---------------------------------------------------------------------------
# Random ordinal terms


def random_term(rng: random.Random, sys: SystemId, g: int, countable_only=False):
    if g <= 0:
        return ZERO
    roll = rng.random()
    if roll < 0.12:
        return natural(rng.randint(0, 3), sys)
    if roll < 0.55 or (countable_only and roll < 0.8):
        arg_countable = rng.random() < 0.5
        return Theta(random_term(rng, sys, g - 1, arg_countable))
    if roll < 0.8:
        k = rng.randint(2, 3)
        if sys is SystemId.FULL:
            parts = [
                OmegaPow(random_term(rng, sys, g - 1, countable_only=True))
                for _ in range(k)
            ]
        else:
            parts = [ThetaPart(random_term(rng, sys, g - 2)) for _ in range(k)]
        return make_sum(parts)
    if countable_only:
        return Theta(random_term(rng, sys, g - 1, rng.random() < 0.5))
    m = rng.randint(1, 2)
    monos = []
    for _ in range(m):
        if sys is SystemId.FULL:
            e = random_term(rng, sys, g - 1)
        else:
            e = natural(rng.randint(0, 3), sys)
        c = random_term(rng, sys, g - 1, countable_only=True)
        if c == ZERO:
            c = natural(rng.randint(1, 3), sys)
        monos.append((e, c))
    out = make_cnf(monos, sys)
    return out if not isinstance(out, ords.Zero) else natural(1, sys)


# ---------------------------------------------------------------------------
# Ordinal-side suites


def suite_order_axioms(system=SystemId.FULL, g=3, **_ignored) -> SuiteReport:
    rep = SuiteReport(
        "order-axioms", {"system": system.value, "g": g}
    )
    universe = ordinal_universe(system, g)
    n = len(universe)
    mat = [[compare(a, b) for b in universe] for a in universe]
    lt_rows = [0] * n
    for i, j in itertools.product(range(n), repeat=2):
        if mat[i][j] is Ordering3.LT:
            lt_rows[i] |= 1 << j
    rep.checked = n * n + n * n * n  # pairs plus triples (triples via rows)
    for i, j in itertools.product(range(n), repeat=2):
        c = mat[i][j]
        if mat[j][i] is not c.flipped():
            rep.fail(
                [_fmt(universe[i]), _fmt(universe[j])],
                "compare(b,a) is the flip of compare(a,b)",
                f"{c.name} vs {mat[j][i].name}",
            )
        if (c is Ordering3.EQ) != (universe[i] == universe[j]):
            rep.fail(
                [_fmt(universe[i]), _fmt(universe[j])],
                "EQ exactly on identical canonical terms",
                c.name,
            )
    for i in range(n):
        row = lt_rows[i]
        j = 0
        rem = row
        while rem:
            if rem & 1:
                stray = lt_rows[j] & ~row
                if stray:
                    k = stray.bit_length() - 1
                    rep.fail(
                        [_fmt(universe[i]), _fmt(universe[j]), _fmt(universe[k])],
                        "a<b and b<c imply a<c",
                        "transitivity breach",
                    )
            rem >>= 1
            j += 1
    return rep.finish()


def suite_theta_criterion(system=SystemId.FULL, g=3, **_ignored) -> SuiteReport:
    rep = SuiteReport("theta-criterion", {"system": system.value, "g": g})
    thetas = [t for t in ordinal_universe(system, g) if isinstance(t, Theta)]
    for ta, tb in itertools.product(thetas, repeat=2):
        a, b = ta.arg, tb.arg
        rep.checked += 1
        lhs = compare(ta, tb) is Ordering3.LT
        rhs = _theta_criterion_rhs(a, b)
        if lhs != rhs:
            bad = shrink(
                (ta, tb),
                lambda pair: isinstance(pair[0], Theta)
                and isinstance(pair[1], Theta)
                and (compare(pair[0], pair[1]) is Ordering3.LT)
                != _theta_criterion_rhs(pair[0].arg, pair[1].arg),
            )
            rep.fail([_fmt(bad[0]), _fmt(bad[1])], f"criterion {rhs}", f"compare {lhs}")
    return rep.finish()


def _theta_criterion_rhs(a, b) -> bool:
    return (
        compare(a, b) is Ordering3.LT
        and compare(max_coefficient(a), Theta(b)) is Ordering3.LT
    ) or (
        compare(b, a) is Ordering3.LT
        and compare(Theta(a), max_coefficient(b)) is not Ordering3.GT
    )


def _pred_exponent(e):
    n = ords.nat_value(e)
    if n is not None:
        if n == 0:
            raise ValueError("exponent 0 has no predecessor here")
        return natural(n - 1, SystemId.FULL)
    return e  # infinite exponents absorb the 1


def omega_power(a):
    """omega^a as a term (independent helper for the coefficient bound;
    not part of the library arithmetic surface)."""
    if isinstance(a, ords.Zero):
        return ONE
    if is_countable(a):
        return theta_of_omega_exponent(a)
    high, low = [], ZERO
    for e, c in a.monomials:
        if isinstance(e, ords.Zero):
            low = c
        else:
            high.append((_pred_exponent(e), c))
    beta = make_cnf(high, SystemId.FULL)
    return make_cnf([(beta, theta_of_omega_exponent(low))], SystemId.FULL)


def suite_coeff_lemmas(seed=0, samples=10000, g=5, **_ignored) -> SuiteReport:
    rep = SuiteReport("coeff-lemmas", {"seed": seed, "samples": samples, "g": g})
    rng = random.Random(seed)
    omega = Theta(ONE)

    def le(x, y):
        return compare(x, y) is not Ordering3.GT

    while rep.checked < samples:
        a = random_term(rng, SystemId.FULL, g)
        b = random_term(rng, SystemId.FULL, g)
        rep.checked += 1
        ka, kb = max_coefficient(a), max_coefficient(b)
        s = natural_sum(a, b)
        ks = max_coefficient(s)
        if not le(ks, natural_sum(ka, kb)):
            rep.fail([_fmt(a), _fmt(b)], "k(a+b) <= k(a)+k(b)", _fmt(ks))
        if not le(ka, ks) or not le(kb, ks):
            rep.fail([_fmt(a), _fmt(b)], "k(a), k(b) <= k(a+b)", _fmt(ks))
        p = natural_product(a, b)
        kp = max_coefficient(p)
        bound1 = natural_sum(ka, kb)
        bound2 = natural_product(natural_product(ka, kb), omega)
        bound = bound1 if compare(bound1, bound2) is Ordering3.GT else bound2
        if not le(kp, bound):
            rep.fail([_fmt(a), _fmt(b)], "k(a*b) <= max(k+k, k*k*omega)", _fmt(kp))
        if b != ZERO and not le(ka, kp):
            rep.fail([_fmt(a), _fmt(b)], "k(a) <= k(a*b) for b > 0", _fmt(kp))
        w = omega_power(a)
        if not le(max_coefficient(w), omega_power(ka)):
            rep.fail([_fmt(a)], "k(omega^a) <= omega^k(a)", _fmt(max_coefficient(w)))
    return rep.finish()


def suite_g_monotone(system=SystemId.FULL, g=4, **_ignored) -> SuiteReport:
    rep = SuiteReport("g-monotone", {"system": system.value, "g": g})
    for t in ordinal_universe(system, g):
        rep.checked += 1
        if complexity(max_coefficient(t), system) > complexity(t, system):
            rep.fail([_fmt(t)], "rank(k(t)) <= rank(t)", _fmt(max_coefficient(t)))
    return rep.finish()


def suite_encode_monotone(system=SystemId.FULL, g=4, **_ignored) -> SuiteReport:
    rep = SuiteReport("encode-monotone", {"system": system.value, "g": g})
    for t in ordinal_universe(system, g):
        code = encode(t)
        for xi in coefficient_set(t):
            rep.checked += 1
            if encode(xi) > code:
                rep.fail([_fmt(t), _fmt(xi)], f"code <= {code}", str(encode(xi)))
    return rep.finish()


# ---------------------------------------------------------------------------
# Tree-side suites


_FIXPOINT_WEXPRS = ["B(_)", "_*", "(_*)*", "(_x_)+P{2;}"]


def suite_tleq_fixpoint(size=5, **_ignored) -> SuiteReport:
    from .parsing import parse_wexpr

    rep = SuiteReport("tleq-fixpoint", {"size": size, "wexprs": _FIXPOINT_WEXPRS})
    for text in _FIXPOINT_WEXPRS:
        w = parse_wexpr(text)
        bound = size + 1 if text == "B(_)" else size
        universe = list(enumerate_tree_terms(w, bound))
        oracle = closure_oracle(universe, w)
        for s, t in itertools.product(universe, repeat=2):
            rep.checked += 1
            got = t_leq(s, t, w)
            if got != oracle[(s, t)]:
                rep.fail([text, _fmt(s), _fmt(t)], oracle[(s, t)], got)
    return rep.finish()


def suite_iso(size=8, **_ignored) -> SuiteReport:
    rep = SuiteReport("iso", {"size": size})
    universe = list(enumerate_tree_terms(B_OF_HOLE, size))
    images = {}
    for t in universe:
        g = to_gap(t)
        images[t] = g
        rep.checked += 1
        if from_gap(g) != t:
            rep.fail([_fmt(t)], "from_gap(to_gap(t)) == t", _fmt(from_gap(g)))
        if not in_t2bar(g):
            rep.fail([_fmt(t)], "image lies in the two-label class", _fmt(g))
    def disagrees(pair) -> bool:
        return t_leq(pair[0], pair[1], B_OF_HOLE) != gap_leq(
            to_gap(pair[0]), to_gap(pair[1]), structured=True
        )

    for s, t in itertools.product(universe, repeat=2):
        rep.checked += 1
        lhs = t_leq(s, t, B_OF_HOLE)
        rhs = gap_leq(images[s], images[t], structured=True)
        if lhs != rhs:
            s, t = shrink((s, t), disagrees)
            rep.fail([_fmt(s), _fmt(t)], f"t_leq {lhs}", f"gap_leq {rhs}")
    return rep.finish()


def suite_gap_oracle(size=7, **_ignored) -> SuiteReport:
    rep = SuiteReport("gap-oracle", {"combined_nodes": size})
    trees = {n: labeled_trees_of_size(n) for n in range(1, size)}
    for n1 in range(1, size):
        for n2 in range(1, size + 1 - n1):
            for t1, t2 in itertools.product(trees[n1], trees[n2]):
                rep.checked += 1
                fast = gap_leq(t1, t2, structured=True)
                slow = brute_gap_leq(t1, t2, structured=True)
                if fast != slow:
                    t1, t2 = shrink(
                        (t1, t2),
                        lambda p: gap_leq(*p, structured=True)
                        != brute_gap_leq(*p, structured=True),
                    )
                    rep.fail([_fmt(t1), _fmt(t2)], f"brute {slow}", f"search {fast}")
    return rep.finish()


def suite_higman_oracle(size=5, poset_size=3, **_ignored) -> SuiteReport:
    rep = SuiteReport("higman-oracle", {"max_len": size, "poset_size": poset_size})
    for p in posets_up_to_iso(poset_size):
        seqs = [
            s
            for n in range(size + 1)
            for s in itertools.product(range(p.size), repeat=n)
        ]
        for xs, ys in itertools.product(seqs, repeat=2):
            rep.checked += 1
            fast = higman_leq(xs, ys, p.le)
            slow = higman_leq_exhaustive(xs, ys, p.le)
            if fast != slow:
                rep.fail([list(xs), list(ys), p.size], f"exhaustive {slow}", f"greedy {fast}")
    return rep.finish()


def suite_quasi_embedding(seed=0, samples=10000, g=3, g_random=6, **_ignored) -> SuiteReport:
    rep = SuiteReport(
        "quasi-embedding",
        {"seed": seed, "samples": samples, "g": g, "g_random": g_random},
    )
    universe = ordinal_universe(SystemId.FULL, g, countable_only=True)
    images = {a: ord_to_tree(a) for a in universe}

    def check_pair(a, b):
        rep.checked += 1
        if t_leq(images[a], images[b], B_OF_HOLE):
            if compare(a, b) is Ordering3.GT:
                rep.fail([_fmt(a), _fmt(b)], "image order reflects", "a > b")

    for a, b in itertools.product(universe, repeat=2):
        check_pair(a, b)

    for t in universe:
        for arg in _theta_arguments(t):
            rep.checked += 1
            labels = set(tree_labels(cnf_tree(arg)))
            expected = {ord_to_tree(x) for x in coefficient_set(arg) | {ZERO}}
            if labels != expected:
                rep.fail([_fmt(arg)], "leaf labels = images of K + 0", "mismatch")

    rng = random.Random(seed)
    done = 0
    while done < samples:
        a = random_term(rng, SystemId.FULL, g_random, countable_only=True)
        b = random_term(rng, SystemId.FULL, g_random, countable_only=True)
        images[a] = ord_to_tree(a)
        images[b] = ord_to_tree(b)
        check_pair(a, b)
        done += 1
    return rep.finish()


def _theta_arguments(t):
    if isinstance(t, Theta):
        yield t.arg
        yield from _theta_arguments(t.arg)
    elif isinstance(t, CountableSum):
        for p in t.parts:
            inner = p.arg if isinstance(p, ThetaPart) else p.exponent
            yield from _theta_arguments(inner)
    elif isinstance(t, OmegaCnf):
        for e, c in t.monomials:
            yield from _theta_arguments(e)
            yield from _theta_arguments(c)


def suite_xstarstar(size=6, **_ignored) -> SuiteReport:
    rep = SuiteReport("xstarstar-cases", {"size": size})
    universe = list(enumerate_tree_terms(XSTARSTAR, size))
    for t, s in itertools.product(universe, repeat=2):
        if isinstance(t, Circ) or isinstance(s, Circ):
            continue
        rep.checked += 1
        cases = xstarstar_membership_cases(t, s)
        truth = not t_leq(t, s, XSTARSTAR)
        if cases != truth:
            t, s = shrink(
                (t, s),
                lambda p: not isinstance(p[0], Circ)
                and not isinstance(p[1], Circ)
                and xstarstar_membership_cases(*p) == t_leq(*p, XSTARSTAR),
            )
            rep.fail([_fmt(t), _fmt(s)], f"not t_leq = {truth}", f"cases = {cases}")
    return rep.finish()


# ---------------------------------------------------------------------------
# Registry

SUITES = {
    "order-axioms": suite_order_axioms,
    "theta-criterion": suite_theta_criterion,
    "coeff-lemmas": suite_coeff_lemmas,
    "g-monotone": suite_g_monotone,
    "encode-monotone": suite_encode_monotone,
    "higman-oracle": suite_higman_oracle,
    "tleq-fixpoint": suite_tleq_fixpoint,
    "gap-oracle": suite_gap_oracle,
    "iso": suite_iso,
    "quasi-embedding": suite_quasi_embedding,
    "xstarstar-cases": suite_xstarstar,
}
