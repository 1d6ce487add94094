"""Syntactic ordinal notations below the Howard-Bachmann ordinal.

Terms denote ordinals built from 0, countable sums of additively principal
ordinals, base-Omega Cantor normal forms, and the collapsing function
``v`` (written ``v(T)`` in the text grammar, printed as such throughout).
Two term systems share one carrier type:

* FULL        -- countable sums are sums of omega-powers ``w^d``;
                 Omega-exponents are arbitrary terms.
* RESTRICTED  -- countable sums are sums of collapsed terms ``v(b)``;
                 Omega-exponents denote natural numbers.

Everything here is a pure function over immutable values.  Comparison
implements the standard criterion for collapsed values

    v(a) < v(b)  iff  (a < b and k(a) < v(b)) or (b < a and v(a) <= k(b))

where ``k`` is the maximum of the hereditary coefficient set ``K``.  The
one rule the two grammars do not fix themselves is how an omega-power
``w^d`` compares against a collapsed term ``v(b)`` with countable ``b``;
we use the exponent bump ``lam(b) = b (+) 1`` exactly when ``b`` has the
shape "epsilon number plus a finite tail of ones" (including the bare
epsilon case), else ``lam(b) = b``, which is the unique reading
consistent with v(0)=1, v(1)=omega, v(n)=omega^n and the post-epsilon
shift of omega-exponents.

All mutually recursive procedures (compare / coefficient maximum /
exponent bump) run on explicit fuel proportional to term size; running
out of fuel raises FuelError and is treated as an internal bug, never a
normal result.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Union


class OrdinalError(Exception):
    pass


class FuelError(OrdinalError):
    """Comparison recursion exceeded its fuel; indicates an internal bug."""


class RangeError(OrdinalError):
    """Result is not representable in the requested term system."""


class SystemId(enum.Enum):
    FULL = "full"
    RESTRICTED = "restricted"


class Ordering3(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1

    def flipped(self) -> "Ordering3":
        return Ordering3(-self.value)


# ---------------------------------------------------------------------------
# Term algebra


@dataclass(frozen=True)
class Zero:
    def __repr__(self) -> str:
        return "Zero"


@dataclass(frozen=True)
class Theta:
    arg: "OrdinalTerm"

    def __repr__(self) -> str:
        return f"Theta({self.arg!r})"


@dataclass(frozen=True)
class OmegaPow:
    """Summand ``w^exponent``.  Occurs only inside CountableSum."""

    exponent: "OrdinalTerm"

    def __repr__(self) -> str:
        return f"OmegaPow({self.exponent!r})"


@dataclass(frozen=True)
class ThetaPart:
    """Summand ``v(arg)``.  Occurs only inside CountableSum."""

    arg: "OrdinalTerm"

    def __repr__(self) -> str:
        return f"ThetaPart({self.arg!r})"


@dataclass(frozen=True)
class CountableSum:
    parts: tuple["Principal", ...]

    def __repr__(self) -> str:
        return f"CountableSum({list(self.parts)!r})"


@dataclass(frozen=True)
class OmegaCnf:
    """Base-Omega normal form: ((exponent, coefficient), ...), exponents
    strictly decreasing, coefficients countable and nonzero."""

    monomials: tuple[tuple["OrdinalTerm", "OrdinalTerm"], ...]

    def __repr__(self) -> str:
        return f"OmegaCnf({list(self.monomials)!r})"


Principal = Union[OmegaPow, ThetaPart]
OrdinalTerm = Union[Zero, Theta, CountableSum, OmegaCnf]

ZERO = Zero()
ONE = Theta(ZERO)


@lru_cache(maxsize=None)
def size(t) -> int:
    """Constructor-node count; also used to budget comparison fuel."""
    if isinstance(t, Zero):
        return 1
    if isinstance(t, (Theta, ThetaPart)):
        return 1 + size(t.arg)
    if isinstance(t, OmegaPow):
        return 1 + size(t.exponent)
    if isinstance(t, CountableSum):
        return 1 + sum(size(p) for p in t.parts)
    if isinstance(t, OmegaCnf):
        return 1 + sum(1 + size(e) + size(c) for e, c in t.monomials)
    raise TypeError(f"not a term: {t!r}")


def is_countable(t: OrdinalTerm) -> bool:
    if isinstance(t, (Zero, Theta, CountableSum)):
        return True
    if isinstance(t, OmegaCnf):
        # A single Omega^0 monomial would denote its own coefficient;
        # normal forms exclude it, but answer honestly anyway.
        return len(t.monomials) == 1 and isinstance(t.monomials[0][0], Zero)
    raise TypeError(f"not a term: {t!r}")


def is_natural_term(t: OrdinalTerm) -> bool:
    """Does t denote a natural number (0, v(0), or a sum of units)?"""
    return nat_value(t) is not None


def nat_value(t: OrdinalTerm) -> Optional[int]:
    if isinstance(t, Zero):
        return 0
    if t == ONE:
        return 1
    if isinstance(t, CountableSum) and all(_part_is_unit(p) for p in t.parts):
        return len(t.parts)
    return None


def natural(n: int, sys: SystemId = SystemId.FULL) -> OrdinalTerm:
    if n < 0:
        raise ValueError("naturals only")
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    unit = OmegaPow(ZERO) if sys is SystemId.FULL else ThetaPart(ZERO)
    return CountableSum((unit,) * n)


def _part_is_unit(p: Principal) -> bool:
    return (isinstance(p, OmegaPow) and isinstance(p.exponent, Zero)) or (
        isinstance(p, ThetaPart) and isinstance(p.arg, Zero)
    )


def _is_epsilon_term(t: OrdinalTerm) -> bool:
    """v(b) with uncountable b is an epsilon number; nothing else is."""
    return isinstance(t, Theta) and not is_countable(t.arg)


def _part_is_epsilon(p: Principal) -> bool:
    if isinstance(p, ThetaPart):
        return not is_countable(p.arg)
    return _is_epsilon_term(p.exponent)


def _shape_epsilon_plus_n(t: OrdinalTerm) -> bool:
    """Syntactic shape "epsilon + n" (n >= 0): the arguments whose
    collapse sits one omega-exponent above the plain reading."""
    if _is_epsilon_term(t):
        return True
    if isinstance(t, CountableSum) and t.parts:
        return _part_is_epsilon(t.parts[0]) and all(
            _part_is_unit(p) for p in t.parts[1:]
        )
    return False


# ---------------------------------------------------------------------------
# Comparison

_FUEL_FACTOR = 4
_FUEL_SLACK = 16
_cmp_cache: dict[tuple, Ordering3] = {}


def compare(a: OrdinalTerm, b: OrdinalTerm) -> Ordering3:
    """Order of the denoted ordinals.  Total on structurally sane terms."""
    fuel = _FUEL_FACTOR * (size(a) + size(b)) + _FUEL_SLACK
    return _compare(a, b, fuel)


def _spend(fuel: int) -> int:
    if fuel <= 0:
        raise FuelError("comparison fuel exhausted")
    return fuel - 1


def _compare(a, b, fuel: int) -> Ordering3:
    if a == b:
        return Ordering3.EQ
    key = (a, b)
    hit = _cmp_cache.get(key)
    if hit is not None:
        return hit
    fuel = _spend(fuel)
    result = _compare_raw(a, b, fuel)
    _cmp_cache[key] = result
    _cmp_cache[(b, a)] = result.flipped()
    return result


def _compare_raw(a, b, fuel: int) -> Ordering3:
    if isinstance(a, Zero):
        return Ordering3.LT
    if isinstance(b, Zero):
        return Ordering3.GT
    ca, cb = is_countable(a), is_countable(b)
    if ca and not cb:
        return Ordering3.LT
    if cb and not ca:
        return Ordering3.GT
    if not ca:
        return _compare_cnf(a, b, fuel)
    return _compare_countable(a, b, fuel)


def _compare_cnf(a: OmegaCnf, b: OmegaCnf, fuel: int) -> Ordering3:
    for (ea, ca), (eb, cb) in zip(a.monomials, b.monomials):
        c = _compare(ea, eb, fuel)
        if c is not Ordering3.EQ:
            return c
        c = _compare(ca, cb, fuel)
        if c is not Ordering3.EQ:
            return c
    if len(a.monomials) == len(b.monomials):
        return Ordering3.EQ
    return Ordering3.LT if len(a.monomials) < len(b.monomials) else Ordering3.GT


def _parts_view(t: OrdinalTerm) -> tuple[Principal, ...]:
    """A countable nonzero term as its list of principal summands."""
    if isinstance(t, Theta):
        return (ThetaPart(t.arg),)
    if isinstance(t, CountableSum):
        return t.parts
    raise TypeError(f"no summand view: {t!r}")


def _compare_countable(a, b, fuel: int) -> Ordering3:
    pa, pb = _parts_view(a), _parts_view(b)
    for x, y in zip(pa, pb):
        c = _compare_parts(x, y, fuel)
        if c is not Ordering3.EQ:
            return c
    if len(pa) == len(pb):
        return Ordering3.EQ
    return Ordering3.LT if len(pa) < len(pb) else Ordering3.GT


def _compare_parts(p: Principal, q: Principal, fuel: int) -> Ordering3:
    if isinstance(p, ThetaPart) and isinstance(q, ThetaPart):
        return _compare_theta(p.arg, q.arg, fuel)
    return _compare(_part_exponent(p, fuel), _part_exponent(q, fuel), fuel)


def _compare_theta(a, b, fuel: int) -> Ordering3:
    c = _compare(a, b, fuel)
    if c is Ordering3.EQ:
        return Ordering3.EQ
    if c is Ordering3.LT:
        # v(a) < v(b) iff k(a) < v(b)
        d = _compare(_max_coefficient(a, fuel), Theta(b), fuel)
        return Ordering3.LT if d is Ordering3.LT else Ordering3.GT
    # b < a: v(a) < v(b) iff v(a) <= k(b)
    d = _compare(Theta(a), _max_coefficient(b, fuel), fuel)
    return Ordering3.LT if d is not Ordering3.GT else Ordering3.GT


def _part_exponent(p: Principal, fuel: int) -> OrdinalTerm:
    """Exponent d with omega^d equal to the summand, keeping the
    summand sort of any bump untouched (compare is sort-blind)."""
    if isinstance(p, OmegaPow):
        return p.exponent
    beta = p.arg
    if not is_countable(beta):
        return Theta(beta)
    if _shape_epsilon_plus_n(beta):
        return CountableSum(_parts_view(beta) + (ThetaPart(ZERO),))
    return beta


def compare_principals(p: Principal, q: Principal) -> Ordering3:
    """Order of two summands; w^0 and v(0) both denote 1 and compare EQ."""
    fuel = _FUEL_FACTOR * (size(p) + size(q)) + _FUEL_SLACK
    return _compare_parts(p, q, fuel)


# ---------------------------------------------------------------------------
# Coefficients


def coefficient_set(t: OrdinalTerm) -> frozenset:
    """Hereditary countable coefficients K(t).

    K(0) = {0}; K of a nonzero countable term is the term itself; for a
    base-Omega normal form the coefficients union the K of every
    exponent.
    """
    if isinstance(t, Zero):
        return frozenset((ZERO,))
    if is_countable(t):
        return frozenset((t,))
    out = set()
    for e, c in t.monomials:
        out.add(c)
        out |= coefficient_set(e)
    return frozenset(out)


def max_coefficient(t: OrdinalTerm) -> OrdinalTerm:
    fuel = _FUEL_FACTOR * 2 * size(t) + _FUEL_SLACK
    return _max_coefficient(t, fuel)


@lru_cache(maxsize=None)
def _kset_cached(t):
    return coefficient_set(t)


def _max_coefficient(t, fuel: int) -> OrdinalTerm:
    best = None
    for x in _kset_cached(t):
        if best is None or _compare(x, best, fuel) is Ordering3.GT:
            best = x
    return best


# ---------------------------------------------------------------------------
# Canonical constructors


def make_sum(parts, sys_hint: Optional[SystemId] = None) -> OrdinalTerm:
    """Countable sum of principal summands, sorted non-increasing.

    Empty input gives 0; a singleton collapses to the standalone form of
    its summand (bare omega-powers are not standalone terms).
    """
    parts = list(parts)
    if not parts:
        return ZERO
    import functools

    parts.sort(
        key=functools.cmp_to_key(lambda x, y: compare_principals(x, y).value),
        reverse=True,
    )
    if len(parts) == 1:
        p = parts[0]
        if isinstance(p, ThetaPart):
            return Theta(p.arg)
        return theta_of_omega_exponent(p.exponent)
    return CountableSum(tuple(parts))


def make_cnf(monomials, sys: Optional[SystemId] = None) -> OrdinalTerm:
    """Base-Omega normal form from (exponent, coefficient) pairs: sorts
    exponents decreasing, merges equal exponents with the natural sum,
    drops zero coefficients, and collapses the degenerate Omega^0 case.
    Merged coefficients are written in the sort of ``sys`` when given.
    """
    groups: list[list] = []
    for e, c in monomials:
        if isinstance(c, Zero):
            continue
        placed = False
        for g in groups:
            if compare(g[0], e) is Ordering3.EQ:
                if sys is None:
                    g[1] = _sum_preserving(g[1], c)
                else:
                    g[1] = natural_sum(g[1], c, sys)
                placed = True
                break
        if not placed:
            groups.append([e, c])
    if not groups:
        return ZERO
    import functools

    groups.sort(
        key=functools.cmp_to_key(lambda x, y: compare(x[0], y[0]).value),
        reverse=True,
    )
    if len(groups) == 1 and isinstance(groups[0][0], Zero):
        return groups[0][1]
    return OmegaCnf(tuple((e, c) for e, c in groups))


def _sum_preserving(a: OrdinalTerm, b: OrdinalTerm) -> OrdinalTerm:
    """Natural sum of countable terms keeping each summand's own sort."""
    if isinstance(a, Zero):
        return b
    if isinstance(b, Zero):
        return a
    return make_sum(_parts_view(a) + _parts_view(b))


def theta_of_omega_exponent(x: OrdinalTerm) -> Theta:
    """The standalone term denoting omega^x, for countable x.

    Inverts the exponent bump: epsilon-shaped exponents step down one
    unit; an exponent that itself denotes an epsilon number is already
    its own omega-power.
    """
    if not is_countable(x):
        raise RangeError("omega-power of an uncountable exponent")
    if _is_epsilon_term(x):
        return x
    if _shape_epsilon_plus_n(x):
        return Theta(make_sum(_parts_view(x)[:-1]))
    return Theta(x)


# ---------------------------------------------------------------------------
# Natural (Hessenberg) arithmetic


def exponent_of_principal(p: Principal) -> OrdinalTerm:
    """Exponent d with omega^d = p, as a FULL-system term."""
    if isinstance(p, OmegaPow):
        return p.exponent
    beta = p.arg
    if not is_countable(beta):
        return Theta(beta)
    if _shape_epsilon_plus_n(beta):
        return natural_sum(beta, ONE, SystemId.FULL)
    return beta


def _part_as(p: Principal, sys: SystemId) -> Principal:
    if sys is SystemId.FULL:
        if isinstance(p, OmegaPow):
            return p
        return OmegaPow(exponent_of_principal(p))
    if isinstance(p, ThetaPart):
        return p
    return ThetaPart(theta_of_omega_exponent(p.exponent).arg)


def _parts_as(t: OrdinalTerm, sys: SystemId) -> tuple[Principal, ...]:
    return tuple(_part_as(p, sys) for p in _parts_view(t))


def _monomial_view(t: OrdinalTerm) -> tuple[tuple[OrdinalTerm, OrdinalTerm], ...]:
    """Uniform base-Omega view; a countable term reads as Omega^0 * t."""
    if isinstance(t, OmegaCnf):
        return t.monomials
    return ((ZERO, t),)


def natural_sum(a: OrdinalTerm, b: OrdinalTerm, sys: SystemId = SystemId.FULL) -> OrdinalTerm:
    """Hessenberg sum; the result is written in the sort of ``sys``."""
    if isinstance(a, Zero):
        return b
    if isinstance(b, Zero):
        return a
    if is_countable(a) and is_countable(b):
        return make_sum(_parts_as(a, sys) + _parts_as(b, sys))
    merged = list(_monomial_view(a)) + list(_monomial_view(b))
    out = make_cnf(merged, sys)
    _check_system_range(out, sys)
    return out


def natural_product(a: OrdinalTerm, b: OrdinalTerm, sys: SystemId = SystemId.FULL) -> OrdinalTerm:
    """Hessenberg product; distributes monomials and sums exponents."""
    if isinstance(a, Zero) or isinstance(b, Zero):
        return ZERO
    if is_countable(a) and is_countable(b):
        return _countable_product(a, b, sys)
    monos = []
    for ea, ca in _monomial_view(a):
        for eb, cb in _monomial_view(b):
            e = natural_sum(ea, eb, sys)
            c = _countable_product(ca, cb, sys)
            monos.append((e, c))
    out = make_cnf(monos, sys)
    _check_system_range(out, sys)
    return out


def _countable_product(a, b, sys: SystemId) -> OrdinalTerm:
    exps = [
        natural_sum(exponent_of_principal(p), exponent_of_principal(q), SystemId.FULL)
        for p in _parts_view(a)
        for q in _parts_view(b)
    ]
    if sys is SystemId.FULL:
        parts = [OmegaPow(e) for e in exps]
    else:
        parts = [ThetaPart(theta_of_omega_exponent(e).arg) for e in exps]
    return make_sum(parts)


def _check_system_range(t: OrdinalTerm, sys: SystemId) -> None:
    if sys is SystemId.RESTRICTED and isinstance(t, OmegaCnf):
        for e, _ in t.monomials:
            if not is_natural_term(e):
                raise RangeError(
                    "Omega-exponent leaves the naturals; not representable in "
                    "the restricted system"
                )


# ---------------------------------------------------------------------------
# Additive closure, complexity, towers


def is_additively_closed(t: OrdinalTerm) -> bool:
    if isinstance(t, Theta):
        return True
    if isinstance(t, OmegaCnf):
        return len(t.monomials) == 1 and is_additively_closed(t.monomials[0][1])
    return False


def complexity(t: OrdinalTerm, sys: SystemId) -> int:
    """The inductive rank used by the notation systems.

    FULL counts exponents and coefficients of a normal form and the
    omega-exponents of a countable sum; RESTRICTED counts only the
    coefficients of a normal form (its exponents are plain naturals) and
    the summands of a countable sum.
    """
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Theta):
        return complexity(t.arg, sys) + 1
    if isinstance(t, CountableSum):
        if sys is SystemId.FULL:
            return max(complexity(_summand_measure_full(p), sys) for p in t.parts) + 1
        return max(_part_complexity_restricted(p) for p in t.parts) + 1
    if isinstance(t, OmegaCnf):
        if sys is SystemId.FULL:
            tops = [complexity(e, sys) for e, _ in t.monomials]
            tops += [complexity(c, sys) for _, c in t.monomials]
        else:
            tops = [complexity(c, SystemId.RESTRICTED) for _, c in t.monomials]
        return max(tops) + 1
    raise TypeError(f"not a term: {t!r}")


def _summand_measure_full(p: Principal) -> OrdinalTerm:
    # The FULL clause ranks a sum by its omega-exponents.
    if isinstance(p, OmegaPow):
        return p.exponent
    raise OrdinalError("FULL complexity applied to a v(_) summand")


def _part_complexity_restricted(p: Principal) -> int:
    if isinstance(p, ThetaPart):
        return complexity(p.arg, SystemId.RESTRICTED) + 1
    raise OrdinalError("RESTRICTED complexity applied to a w^_ summand")


def omega_tower(n: int, t: OrdinalTerm) -> OrdinalTerm:
    """Omega-exponential tower of height n over t."""
    if n < 0:
        raise ValueError("tower height must be >= 0")
    out = t
    for _ in range(n):
        out = OmegaCnf(((out, ONE),))
    return out


# ---------------------------------------------------------------------------
# Validation


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    clause: Optional[str] = None
    path: Optional[str] = None
    detail: Optional[str] = None

    def __bool__(self) -> bool:
        return self.valid


_OK = ValidityReport(True)


def validate(t: OrdinalTerm, sys: SystemId) -> ValidityReport:
    """Check every structural invariant of the system; the report names
    the first violated clause and where it sits."""
    return _validate(t, sys, "term")


def _bad(clause: str, path: str, detail: str) -> ValidityReport:
    return ValidityReport(False, clause, path, detail)


def _validate(t, sys: SystemId, path: str) -> ValidityReport:
    if isinstance(t, Zero):
        return _OK
    if isinstance(t, Theta):
        return _validate(t.arg, sys, path + ".arg")
    if isinstance(t, (OmegaPow, ThetaPart)):
        return _bad("bare-summand", path, "a summand is not a standalone term")
    if isinstance(t, CountableSum):
        return _validate_sum(t, sys, path)
    if isinstance(t, OmegaCnf):
        return _validate_cnf(t, sys, path)
    return _bad("unknown-node", path, f"not a term: {t!r}")


def _validate_sum(t: CountableSum, sys: SystemId, path: str) -> ValidityReport:
    if len(t.parts) < 2:
        return _bad("sum-too-short", path, "countable sums need at least 2 summands")
    for i, p in enumerate(t.parts):
        here = f"{path}.parts[{i}]"
        if sys is SystemId.FULL and not isinstance(p, OmegaPow):
            return _bad("sum-part-sort", here, "FULL sums are sums of omega-powers")
        if sys is SystemId.RESTRICTED and not isinstance(p, ThetaPart):
            return _bad("sum-part-sort", here, "RESTRICTED sums are sums of v(_) terms")
        inner = p.exponent if isinstance(p, OmegaPow) else p.arg
        if isinstance(p, OmegaPow) and not is_countable(p.exponent):
            return _bad("sum-exponent-uncountable", here, "omega-exponent must be countable")
        r = _validate(inner, sys, here)
        if not r:
            return r
    for i in range(len(t.parts) - 1):
        if compare_principals(t.parts[i], t.parts[i + 1]) is Ordering3.LT:
            return _bad("sum-order", f"{path}.parts[{i}]", "summands must be non-increasing")
    if sys is SystemId.FULL:
        # alpha > d1 for the leading exponent (automatic for 2+ summands,
        # checked all the same).
        d1 = t.parts[0].exponent
        if compare(t, d1) is not Ordering3.GT:
            return _bad("sum-leading-exponent", path, "sum must exceed its first exponent")
    return _OK


def _validate_cnf(t: OmegaCnf, sys: SystemId, path: str) -> ValidityReport:
    if not t.monomials:
        return _bad("cnf-empty", path, "normal form needs at least one monomial")
    if len(t.monomials) == 1 and isinstance(t.monomials[0][0], Zero):
        return _bad("cnf-degenerate", path, "a lone Omega^0 monomial is just its coefficient")
    for i, (e, c) in enumerate(t.monomials):
        here = f"{path}.monomials[{i}]"
        if isinstance(c, Zero):
            return _bad("cnf-coefficient-zero", here + ".coefficient", "coefficients are nonzero")
        if not is_countable(c):
            return _bad(
                "cnf-coefficient-uncountable", here + ".coefficient",
                "coefficients sit below Omega",
            )
        if sys is SystemId.RESTRICTED and not is_natural_term(e):
            return _bad(
                "restricted-exponent-not-natural", here + ".exponent",
                "RESTRICTED Omega-exponents denote naturals",
            )
        r = _validate(e, sys, here + ".exponent")
        if not r:
            return r
        r = _validate(c, sys, here + ".coefficient")
        if not r:
            return r
    for i in range(len(t.monomials) - 1):
        if compare(t.monomials[i][0], t.monomials[i + 1][0]) is not Ordering3.GT:
            return _bad(
                "cnf-exponent-order", f"{path}.monomials[{i}]",
                "exponents must be strictly decreasing",
            )
    return _OK


# ---------------------------------------------------------------------------
# Godel coding

# encode is a bijection between all raw term trees and the naturals with
# every constituent's code strictly below the whole term's code, so the
# coefficient-set and subterm monotonicity laws hold by construction.


def _pair(x: int, y: int) -> int:
    s = x + y
    return s * (s + 1) // 2 + y


def _unpair(n: int) -> tuple[int, int]:
    import math

    s = (math.isqrt(8 * n + 1) - 1) // 2
    y = n - s * (s + 1) // 2
    return s - y, y


def _encode_list(codes: list[int]) -> int:
    if not codes:
        return 0
    return _pair(codes[0], _encode_list(codes[1:])) + 1


def _decode_list(n: int) -> list[int]:
    out = []
    while n:
        h, n = _unpair(n - 1)
        out.append(h)
    return out


def encode(t: OrdinalTerm) -> int:
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Theta):
        return 3 * encode(t.arg) + 1
    if isinstance(t, CountableSum):
        codes = []
        for p in t.parts:
            if isinstance(p, OmegaPow):
                codes.append(2 * encode(p.exponent))
            else:
                codes.append(2 * encode(p.arg) + 1)
        return 3 * _encode_list(codes) + 2
    if isinstance(t, OmegaCnf):
        codes = [_pair(encode(e), encode(c)) for e, c in t.monomials]
        return 3 * _encode_list(codes) + 3
    raise TypeError(f"not a term: {t!r}")


def decode(n: int, sys: SystemId = SystemId.FULL) -> OrdinalTerm:
    """Inverse of encode; rejects codes of invalid terms."""
    t = _decode_raw(n)
    report = validate(t, sys)
    if not report:
        raise ValueError(f"not a valid {sys.value} code: {report.clause} at {report.path}")
    return t


def _decode_raw(n: int) -> OrdinalTerm:
    if n < 0:
        raise ValueError("codes are naturals")
    if n == 0:
        return ZERO
    tag, payload = (n - 1) % 3, (n - 1) // 3
    if tag == 0:
        return Theta(_decode_raw(payload))
    if tag == 1:
        parts = []
        for c in _decode_list(payload):
            if c % 2 == 0:
                parts.append(OmegaPow(_decode_raw(c // 2)))
            else:
                parts.append(ThetaPart(_decode_raw((c - 1) // 2)))
        return CountableSum(tuple(parts))
    monos = []
    for c in _decode_list(payload):
        e, co = _unpair(c)
        monos.append((_decode_raw(e), _decode_raw(co)))
    return OmegaCnf(tuple(monos))


# ---------------------------------------------------------------------------
# Bounded enumeration

# The inductive rank alone does not bound term count (unit sums of any
# length share one rank, and RESTRICTED ranks ignore Omega-exponents),
# so enumeration carries explicit width caps; each bound then yields a
# finite, duplicate-free, deterministically ordered universe.


def enumerate_terms(
    sys: SystemId,
    max_complexity: int,
    countable_only: bool = False,
    *,
    max_sum_parts: int = 3,
    max_monomials: int = 2,
    max_nat_exponent: int = 2,
    max_size: Optional[int] = None,
) -> Iterator[OrdinalTerm]:
    terms = _enumerate_all(
        sys, max_complexity, max_sum_parts, max_monomials, max_nat_exponent, max_size
    )
    for t in terms:
        if countable_only and not is_countable(t):
            continue
        yield t


def _enumerate_all(sys, gmax, max_parts, max_monos, max_exp, max_size):
    import functools

    budget = max_size if max_size is not None else 10**9
    rank: dict[OrdinalTerm, int] = {ZERO: 0}
    part_cmp = functools.cmp_to_key(lambda x, y: compare_principals(x, y).value)
    term_cmp = functools.cmp_to_key(lambda x, y: compare(x, y).value)

    def sums_from(part_pool):
        """Non-increasing part tuples of length 2..max_parts within the
        size budget; the pool arrives sorted non-increasing already."""
        sizes = [size(p) for p in part_pool]
        out = []

        def go(start, chosen, left):
            if len(chosen) >= 2:
                out.append(CountableSum(tuple(chosen)))
            if len(chosen) == max_parts:
                return
            for i in range(start, len(part_pool)):
                if sizes[i] <= left:
                    chosen.append(part_pool[i])
                    go(i, chosen, left - sizes[i])
                    chosen.pop()

        go(0, [], budget - 1)
        return out

    def cnfs_from(exp_pool, coeff_pool):
        """Monomial tuples with strictly decreasing exponents within the
        size budget; exp_pool arrives sorted strictly decreasing."""
        esizes = [size(e) for e in exp_pool]
        csizes = [size(c) for c in coeff_pool]
        out = []

        def go(start, chosen, left):
            if chosen and not (len(chosen) == 1 and isinstance(chosen[0][0], Zero)):
                out.append(OmegaCnf(tuple(chosen)))
            if len(chosen) == max_monos:
                return
            for i in range(start, len(exp_pool)):
                for j, c in enumerate(coeff_pool):
                    need = 1 + esizes[i] + csizes[j]
                    if need <= left:
                        chosen.append((exp_pool[i], c))
                        go(i + 1, chosen, left - need)
                        chosen.pop()

        go(0, [], budget - 1)
        return out

    for level in range(1, gmax + 1):
        prev = [t for t, g in rank.items() if g <= level - 1]
        prev_countable = [t for t in prev if is_countable(t)]
        fresh = []

        fresh.extend(Theta(t) for t in prev if size(t) + 1 <= budget)

        if sys is SystemId.FULL:
            part_pool = [OmegaPow(d) for d in prev_countable]
        else:
            args = [t for t, g in rank.items() if g <= level - 2]
            part_pool = [ThetaPart(b) for b in args]
        part_pool.sort(key=part_cmp, reverse=True)
        fresh.extend(sums_from(part_pool))

        if sys is SystemId.FULL:
            exp_pool = list(prev)
        else:
            exp_pool = [natural(k, sys) for k in range(max_exp + 1)]
        exp_pool.sort(key=term_cmp, reverse=True)
        coeff_pool = [t for t in prev_countable if not isinstance(t, Zero)]
        fresh.extend(cnfs_from(exp_pool, coeff_pool))

        for t in fresh:
            if t not in rank:
                rank[t] = complexity(t, sys)

    out = [t for t, g in rank.items() if g <= gmax]
    out.sort(key=lambda t: (rank[t], size(t), encode(t)))
    return out
