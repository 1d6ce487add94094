"""Explicit finite posets: constants for constructor expressions and the
substrate for brute-force order oracles."""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class FinitePoset:
    size: int
    leq: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = self.size
        if len(self.leq) != n or any(len(row) != n for row in self.leq):
            raise ValueError("relation matrix must be size x size")
        for i in range(n):
            if not self.leq[i][i]:
                raise ValueError("relation must be reflexive")
        for i, j in itertools.product(range(n), repeat=2):
            if i != j and self.leq[i][j] and self.leq[j][i]:
                raise ValueError("relation must be antisymmetric")
            if self.leq[i][j]:
                for k in range(n):
                    if self.leq[j][k] and not self.leq[i][k]:
                        raise ValueError("relation must be transitive")

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def covering_pairs(self) -> list[tuple[int, int]]:
        out = []
        for i, j in itertools.product(range(self.size), repeat=2):
            if i == j or not self.leq[i][j]:
                continue
            if not any(
                k != i and k != j and self.leq[i][k] and self.leq[k][j]
                for k in range(self.size)
            ):
                out.append((i, j))
        return out


def from_pairs(size: int, pairs) -> FinitePoset:
    """Poset from strict covering pairs i<j, closed reflexively and
    transitively; antisymmetry failures surface as construction errors."""
    rel = [[i == j for j in range(size)] for i in range(size)]
    for i, j in pairs:
        if not (0 <= i < size and 0 <= j < size):
            raise ValueError(f"pair ({i},{j}) out of range")
        rel[i][j] = True
    changed = True
    while changed:
        changed = False
        for i, j, k in itertools.product(range(size), repeat=3):
            if rel[i][j] and rel[j][k] and not rel[i][k]:
                rel[i][k] = True
                changed = True
    return FinitePoset(size, tuple(tuple(row) for row in rel))


def chain(n: int) -> FinitePoset:
    return FinitePoset(n, tuple(tuple(i <= j for j in range(n)) for i in range(n)))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, tuple(tuple(i == j for j in range(n)) for i in range(n)))


def posets_up_to_iso(max_size: int) -> list[FinitePoset]:
    """One representative per isomorphism class, sizes 1..max_size.

    Hardcoded through size 3 (1 + 2 + 5 classes); enumerated generically
    beyond that.
    """
    out = [chain(1), chain(2), antichain(2)]
    if max_size >= 3:
        out += [
            chain(3),
            antichain(3),
            from_pairs(3, [(0, 1), (0, 2)]),  # V
            from_pairs(3, [(0, 2), (1, 2)]),  # Lambda
            from_pairs(3, [(0, 1)]),  # edge plus isolated point
        ]
    for n in range(4, max_size + 1):
        out.extend(_all_posets_iso(n))
    return [p for p in out if p.size <= max_size]


def _all_posets_iso(n: int) -> list[FinitePoset]:
    seen_canon = set()
    found = []
    cells = [(i, j) for i, j in itertools.product(range(n), repeat=2) if i != j]
    for bits in itertools.product((False, True), repeat=len(cells)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for (i, j), b in zip(cells, bits):
            rel[i][j] = b
        try:
            p = FinitePoset(n, tuple(tuple(r) for r in rel))
        except ValueError:
            continue
        canon = _canonical_form(p)
        if canon not in seen_canon:
            seen_canon.add(canon)
            found.append(p)
    return found


def _canonical_form(p: FinitePoset):
    best = None
    for perm in itertools.permutations(range(p.size)):
        mat = tuple(
            tuple(p.leq[perm[i]][perm[j]] for j in range(p.size))
            for i in range(p.size)
        )
        if best is None or mat < best:
            best = mat
    return best


def quasi_embeddings(src: FinitePoset, dst: FinitePoset) -> list[tuple[int, ...]]:
    """All maps q with q(x) <= q(y) implying x <= y (need not be injective)."""
    out = []
    for q in itertools.product(range(dst.size), repeat=src.size):
        if all(
            src.le(x, y)
            for x in range(src.size)
            for y in range(src.size)
            if dst.le(q[x], q[y])
        ):
            out.append(q)
    return out
