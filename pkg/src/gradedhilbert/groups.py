"""Finite groups stored as Cayley tables.

Index 0 is always the identity.  Every constructor funnels through
:func:`from_cayley_table`, so a :class:`Group` value is always a validated
group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_ORDER = 720
MAX_SYMMETRIC_DEGREE = 6


class NotAGroup(ValueError):
    """The supplied table violates a group axiom."""


class BoundExceeded(ValueError):
    """A constructor parameter exceeds the supported size."""


@dataclass(frozen=True)
class Group:
    order: int
    table: tuple[tuple[int, ...], ...]
    inverse: tuple[int, ...]
    labels: tuple[str, ...]

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def element_order(self, i: int) -> int:
        return element_order(self, i)

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    def __repr__(self) -> str:
        return f"Group(order={self.order}, labels={list(self.labels)[:8]}{'...' if self.order > 8 else ''})"


def _find_identity(rows: list[list[int]]) -> int | None:
    s = len(rows)
    for e in range(s):
        if all(rows[e][j] == j and rows[j][e] == j for j in range(s)):
            return e
    return None


def _move_to_front(rows: list[list[int]], labels: list[str], e: int):
    perm = [e] + [i for i in range(len(rows)) if i != e]  # new index -> old index
    pos = {old: new for new, old in enumerate(perm)}
    new_rows = [[pos[rows[perm[i]][perm[j]]] for j in range(len(rows))] for i in range(len(rows))]
    return new_rows, [labels[i] for i in perm]


def _check_associative(rows: list[list[int]]) -> None:
    t = np.asarray(rows, dtype=np.int64)
    for i in range(len(rows)):
        # (x_i x_j) x_k  versus  x_i (x_j x_k), for all j, k at once
        left = t[t[i]]
        right = t[i][t]
        bad = np.argwhere(left != right)
        if bad.size:
            j, k = (int(v) for v in bad[0])
            raise NotAGroup(
                f"associativity fails for triple ({i}, {j}, {k}): "
                f"({i}*{j})*{k} = {int(left[j, k])} but {i}*({j}*{k}) = {int(right[j, k])}"
            )


def from_cayley_table(table: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> Group:
    """Validate a multiplication table and build a :class:`Group`.

    ``table[i][j]`` is the index of ``x_i * x_j``.  If the identity is not at
    index 0 the elements are reordered (identity first, the rest in their
    original order) and the labels follow.
    """
    rows = [list(r) for r in table]
    s = len(rows)
    if s == 0:
        raise NotAGroup("empty table")
    if s > MAX_ORDER:
        raise BoundExceeded(f"order {s} exceeds the supported maximum {MAX_ORDER}")
    for i, r in enumerate(rows):
        if len(r) != s:
            raise NotAGroup(f"row {i} has length {len(r)}, expected {s}")
        for j, v in enumerate(r):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < s:
                raise NotAGroup(f"entry ({i}, {j}) = {v!r} is not an index in 0..{s - 1}")
        rows[i] = [int(v) for v in r]
    if labels is None:
        labels = [str(i) for i in range(s)]
    labels = [str(x) for x in labels]
    if len(labels) != s:
        raise NotAGroup(f"{len(labels)} labels for a table of order {s}")
    if len(set(labels)) != s:
        raise NotAGroup("labels are not distinct")

    full = set(range(s))
    for i in range(s):
        if set(rows[i]) != full:
            raise NotAGroup(f"row {i} is not a permutation of 0..{s - 1}")
        if {rows[j][i] for j in range(s)} != full:
            raise NotAGroup(f"column {i} is not a permutation of 0..{s - 1}")

    e = _find_identity(rows)
    if e is None:
        raise NotAGroup("no two-sided identity element")
    if e != 0:
        rows, labels = _move_to_front(rows, labels, e)

    _check_associative(rows)

    inverse = []
    for i in range(s):
        j = rows[i].index(0)
        if rows[j][i] != 0:
            raise NotAGroup(f"element {i} has right inverse {j} which is not a left inverse")
        inverse.append(j)

    return Group(
        order=s,
        table=tuple(tuple(r) for r in rows),
        inverse=tuple(inverse),
        labels=tuple(labels),
    )


def element_order(g: Group, i: int) -> int:
    if not 0 <= i < g.order:
        raise IndexError(f"element index {i} out of range for order {g.order}")
    r, x = 1, i
    while x != 0:
        x = g.table[x][i]
        r += 1
    return r


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    if n > MAX_ORDER:
        raise BoundExceeded(f"cyclic group of order {n} exceeds {MAX_ORDER}")
    return from_cayley_table([[(i + j) % n for j in range(n)] for i in range(n)])


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n: index ``f*n + k`` is ``r^k s^f``."""
    if n < 2:
        raise ValueError("dihedral(n) needs n >= 2")
    if 2 * n > MAX_ORDER:
        raise BoundExceeded(f"dihedral group of order {2 * n} exceeds {MAX_ORDER}")

    def label(k: int, f: int) -> str:
        rot = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        if f == 0:
            return rot or "e"
        return f"{rot} s".strip()

    elems = [(k, f) for f in (0, 1) for k in range(n)]
    index = {x: i for i, x in enumerate(elems)}
    table = []
    for k1, f1 in elems:
        # r^k1 s^f1 * r^k2 s^f2 = r^(k1 + (-1)^f1 k2) s^(f1 + f2)
        table.append([index[((k1 + (-k2 if f1 else k2)) % n, f1 ^ f2)] for k2, f2 in elems])
    return from_cayley_table(table, [label(k, f) for k, f in elems])


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def symmetric(n: int) -> Group:
    """Symmetric group on n letters, permutations in lexicographic order.

    The product is composition, ``(p*q)(i) = p(q(i))``; labels use 1-based
    cycle notation.
    """
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    if n > MAX_SYMMETRIC_DEGREE:
        raise BoundExceeded(f"symmetric({n}) exceeds the cap n <= {MAX_SYMMETRIC_DEGREE}")
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms] for p in perms]
    return from_cayley_table(table, [_cycle_label(p) for p in perms])


def direct_product(g: Group, h: Group) -> Group:
    """Pairs ordered lexicographically; ``(a, b)`` sits at ``a*h.order + b``."""
    s, t = g.order, h.order
    if s * t > MAX_ORDER:
        raise BoundExceeded(f"direct product of order {s * t} exceeds {MAX_ORDER}")
    table = [
        [g.table[a1][a2] * t + h.table[b1][b2] for a2 in range(s) for b2 in range(t)]
        for a1 in range(s)
        for b1 in range(t)
    ]
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    return from_cayley_table(table, labels)


def trivial_group() -> Group:
    return cyclic(1)


def klein_four() -> Group:
    return direct_product(cyclic(2), cyclic(2))
