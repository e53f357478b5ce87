"""Ground truth for graded dimensions, straight from the degree recursion.

``a[n][x]`` is the dimension of the x-graded part of the n-th tensor power
of V.  It obeys ``a[n][x] = sum_y d[x y^-1] a[n-1][y]`` with
``a[0][x] = 1 if x is the identity else 0``.  Nothing in this module touches
the determinant machinery, so agreement with it is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grading import DimVector, as_dims
from .groups import Group
from .poly import expand


@dataclass(frozen=True)
class ComponentTable:
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def column(self, x: int) -> list[int]:
        return [row[x] for row in self.rows]


def tensor_dimensions(g: Group, dims: DimVector | Sequence[int], n_max: int) -> ComponentTable:
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    dims = as_dims(g, dims)
    s = g.order
    # weights[x][y] = d_{x y^-1}
    weights = [[dims[g.table[x][g.inverse[y]]] for y in range(s)] for x in range(s)]
    prev = [1] + [0] * (s - 1)
    rows = [tuple(prev)]
    for _ in range(n_max):
        live = [(y, a) for y, a in enumerate(prev) if a]
        prev = [sum(w[y] * a for y, a in live) for w in weights]
        rows.append(tuple(prev))
    return ComponentTable(n_max=n_max, rows=tuple(rows))


@dataclass(frozen=True)
class CrossCheck:
    """Outcome of comparing a series against an oracle column.

    Truthy when they agree; otherwise ``first_mismatch`` is the lowest
    degree where they differ.
    """

    ok: bool
    first_mismatch: int | None = None
    expected: int | None = None
    got: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def compare_prefix(series: Sequence[int], column: Sequence[int]) -> CrossCheck:
    for n, (got, want) in enumerate(zip(series, column)):
        if got != want:
            return CrossCheck(False, n, want, got)
    if len(series) != len(column):
        n = min(len(series), len(column))
        return CrossCheck(False, n)
    return CrossCheck(True)


def cross_check(res, table: ComponentTable) -> CrossCheck:
    """Expand ``res.series`` to ``table.n_max`` and compare with the identity column."""
    return compare_prefix(expand(res.series, table.n_max), table.column(0))
