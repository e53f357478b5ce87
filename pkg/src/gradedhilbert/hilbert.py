"""Hilbert series of the identity component via Cramer's rule.

The generating functions ``F_x(t)`` of the graded pieces satisfy the linear
system ``sum_y (d[x y^-1] t - delta_xy) F_y = -delta_xe``.  Its matrix is
stored in homogeneous form; the right-hand side is ``(-1, 0, ..., 0)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grading import DimVector, LengthMismatch, as_dims
from .groups import Group
from .poly import (
    ONE,
    ZERO,
    IntPoly,
    RatFun,
    det_poly,
    eval_homogenized,
    exact_div,
    reduce,
)

__all__ = [
    "DimVector",
    "LengthMismatch",
    "SystemMatrix",
    "HilbertResult",
    "StructureReport",
    "build_system_matrix",
    "hilbert_identity",
    "hilbert_component",
    "hilbert_components",
    "hilbert_component_sum",
    "verify_structure",
]


@dataclass(frozen=True)
class SystemMatrix:
    m: tuple[tuple[IntPoly, ...], ...]
    group: Group
    dims: DimVector

    def with_rhs_column(self, x: int) -> list[list[IntPoly]]:
        """Copy of the matrix with column ``x`` replaced by ``(-1, 0, ..., 0)``."""
        out = [list(row) for row in self.m]
        for i, row in enumerate(out):
            row[x] = IntPoly([-1]) if i == 0 else ZERO
        return out


@dataclass(frozen=True)
class HilbertResult:
    """Cramer output plus the normalized series.

    ``series`` has ``num(0) = den(0) = 1``.  ``q`` is the sign-normalized
    ``r_raw`` divided by ``1 - d t``.
    """

    p_raw: IntPoly
    r_raw: IntPoly
    series: RatFun
    q: IntPoly
    d: int
    s: int
    group: Group
    dims: DimVector

    @property
    def p_normalized(self) -> IntPoly:
        return self.p_raw * (-1) ** self.s

    @property
    def r_normalized(self) -> IntPoly:
        return self.r_raw * (-1) ** self.s


@dataclass(frozen=True)
class StructureReport:
    r_vanishes_at_inverse_d: bool
    p_degree_ok: bool
    q_degree_ok: bool
    constant_terms_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.r_vanishes_at_inverse_d
            and self.p_degree_ok
            and self.q_degree_ok
            and self.constant_terms_ok
        )

    def as_dict(self) -> dict[str, bool]:
        return {
            "r_vanishes_at_inverse_d": self.r_vanishes_at_inverse_d,
            "p_degree_ok": self.p_degree_ok,
            "q_degree_ok": self.q_degree_ok,
            "constant_terms_ok": self.constant_terms_ok,
            "passed": self.passed,
        }


def build_system_matrix(g: Group, dims: DimVector | Sequence[int]) -> SystemMatrix:
    dims = as_dims(g, dims)
    s = g.order
    rows = []
    for i in range(s):
        row = []
        for j in range(s):
            k = g.table[i][g.inverse[j]]
            row.append(IntPoly([-1 if i == j else 0, dims[k]]))
        rows.append(tuple(row))
    return SystemMatrix(m=tuple(rows), group=g, dims=dims)


def _normalize_series(p_raw: IntPoly, r_raw: IntPoly) -> RatFun:
    f = reduce(p_raw, r_raw).constant_term_normalized()
    if f.den[0] != 1 or f.num[0] != 1:
        raise AssertionError(f"series {f} does not have constant terms 1")
    return f


def _one_minus_dt(d: int) -> IntPoly:
    return IntPoly([1, -d])


def hilbert_identity(
    g: Group, dims: DimVector | Sequence[int], workers: int | None = None
) -> HilbertResult:
    """Hilbert series of the identity component as ``p_raw / r_raw``."""
    dims = as_dims(g, dims)
    s, d = g.order, dims.total
    sign = (-1) ** s
    if d == 0:
        # the matrix is -I
        p_raw = r_raw = IntPoly([sign])
    elif s == 1:
        p_raw, r_raw = IntPoly([-1]), IntPoly([-1, d])
    else:
        system = build_system_matrix(g, dims)
        r_raw = det_poly(system.m, s, workers=workers)
        p_raw = det_poly(system.with_rhs_column(0), s, workers=workers)
    series = _normalize_series(p_raw, r_raw)
    try:
        q = exact_div(r_raw * sign, _one_minus_dt(d))
    except ArithmeticError as exc:
        raise AssertionError(f"1 - {d}t does not divide r(t) = {r_raw}") from exc
    return HilbertResult(
        p_raw=p_raw, r_raw=r_raw, series=series, q=q, d=d, s=s, group=g, dims=dims
    )


def _component_from(system: SystemMatrix, r_raw: IntPoly, x: int) -> RatFun:
    num = det_poly(system.with_rhs_column(x), system.group.order)
    return reduce(num, r_raw).constant_term_normalized()


def hilbert_component(g: Group, dims: DimVector | Sequence[int], x: int) -> RatFun:
    """Generating function of the x-graded part of T(V), reduced."""
    dims = as_dims(g, dims)
    if not 0 <= x < g.order:
        raise IndexError(f"element index {x} out of range for order {g.order}")
    if x == 0:
        return hilbert_identity(g, dims).series
    if dims.total == 0:
        return RatFun(ZERO, ONE)
    system = build_system_matrix(g, dims)
    r_raw = det_poly(system.m, g.order)
    return _component_from(system, r_raw, x)


def hilbert_components(g: Group, dims: DimVector | Sequence[int]) -> list[RatFun]:
    """All ``F_x`` at once, sharing the denominator determinant."""
    dims = as_dims(g, dims)
    if dims.total == 0:
        return [RatFun(ONE, ONE)] + [RatFun(ZERO, ONE)] * (g.order - 1)
    if g.order == 1:
        return [hilbert_identity(g, dims).series]
    system = build_system_matrix(g, dims)
    r_raw = det_poly(system.m, g.order)
    return [_component_from(system, r_raw, x) for x in range(g.order)]


def verify_structure(res: HilbertResult) -> StructureReport:
    """Check the shape guarantees on a result with ``d > 0``."""
    if res.d <= 0:
        raise ValueError("structure checks need d > 0")
    s, d = res.s, res.d
    sign = (-1) ** s
    # d^s * r(1/d) == 0  <=>  1/d is a root of r
    root = res.r_raw.degree <= s and eval_homogenized(res.r_raw, d, s) == 0
    return StructureReport(
        r_vanishes_at_inverse_d=root,
        p_degree_ok=res.p_raw.degree <= s - 1,
        q_degree_ok=res.q.degree <= s - 1,
        constant_terms_ok=res.p_raw[0] == sign and res.r_raw[0] == sign,
    )


def hilbert_component_sum(g: Group, dims: DimVector | Sequence[int]) -> RatFun:
    """``sum_x F_x`` from a single extra determinant.

    With ``b`` the right-hand side and ``u`` the all-ones vector,
    ``sum_x det(M with column x replaced by b) = det(M) - det(M - b u^T)``
    (matrix determinant lemma).  Since ``b = -e_0``, ``M - b u^T`` is ``M``
    with 1 added to every entry of row 0.
    """
    dims = as_dims(g, dims)
    if dims.total == 0:
        return RatFun(ONE, ONE)
    system = build_system_matrix(g, dims)
    s = g.order
    r_raw = det_poly(system.m, s)
    shifted = [list(row) for row in system.m]
    shifted[0] = [e + 1 for e in shifted[0]]
    return reduce(r_raw - det_poly(shifted, s), r_raw).constant_term_normalized()
