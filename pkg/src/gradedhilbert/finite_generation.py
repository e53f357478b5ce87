"""Finite generation of the identity component.

A free graded algebra with Hilbert series P is finitely generated exactly
when 1/P is a polynomial; the generators are counted by ``1 - 1/P``.  The
verdict here always comes from that criterion.  The two structural results
(trivial gradings give finite generation, nontrivial ones with a nonzero
identity piece do not) are checked against it rather than used as shortcuts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .grading import DimVector, as_dims
from .groups import Group, element_order
from .hilbert import HilbertResult, hilbert_identity
from .poly import ONE, IntPoly, RatFun, eval_homogenized, eval_int, expand, reduce


class PreconditionViolated(ValueError):
    pass


class NegativeGeneratorCount(ArithmeticError):
    """A generator count came out negative; only an arithmetic bug can do this."""

    def __init__(self, degree: int, value: int):
        super().__init__(f"generator count {value} in degree {degree} is negative")
        self.degree = degree
        self.value = value


class Reason(str, enum.Enum):
    TRIVIAL_GRADING = "TrivialGrading"
    INVERSE_POLYNOMIAL = "InversePolynomial"
    INVERSE_NOT_POLYNOMIAL = "InverseNotPolynomial"


@dataclass(frozen=True)
class GradingClass:
    trivial: bool
    support: tuple[int, ...]


@dataclass(frozen=True)
class FgVerdict:
    finitely_generated: bool
    reason: Reason
    support: tuple[int, ...]
    trivial_support_order: int | None = None
    # nontrivial grading with no identity piece: neither structural result applies
    outside_paper_theorems: bool = False


@dataclass(frozen=True)
class GeneratorSeries:
    coeffs: tuple[int, ...]
    closed_form: RatFun = field(compare=False)

    @property
    def is_polynomial(self) -> bool:
        return self.closed_form.is_polynomial()


@dataclass(frozen=True)
class TwoBlockRoots:
    p_root: bool
    r_nonroot: bool


def classify_grading(dims: DimVector | Sequence[int]) -> GradingClass:
    support = tuple(i for i, x in enumerate(dims) if x > 0)
    return GradingClass(trivial=len(support) <= 1, support=support)


def trivial_grading_series(d: int, r: int) -> RatFun:
    """``1 / (1 - d^r t^r)``: the identity piece is spanned by words of length divisible by r."""
    if d < 0 or r < 1:
        raise ValueError("need d >= 0 and r >= 1")
    return reduce(ONE, IntPoly([1] + [0] * (r - 1) + [-(d**r)])).constant_term_normalized()


def generator_count_trivial(d: int, r: int) -> int:
    """Number of words of length r in d letters; they generate the identity piece."""
    if d < 0 or r < 1:
        raise ValueError("need d >= 0 and r >= 1")
    return d**r


def is_finitely_generated(res: HilbertResult) -> FgVerdict:
    series = res.series
    if series.num[0] != 1 or series.den[0] != 1:
        raise PreconditionViolated("series must be normalized to constant terms 1")
    inverse_is_polynomial = series.num == ONE
    cls = classify_grading(res.dims)
    if cls.trivial:
        if not inverse_is_polynomial:
            raise AssertionError(
                f"trivial grading but 1/P = {series.reciprocal()} is not a polynomial"
            )
        order = element_order(res.group, cls.support[0]) if cls.support else 1
        return FgVerdict(True, Reason.TRIVIAL_GRADING, cls.support, order)
    reason = Reason.INVERSE_POLYNOMIAL if inverse_is_polynomial else Reason.INVERSE_NOT_POLYNOMIAL
    return FgVerdict(
        finitely_generated=inverse_is_polynomial,
        reason=reason,
        support=cls.support,
        outside_paper_theorems=res.dims[0] == 0,
    )


def generator_series(res: HilbertResult, n_max: int) -> GeneratorSeries:
    """Count free generators of the identity piece by degree: ``g = 1 - 1/P``."""
    p = res.series
    if p.num[0] != 1 or p.den[0] != 1:
        raise PreconditionViolated("series must be normalized to constant terms 1")
    g = reduce(p.num - p.den, p.num).constant_term_normalized()
    coeffs = expand(g, n_max)
    for n, c in enumerate(coeffs):
        if c < 0:
            raise NegativeGeneratorCount(n, c)
    if coeffs[0] != 0:
        raise AssertionError("generator series has a constant term")
    return GeneratorSeries(tuple(coeffs), g)


def generator_total(gens: GeneratorSeries) -> int | None:
    """Total number of free generators, or None when there are infinitely many."""
    g = gens.closed_form
    if not g.is_polynomial():
        return None
    return eval_int(g.num, 1) // g.den.lc


def verify_nontrivial_theorem(g: Group, dims: DimVector | Sequence[int]) -> bool:
    """True when the criterion reports 'not finitely generated', as it must for
    a nontrivial grading with a nonzero identity piece."""
    dims = as_dims(g, dims)
    if dims[0] == 0 or classify_grading(dims).trivial:
        raise PreconditionViolated("needs dims[e] > 0 and a nontrivial grading")
    return not is_finitely_generated(hilbert_identity(g, dims)).finitely_generated


def two_block_restriction(dims: DimVector | Sequence[int], x: int) -> DimVector:
    """Keep only the identity piece and the x piece."""
    return DimVector(tuple(v if i in (0, x) else 0 for i, v in enumerate(dims)))


def verify_two_block_roots(g: Group, dims: DimVector | Sequence[int]) -> TwoBlockRoots:
    """Evaluate p and r at ``1/d_e`` for a grading supported on ``{e, x}``."""
    dims = as_dims(g, dims)
    support = dims.support
    if len(support) != 2 or support[0] != 0:
        raise PreconditionViolated(
            f"support must be exactly {{e, x}} with x != e, got indices {support}"
        )
    res = hilbert_identity(g, dims)
    de = dims[0]
    return TwoBlockRoots(
        p_root=eval_homogenized(res.p_raw, de) == 0,
        r_nonroot=eval_homogenized(res.r_raw, de) != 0,
    )
