"""Rational reconstruction of a series from its prefix (Berlekamp-Massey over Q).

Test-only helper: it turns the oracle's coefficient sequences into closed
forms without going through any determinant.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from gradedhilbert.poly import IntPoly, RatFun, reduce


def berlekamp_massey(seq: list[int]) -> list[Fraction]:
    """Shortest connection polynomial C (C[0] = 1) annihilating ``seq``."""
    c, b = [Fraction(1)], [Fraction(1)]
    length, shift, last = 0, 1, Fraction(1)
    for n, _ in enumerate(seq):
        disc = sum((c[i] * seq[n - i] for i in range(len(c)) if i <= n), Fraction(0))
        if disc == 0:
            shift += 1
            continue
        coef = disc / last
        new = c + [Fraction(0)] * max(0, len(b) + shift - len(c))
        for i, v in enumerate(b):
            new[i + shift] -= coef * v
        if 2 * length <= n:
            b, length, last, shift = c, n + 1 - length, disc, 1
        else:
            shift += 1
        c = new
    return c[: length + 1]


def _clear(fracs: list[Fraction]) -> IntPoly:
    m = lcm(*(f.denominator for f in fracs)) if fracs else 1
    return IntPoly(int(f * m) for f in fracs)


def reconstruct(seq: list[int]) -> RatFun:
    c = berlekamp_massey(seq)
    length = len(c) - 1
    prod = [sum((c[i] * seq[n - i] for i in range(len(c)) if i <= n), Fraction(0)) for n in range(max(length, 1))]
    return reduce(_clear(prod), _clear(c)).constant_term_normalized()
