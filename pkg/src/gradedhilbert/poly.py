"""Exact univariate integer polynomials and rational functions in ``t``.

Everything here stays in arbitrary-precision integers.  Determinants of
polynomial matrices go through integer evaluation, fraction-free (Bareiss)
elimination and exact interpolation.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce as _fold
from typing import Iterable, Sequence

try:
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover - gmpy2 ships with the environment
    _big = int


class InterpolationNotIntegral(ArithmeticError):
    """Interpolated determinant failed to have integer coefficients."""


class NotExpandable(ArithmeticError):
    """The rational function has no integral power series at 0."""


class InexactDivision(ArithmeticError):
    """Polynomial division over the integers left a remainder."""


class IntPoly:
    """Polynomial with integer coefficients, lowest degree first.

    Immutable; trailing zeros are stripped so the zero polynomial has no
    coefficients at all.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    def __reduce__(self):
        return (IntPoly, (self.coeffs,))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls([c])

    @classmethod
    def monomial(cls, c: int, n: int) -> IntPoly:
        return cls([0] * n + [c])

    @classmethod
    def from_json(cls, data: Sequence[str | int]) -> IntPoly:
        return cls(int(x) for x in data)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> IntPoly:
        """Content 1 and positive leading coefficient (zero stays zero)."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly(x // c for x in self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> IntPoly:
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        return sub(self, _coerce(other))

    def __rsub__(self, other) -> IntPoly:
        return sub(_coerce(other), self)

    def __mul__(self, other) -> IntPoly:
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __pow__(self, n: int) -> IntPoly:
        out = IntPoly([1])
        base = self
        while n:
            if n & 1:
                out = mul(out, base)
            base = mul(base, base)
            n >>= 1
        return out

    def __call__(self, v: int) -> int:
        return eval_int(self, v)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly([x])
    return NotImplemented


T = IntPoly([0, 1])
ZERO = IntPoly()
ONE = IntPoly([1])


def format_poly(p: IntPoly, var: str = "t") -> str:
    """Ascending powers with explicit signs, e.g. ``1 - 2*t + 3*t^2``."""
    terms = []
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if n == 0:
            body = str(mag)
        else:
            power = var if n == 1 else f"{var}^{n}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def add(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(a[i] + b[i] for i in range(n))


def sub(a: IntPoly, b: IntPoly) -> IntPoly:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPoly(a[i] - b[i] for i in range(n))


def mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [0] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                out[i + j] += x * y
    return IntPoly(out)


def scale(a: IntPoly, c: int) -> IntPoly:
    return IntPoly(c * x for x in a.coeffs)


def eval_int(a: IntPoly, v: int) -> int:
    acc = 0
    for c in reversed(a.coeffs):
        acc = acc * v + c
    return acc


def eval_homogenized(a: IntPoly, den: int, degree: int | None = None) -> int:
    """``den**degree * a(1/den)``, computed in integers.

    ``degree`` defaults to ``a.degree`` and must not be smaller.
    """
    if degree is None:
        degree = max(a.degree, 0)
    if degree < a.degree:
        raise ValueError("degree must be at least deg(a)")
    return sum(c * den ** (degree - n) for n, c in enumerate(a.coeffs))


def divmod_exact(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division over the integers; raises if a quotient coefficient is fractional."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.lc
    if a.degree < db:
        return ZERO, a
    quot = [0] * (a.degree - db + 1)
    for k in range(a.degree - db, -1, -1):
        c = rem[k + db]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            raise InexactDivision(f"leading coefficient {lb} does not divide {c}")
        quot[k] = q
        for i, y in enumerate(b.coeffs):
            rem[k + i] -= q * y
    return IntPoly(quot), IntPoly(rem)


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = divmod_exact(a, b)
    if not r.is_zero():
        raise InexactDivision(f"{b} does not divide {a}")
    return q


def divides(b: IntPoly, a: IntPoly) -> bool:
    try:
        exact_div(a, b)
    except InexactDivision:
        return False
    return True


def pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    """Remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    rem = list(a.coeffs)
    db, lb = b.degree, b.lc
    delta = a.degree - db
    if delta < 0:
        return a
    for k in range(delta, -1, -1):
        c = rem[k + db]
        rem = [x * lb for x in rem]
        for i, y in enumerate(b.coeffs):
            rem[k + i] -= c * y
    return IntPoly(rem[:db])


def gcd_primitive(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient.

    Runs the subresultant pseudo-remainder sequence on the primitive parts;
    the last nonzero remainder is proportional to the gcd.
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    if b.is_zero():
        return a.primitive()
    if a.is_zero():
        return b.primitive()
    f, g = a.primitive(), b.primitive()
    if f.degree < g.degree:
        f, g = g, f
    if g.degree == 0:
        return ONE
    # subresultant PRS: every division by beta below is exact
    delta = f.degree - g.degree
    r = pseudo_rem(f, g)
    if delta % 2 == 0:
        r = -r
    lc = g.lc
    c = -(lc**delta)
    while not r.is_zero():
        if r.degree == 0:
            return ONE
        f, g = g, r
        delta = f.degree - g.degree
        beta = -lc * c**delta
        r = IntPoly(x // beta for x in pseudo_rem(f, g).coeffs)
        lc = g.lc
        if delta > 1:
            c = (-lc) ** delta // c ** (delta - 1)
        else:
            c = -lc
    return g.primitive()


def poly_gcd_content(*polys: IntPoly) -> int:
    return _fold(math.gcd, (p.content() for p in polys), 0)


# --- determinants -----------------------------------------------------------


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [[_big(x) for x in row] for row in m]
    if any(len(row) != n for row in a):
        raise ValueError("det_int needs a square matrix")
    sign = 1
    prev = _big(1)
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot_row = a[k]
        akk = pivot_row[k]
        tail = pivot_row[k + 1 :]
        pad = [0] * (k + 1)
        for i in range(k + 1, n):
            row = a[i]
            aik = row[k]
            # every quotient below is exact (Sylvester's identity)
            if aik:
                a[i] = pad + [(x * akk - aik * y) // prev for x, y in zip(row[k + 1 :], tail)]
            elif akk != prev:
                a[i] = pad + [x * akk // prev for x in row[k + 1 :]]
        prev = akk
    return sign * int(a[n - 1][n - 1])


def _det_at(args) -> int:
    m, v = args
    return det_int([[eval_int(e, v) for e in row] for row in m])


def _newton_to_monomial(values: list[int]) -> IntPoly:
    # values[k] = f(k) for k = 0..N.  Forward differences give f in the
    # falling-factorial basis: f(t) = sum_k (D^k f(0) / k!) * t(t-1)...(t-k+1).
    diffs = list(values)
    newton = []
    fact = 1
    for k in range(len(values)):
        if k:
            fact *= k
        q, r = divmod(diffs[0], fact)
        if r:
            raise InterpolationNotIntegral(
                f"forward difference of order {k} is not divisible by {k}!"
            )
        newton.append(q)
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
    # nested form b0 + t(b1 + (t-1)(b2 + (t-2)(...)))
    acc = IntPoly([newton[-1]]) if newton else ZERO
    for k in range(len(newton) - 2, -1, -1):
        acc = add(mul(acc, IntPoly([-k, 1])), IntPoly([newton[k]]))
    return acc


def det_poly(
    m: Sequence[Sequence[IntPoly]],
    degree_bound: int | None = None,
    workers: int | None = None,
) -> IntPoly:
    """Determinant of a square matrix of integer polynomials.

    The matrix is evaluated at ``t = 0, 1, ..., degree_bound``, each integer
    determinant is taken with :func:`det_int`, and the values are
    interpolated exactly.  ``degree_bound`` must bound the degree of the
    determinant; it defaults to the sum over rows of the largest entry
    degree.  With ``workers > 1`` the evaluation points run in a process
    pool; the result does not depend on scheduling.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det_poly needs a square matrix")
    if n == 0:
        return ONE
    natural = sum(max((e.degree for e in row), default=-1) for row in m)
    if degree_bound is None:
        degree_bound = max(natural, 0)
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    points = range(degree_bound + 1)
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(_det_at, [(m, v) for v in points]))
    else:
        values = [_det_at((m, v)) for v in points]
    return _newton_to_monomial(values)


# --- rational functions -----------------------------------------------------


@dataclass(frozen=True, eq=False)
class RatFun:
    """Quotient ``num / den`` of integer polynomials.

    Values built by :func:`reduce` are in lowest terms with a primitive
    denominator of positive leading coefficient.  Equality compares the
    rational functions themselves, so differently normalized
    representatives of the same function compare equal.
    """

    num: IntPoly
    den: IntPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            other = RatFun(other, ONE)
        if not isinstance(other, RatFun):
            return NotImplemented
        return mul(self.num, other.den) == mul(other.num, self.den)

    def __hash__(self) -> int:
        r = reduce(self.num, self.den)
        return hash((r.num, r.den))

    def same_form(self, other: RatFun) -> bool:
        """Coefficient-for-coefficient identical representatives."""
        return self.num == other.num and self.den == other.den

    def __add__(self, other: RatFun) -> RatFun:
        return reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFun) -> RatFun:
        return reduce(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other: RatFun) -> RatFun:
        return reduce(self.num * other.num, self.den * other.den)

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def reciprocal(self) -> RatFun:
        if self.num.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return reduce(self.den, self.num)

    def is_polynomial(self) -> bool:
        return self.den.is_constant() and self.num.content() % self.den.lc == 0

    def constant_term_normalized(self) -> RatFun:
        """Same function with the sign flipped so that ``den(0) > 0``."""
        if self.den[0] < 0:
            return RatFun(-self.num, -self.den)
        return self

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> RatFun:
        return cls(IntPoly.from_json(data["num"]), IntPoly.from_json(data["den"]))

    def __str__(self) -> str:
        if self.den == ONE:
            return format_poly(self.num)
        return f"({format_poly(self.num)}) / ({format_poly(self.den)})"


def reduce(num: IntPoly, den: IntPoly) -> RatFun:
    """Lowest terms: strip the polynomial gcd and the common integer content,
    then make the denominator's leading coefficient positive."""
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return RatFun(ZERO, ONE)
    g = gcd_primitive(num, den)
    if g.degree > 0:
        num, den = exact_div(num, g), exact_div(den, g)
    c = poly_gcd_content(num, den)
    if den.lc < 0:
        c = -c
    return RatFun(IntPoly(x // c for x in num.coeffs), IntPoly(x // c for x in den.coeffs))


def expand(f: RatFun, n_max: int) -> list[int]:
    """Maclaurin coefficients of ``f`` through ``t^n_max`` by long division."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    d0 = f.den[0]
    if d0 == 0:
        raise NotExpandable("denominator vanishes at t = 0")
    den = f.den.coeffs
    out: list[int] = []
    for n in range(n_max + 1):
        acc = f.num[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        q, r = divmod(acc, d0)
        if r:
            raise NotExpandable(f"coefficient of t^{n} is not an integer")
        out.append(q)
    return out


def truncate(p: IntPoly, n_max: int) -> IntPoly:
    return IntPoly(p.coeffs[: n_max + 1])
