"""Rational points on E(h, d) whose coordinate ratios approach a target real.

Two mechanisms:

* powers of a fixed rational point: y_n/x_n tends to a quadratic irrational
  given in closed form by the dominant root of t^2 - (2x+hy)t + 1;
* convergents p/q of an auxiliary irrational α with g(α)/f(α) = β, mapped
  through the parametrization, approach any β. On the unit circle this gives
  Pythagorean triples.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cf import CFExpansion, cf_expand
from .errors import (
    DegenerateLimitError,
    NoConvergenceError,
    NoRealSolutionError,
    NotIrrationalError,
    ParametrizationPole,
)
from .field import ConicParams, FieldSpec
from .group import ConicPoint, eps
from .quadratic import QuadraticIrrational, sqrt_rational
from .reals import RealNumber, exact_or_real, real_sqrt

Exact = Union[Fraction, QuadraticIrrational]


# -- limits of ratios of linear recurrences ------------------------------


@dataclass(frozen=True)
class RecurrenceLimitSpec:
    """a = W(a0, a1, 2w, w^2 - c) and b = W(b0, b1, 2w, w^2 - c); roots w +- sqrt(c)."""

    a0: Fraction
    a1: Fraction
    b0: Fraction
    b1: Fraction
    w: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a0", "a1", "b0", "b1", "w", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def sequences(self, count: int) -> tuple[list[Fraction], list[Fraction]]:
        r, k = 2 * self.w, self.w * self.w - self.c
        out = []
        for s0, s1 in ((self.a0, self.a1), (self.b0, self.b1)):
            seq = [s0, s1]
            while len(seq) < count:
                seq.append(r * seq[-1] - k * seq[-2])
            out.append(seq[:count])
        return out[0], out[1]


def recurrence_ratio_limit(s: RecurrenceLimitSpec) -> Exact:
    """lim a_n / b_n in closed form.

    The dominant root is w + sqrt(c) when w > 0 and w - sqrt(c) when w < 0.
    """
    if s.c <= 0:
        raise NoConvergenceError(f"c = {s.c} <= 0: no real dominant root")
    if s.w == 0:
        raise NoConvergenceError("w = 0: both roots have modulus sqrt(c), the ratio oscillates")
    root = sqrt_rational(s.c)
    if s.w < 0:
        root = -root
    num = s.a1 - s.a0 * s.w + s.a0 * root
    den = s.b1 - s.b0 * s.w + s.b0 * root
    if den == 0:
        raise DegenerateLimitError("dominant Binet coefficient of the b-sequence vanishes")
    return num / den


def point_limit_spec(p: ConicPoint) -> RecurrenceLimitSpec:
    """Limit data for y_n = W(0, y, 2x+hy, 1) over x_n = W(1, x, 2x+hy, 1)."""
    h = Fraction(p.params.h)
    x, y = Fraction(p.x), Fraction(p.y)
    w = (2 * x + h * y) / 2
    return RecurrenceLimitSpec(0, y, 1, x, w, w * w - 1)


def point_ratio_limit(p: ConicPoint) -> Exact:
    """lim y_n / x_n for the powers of a rational point; needs |2x + hy| > 2."""
    if p.params.field.kind != "rational":
        raise TypeError("point_ratio_limit needs a rational point")
    trace = 2 * p.x + p.params.h * p.y
    if abs(trace) <= 2:
        raise NoConvergenceError(
            f"|2x+hy| = {abs(trace)} <= 2: the powers rotate and y_n/x_n does not converge"
        )
    return recurrence_ratio_limit(point_limit_spec(p))


# -- auxiliary irrational --------------------------------------------------


@dataclass(frozen=True)
class AuxiliaryRoots:
    """Both solutions α of (2α + h)/(α^2 + d) = β; flags are None when undecided."""

    plus: RealNumber
    minus: RealNumber
    plus_irrational: bool | None
    minus_irrational: bool | None

    def root(self, which: str = "+") -> RealNumber:
        return self.plus if which == "+" else self.minus

    def irrational(self, which: str = "+") -> bool | None:
        return self.plus_irrational if which == "+" else self.minus_irrational


def solve_auxiliary(params: ConicParams, beta, digits: int = 60) -> AuxiliaryRoots:
    """Solve β α^2 - 2α + (βd - h) = 0, i.e. α = (1 ± sqrt(1 + βh - β^2 d)) / β."""
    if params.field.kind != "rational":
        raise TypeError("the conic must have rational h, d")
    beta = exact_or_real(beta)
    if beta.sign(digits) == 0:
        raise ValueError("beta must be nonzero")
    h, d = params.h, params.d
    disc = RealNumber.of(1)
    for coef, term in ((h, beta), (-d, beta ** 2)):
        if coef == 1:
            disc = disc + term
        elif coef == -1:
            disc = disc - term
        elif coef != 0:
            disc = disc + coef * term
    if disc.sign(digits) < 0:
        raise NoRealSolutionError(f"1 + βh - β²d < 0 for β = {beta}")
    root = real_sqrt(disc)
    plus = (1 + root) / beta
    minus = (1 - root) / beta
    flags = []
    for a in (plus, minus):
        flag = a.irrational
        if flag is None and beta.irrational:
            # rational α would make β = (2α+h)/(α²+d) rational
            flag = True
        flags.append(flag)
    if flags[0] is False and flags[1] is False:
        raise NotIrrationalError(
            f"both auxiliary roots {plus.exact} and {minus.exact} are rational"
        )
    return AuxiliaryRoots(plus, minus, flags[0], flags[1])


# -- approximation tables ------------------------------------------------


@dataclass(frozen=True)
class ApproxStep:
    n: int
    p: int
    q: int
    x: Fraction | None
    y: Fraction | None
    ratio: Fraction | None
    abs_error: object | None  # mpf at the working precision
    flag: str | None = None

    @property
    def ok(self) -> bool:
        return self.flag is None


@dataclass(frozen=True)
class PythagoreanStep:
    n: int
    p: int
    q: int
    triple: tuple[int, int, int] | None
    ratio: Fraction | None
    abs_error: object | None
    flag: str | None = None

    @property
    def ok(self) -> bool:
        return self.flag is None


class ApproxTable(list):
    """A list of steps plus the expansion that produced them."""

    def __init__(self, steps, alpha: RealNumber, expansion: CFExpansion, beta: RealNumber, spec: FieldSpec):
        super().__init__(steps)
        self.alpha = alpha
        self.expansion = expansion
        self.beta = beta
        self.spec = spec

    @property
    def exhausted(self) -> bool:
        return self.expansion.exhausted

    @property
    def valid(self) -> list:
        return [s for s in self if s.ok]


def _auxiliary_expansion(params, beta, steps, spec, root, slack=8):
    aux = solve_auxiliary(params, beta, spec.digits)
    if aux.irrational(root) is False:
        raise NotIrrationalError(f"auxiliary root {aux.root(root)} is rational; the method needs an irrational")
    alpha = aux.root(root)
    expansion = cf_expand(alpha, steps + slack, spec)
    return alpha, expansion


def _abs_error(ratio: Fraction, beta: RealNumber, spec: FieldSpec):
    ctx = spec.ctx
    return abs(ctx.mpf(ratio.numerator) / ratio.denominator - beta.to_mpf(ctx))


def approx_over_conic(params: ConicParams, beta, steps: int, spec: FieldSpec | None = None,
                      root: str = "+") -> ApproxTable:
    """Map the convergents of the auxiliary α to points of E(h, d).

    Returns up to ``steps`` unflagged rows; convergents hitting a pole of the
    parametrization or of y/x are kept as flagged rows. A short table means
    the working precision ran out (``table.exhausted``).
    """
    spec = spec or FieldSpec.real(60)
    beta = exact_or_real(beta)
    alpha, expansion = _auxiliary_expansion(params, beta, steps, spec, root)
    rows, good = [], 0
    for n, (p, q) in enumerate(expansion.convergents):
        if good == steps:
            break
        m = Fraction(p, q)
        try:
            pt = eps(m, params)
        except ParametrizationPole:
            rows.append(ApproxStep(n, p, q, None, None, None, None, "parametrization pole"))
            continue
        if pt.x == 0:
            rows.append(ApproxStep(n, p, q, pt.x, pt.y, None, None, "ratio pole (x = 0)"))
            continue
        ratio = pt.y / pt.x
        rows.append(ApproxStep(n, p, q, pt.x, pt.y, ratio, _abs_error(ratio, beta, spec)))
        good += 1
    return ApproxTable(rows, alpha, expansion, beta, spec)


def primitive_triple(p: int, q: int) -> tuple[int, int, int]:
    """(|p²-q²|, 2pq, p²+q²) divided by its gcd (which is 1 or 2 for coprime p, q)."""
    A, B, C = abs(p * p - q * q), 2 * p * q, p * p + q * q
    g = math.gcd(math.gcd(A, B), C)
    A, B, C = A // g, B // g, C // g
    if A * A + B * B != C * C:
        raise AssertionError(f"({A}, {B}, {C}) is not Pythagorean")
    return A, B, C


def pythagorean_stream(beta, steps: int, spec: FieldSpec | None = None, root: str = "+") -> ApproxTable:
    """Primitive Pythagorean triples whose leg ratio 2pq/(p²-q²) approaches β."""
    spec = spec or FieldSpec.real(60)
    beta = exact_or_real(beta)
    circle = ConicParams(0, -1)
    alpha, expansion = _auxiliary_expansion(circle, beta, steps, spec, root)
    rows, good = [], 0
    for n, (p, q) in enumerate(expansion.convergents):
        if good == steps:
            break
        if abs(p) == abs(q):
            rows.append(PythagoreanStep(n, p, q, None, None, None, "ratio pole (p = q)"))
            continue
        ratio = Fraction(2 * p * q, p * p - q * q)
        rows.append(PythagoreanStep(n, p, q, primitive_triple(p, q), ratio,
                                    _abs_error(ratio, beta, spec)))
        good += 1
    return ApproxTable(rows, alpha, expansion, beta, spec)
