"""Coordinates of point powers through the sequences F_n, G_n and their τ-images q_n.

For a point (x, y) the powers satisfy x_n = W(1, x, 2x+hy, 1) and
y_n = W(0, y, 2x+hy, 1). Their parameters are expressed through Rédei pairs
evaluated at (hy, x^2+hxy-1, x), which removes d from the formula.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateDenominator
from .field import FieldValue
from .group import ALPHA, ConicPoint, ParamValue, e_pow, p_eq, tau
from .redei import RecurrenceSpec, mat_pow, nd_pair, redei_Q


@dataclass(frozen=True)
class PointPowerPair:
    n: int
    F: FieldValue
    G: FieldValue
    base: ConicPoint

    def point(self) -> ConicPoint:
        return ConicPoint(self.F, self.G, self.base.params)


def fg_recurrences(p: ConicPoint) -> tuple[RecurrenceSpec, RecurrenceSpec]:
    f = p.params.field
    r = 2 * p.x + p.params.h * p.y
    return RecurrenceSpec(f.one, p.x, r, f.one), RecurrenceSpec(f.zero, p.y, r, f.one)


def fg_pair(p: ConicPoint, n: int, strategy: str = "matrix", verify: bool = False) -> PointPowerPair:
    """(F_n, G_n), the coordinates of p^n.

    ``strategy="matrix"`` powers the companion matrix of t^2 - (2x+hy)t + 1 in
    O(log n) products; ``"recurrence"`` unrolls the sequences term by term.
    ``verify`` cross-checks the result against :func:`e_pow`.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    f = p.params.field
    if strategy == "recurrence":
        xs, ys = fg_recurrences(p)
        F, G = xs.term(n), ys.term(n)
    elif strategy == "matrix":
        r = 2 * p.x + p.params.h * p.y
        # [[t_{n+1}], [t_n]] = C^n [[t_1], [t_0]] with C = [[r, -1], [1, 0]]
        c = mat_pow(((r, -f.one), (f.one, f.zero)), n, f.one, f.zero)
        F = c[1][0] * p.x + c[1][1]
        G = c[1][0] * p.y
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    pair = PointPowerPair(n, F, G, p)
    if verify:
        q = e_pow(p, n)
        if not (f.eq(q.x, F) and f.eq(q.y, G)):
            raise AssertionError(f"fg_pair disagrees with e_pow at n={n}")
    return pair


def elimination_context(p: ConicPoint):
    """The Rédei context (hy, x^2+hxy-1, x) whose step matrix has determinant 1."""
    x, y, h = p.x, p.y, p.params.h
    return h * y, x * x + h * x * y - 1, x


def q_param(p: ConicPoint, n: int) -> ParamValue:
    """q_n = (1 + N_n) / (y D_n) with N, D taken at the elimination context; equals τ(p^n)."""
    f = p.params.field
    if f.is_zero(p.y):
        raise DegenerateDenominator("q_n needs y != 0; use tau on the base point directly")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ALPHA
    pair = nd_pair(*elimination_context(p), n)
    if f.is_zero(pair.D):
        # p^n = (N_n, 0) is one of (+-1, 0)
        return ALPHA if f.eq(pair.N, 1) else -p.params.h / 2
    return (1 + pair.N) / (p.y * pair.D)


def q_param_redei(p: ConicPoint, n: int) -> ParamValue:
    """The same parameter through Q_n(h, d, (1+x)/y), with d as given by the conic."""
    f = p.params.field
    if f.is_zero(p.y):
        raise DegenerateDenominator("q_n needs y != 0")
    h, d = p.params.h, p.params.d
    return redei_Q(h, d, (1 + p.x) / p.y, n)


def q_param_tau(p: ConicPoint, n: int) -> ParamValue:
    return tau(e_pow(p, n))


def q_halving_check(p: ConicPoint, n: int) -> bool:
    """Whether q_{2n} = F_n / G_n; always true on valid input."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pair = fg_pair(p, n)
    f = p.params.field
    if f.is_zero(pair.G):
        raise DegenerateDenominator(f"G_{n} vanishes")
    return p_eq(q_param(p, 2 * n), pair.F / pair.G, p.params)
