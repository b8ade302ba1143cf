"""Generalized Rédei rational functions Q_n(h, d, z) = N_n / D_n.

N_n, D_n are read off the n-th power of the step matrix

    M = [[z + h, d],
         [1,     z]],      M^n = [[N_n + h D_n, d D_n],
                                  [D_n,         N_n ]]

Three interchangeable strategies compute them: binary matrix powering
(default), unrolling the linear recurrences, and folding the addition law.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import DegenerateDenominator, ParameterMismatch
from .field import FieldSpec, FieldValue, field_of
from .group import ALPHA, ParamValue

STRATEGIES = ("matrix", "recurrence", "naive")


@dataclass(frozen=True)
class RecurrenceSpec:
    """W(a0, a1, r, k): terms with t_n = r t_{n-1} - k t_{n-2}, char. poly t^2 - r t + k."""

    a0: FieldValue
    a1: FieldValue
    r: FieldValue
    k: FieldValue

    def __iter__(self) -> Iterator[FieldValue]:
        prev, cur = self.a0, self.a1
        yield prev
        while True:
            yield cur
            prev, cur = cur, self.r * cur - self.k * prev

    def term(self, n: int) -> FieldValue:
        for i, t in enumerate(self):
            if i == n:
                return t

    def terms(self, count: int) -> list[FieldValue]:
        out = []
        for t in self:
            if len(out) == count:
                break
            out.append(t)
        return out


Matrix = tuple[tuple[FieldValue, FieldValue], tuple[FieldValue, FieldValue]]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    (a00, a01), (a10, a11) = a
    (b00, b01), (b10, b11) = b
    return (
        (a00 * b00 + a01 * b10, a00 * b01 + a01 * b11),
        (a10 * b00 + a11 * b10, a10 * b01 + a11 * b11),
    )


def mat_pow(m: Matrix, n: int, one, zero) -> Matrix:
    result: Matrix = ((one, zero), (zero, one))
    while n:
        if n & 1:
            result = mat_mul(result, m)
        n >>= 1
        if n:
            m = mat_mul(m, m)
    return result


def step_matrix(h, d, z) -> Matrix:
    h, d, z = _coerce(h, d, z)
    return ((z + h, d), (_zero_one(z)[1], z))


@dataclass(frozen=True)
class RedeiPair:
    n: int
    N: FieldValue
    D: FieldValue
    h: FieldValue
    d: FieldValue
    z: FieldValue

    @property
    def field(self) -> FieldSpec:
        return field_of(self.z)

    def same_context(self, other: RedeiPair) -> bool:
        f = self.field
        return all(f.eq(a, b) for a, b in
                   ((self.h, other.h), (self.d, other.d), (self.z, other.z)))

    def __add__(self, other: RedeiPair) -> RedeiPair:
        return nd_add(self, other)

    @property
    def Q(self) -> ParamValue:
        f = self.field
        if f.is_zero(self.D):
            if f.is_zero(self.N):
                # only possible when det M = z^2 + hz - d vanishes
                raise DegenerateDenominator(f"Q_{self.n} is 0/0 at a singular step matrix")
            return ALPHA
        return self.N / self.D

    def norm(self) -> FieldValue:
        """N^2 + hND - dD^2, which equals (z^2 + hz - d)^n."""
        return self.N * self.N + self.h * self.N * self.D - self.d * self.D * self.D


def _zero_one(z):
    # produces 0 and 1 of whatever field z belongs to
    zero = z - z
    return zero, zero + 1


def _coerce(h, d, z):
    ref = next((v for v in (z, h, d) if not isinstance(v, int)), z)
    f = field_of(ref)
    return f(h), f(d), f(z)


def nd_matrix(h, d, z, n: int) -> tuple[FieldValue, FieldValue]:
    h, d, z = _coerce(h, d, z)
    zero, one = _zero_one(z)
    if isinstance(z, Fraction):
        # M = M'/L with M' integral: power M' in plain ints, divide by L^n once
        L = math.lcm(h.denominator, d.denominator, z.denominator)
        mi = tuple(tuple(int(e * L) for e in row) for row in step_matrix(h, d, z))
        mn = mat_pow(mi, n, 1, 0)
        scale = Fraction(1, L**n)
        mn = tuple(tuple(e * scale for e in row) for row in mn)
    else:
        mn = mat_pow(step_matrix(h, d, z), n, one, zero)
    N, D = mn[1][1], mn[1][0]
    f = field_of(z)
    if not (f.eq(mn[0][0], N + h * D) and f.eq(mn[0][1], d * D)):
        raise AssertionError(f"M^{n} lost its [[N+hD, dD], [D, N]] shape")
    return N, D


def nd_recurrence(h, d, z, n: int) -> tuple[FieldValue, FieldValue]:
    h, d, z = _coerce(h, d, z)
    zero, one = _zero_one(z)
    r, k = 2 * z + h, z * z + h * z - d
    return RecurrenceSpec(one, z, r, k).term(n), RecurrenceSpec(zero, one, r, k).term(n)


def nd_naive(h, d, z, n: int) -> tuple[FieldValue, FieldValue]:
    h, d, z = _coerce(h, d, z)
    zero, one = _zero_one(z)
    acc = RedeiPair(0, one, zero, h, d, z)
    first = RedeiPair(1, z, one, h, d, z)
    for _ in range(n):
        acc = nd_add(acc, first)
    return acc.N, acc.D


_IMPLS = {"matrix": nd_matrix, "recurrence": nd_recurrence, "naive": nd_naive}


def nd_pair(h, d, z, n: int, strategy: str = "matrix") -> RedeiPair:
    """(N_n, D_n) for the context (h, d, z); ``strategy`` picks the algorithm."""
    if n < 0:
        raise ValueError("n must be non-negative")
    try:
        impl = _IMPLS[strategy]
    except KeyError:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}") from None
    N, D = impl(h, d, z, n)
    h, d, z = _coerce(h, d, z)
    return RedeiPair(n, N, D, h, d, z)


def nd_add(p: RedeiPair, q: RedeiPair) -> RedeiPair:
    """Index-(n+m) pair from the index-n and index-m pairs."""
    if not p.same_context(q):
        raise ParameterMismatch("Rédei pairs from different (h, d, z) contexts")
    h, d = p.h, p.d
    N = p.N * q.N + d * p.D * q.D
    D = p.D * q.N + h * p.D * q.D + p.N * q.D
    return RedeiPair(p.n + q.n, N, D, p.h, p.d, p.z)


def redei_Q(h, d, z, n: int, strategy: str = "matrix") -> ParamValue:
    """Q_n(h, d, z), or alpha when D_n vanishes (always for n = 0).

    Raises :class:`DegenerateDenominator` when N_n = D_n = 0, which needs z^2 + hz - d = 0.
    """
    return nd_pair(h, d, z, n, strategy).Q


def redei_table(h, d, z, n_max: int) -> list[RedeiPair]:
    """Pairs for n = 0..n_max by walking the recurrences once."""
    h, d, z = _coerce(h, d, z)
    zero, one = _zero_one(z)
    r, k = 2 * z + h, z * z + h * z - d
    Ns = RecurrenceSpec(one, z, r, k).terms(n_max + 1)
    Ds = RecurrenceSpec(zero, one, r, k).terms(n_max + 1)
    return [RedeiPair(i, N, D, h, d, z) for i, (N, D) in enumerate(zip(Ns, Ds))]
