"""Continued fraction expansion with guaranteed digits, and convergents.

Three paths, chosen by what is known about the target:

* rational   -> Euclid's algorithm, terminates exactly;
* quadratic  -> the integer (P, Q) surd recurrence, exact for any length;
* otherwise  -> a rational enclosure [lo, hi] is pushed through x -> 1/(x - a)
  and a partial quotient is emitted only while both ends share the same floor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .field import FieldSpec
from .quadratic import QuadraticIrrational, surd_floor
from .reals import RealNumber, exact_or_real


@dataclass(frozen=True)
class CFExpansion:
    digits: tuple[int, ...]
    convergents: tuple[tuple[int, int], ...]
    reliable_count: int
    terminated: bool = False  # the number is rational and fully expanded
    exhausted: bool = False  # precision ran out before max_digits
    method: str = field(default="interval", compare=False)

    def __len__(self):
        return len(self.digits)


def convergents(digits: Sequence[int]) -> list[tuple[int, int]]:
    """(p_k, q_k) by p_k = a_k p_{k-1} + p_{k-2}, seeds (1, 0) and (0, 1)."""
    out = []
    p1, p2 = 1, 0
    q1, q2 = 0, 1
    for a in digits:
        p1, p2 = a * p1 + p2, p1
        q1, q2 = a * q1 + q2, q1
        out.append((p1, q1))
    return out


def cf_convergents(e: CFExpansion | Sequence[int]) -> list[tuple[int, int]]:
    digits = e.digits if isinstance(e, CFExpansion) else e
    if not digits:
        raise ValueError("no digits to build convergents from")
    return convergents(digits)


def rational_digits(q: Fraction) -> Iterator[int]:
    n, d = q.numerator, q.denominator
    while d:
        a, r = divmod(n, d)
        yield a
        n, d = d, r


def surd_digits(x: QuadraticIrrational) -> Iterator[int]:
    """Endless partial quotients of a quadratic irrational, integer arithmetic only."""
    P, D, Q = x.surd_form()
    while True:
        a = surd_floor(P, D, Q)
        yield a
        P = a * Q - P
        Q = (D - P * P) // Q


def interval_digits(lo: Fraction, hi: Fraction, limit: int) -> tuple[list[int], bool]:
    """Digits common to every number in [lo, hi]; returns (digits, decided_all)."""
    out: list[int] = []
    while len(out) < limit:
        a = math.floor(lo)
        if math.floor(hi) != a:
            return out, False
        if lo == a:
            # an endpoint is an integer: the next digit (or termination) is undecidable
            return out, False
        out.append(a)
        # x -> 1/(x - a) is decreasing on (a, a+1)
        lo, hi = 1 / (hi - a), 1 / (lo - a)
    return out, True


def cf_expand(target, max_digits: int, spec: FieldSpec | None = None) -> CFExpansion:
    """Expand ``target`` (text, Fraction, QuadraticIrrational or RealNumber).

    Only digits that are certain at the working precision of ``spec`` (a real
    field, default 60 digits) are returned; ``exhausted`` reports a short result.
    """
    if spec is None:
        spec = FieldSpec.real(60)
    if spec.kind != "real":
        raise ValueError("cf_expand needs a real field spec for its working precision")
    x: RealNumber = exact_or_real(target)
    if isinstance(x.exact, Fraction):
        digits = []
        for a in rational_digits(x.exact):
            if len(digits) == max_digits:
                break
            digits.append(a)
        done = len(digits) < max_digits or _rational_len(x.exact) == max_digits
        return _build(digits, terminated=done, exhausted=False, method="rational")
    if isinstance(x.exact, QuadraticIrrational):
        gen = surd_digits(x.exact)
        digits = [next(gen) for _ in range(max_digits)]
        return _build(digits, terminated=False, exhausted=False, method="surd")
    lo, hi = x.enclosure(spec.digits)
    digits, complete = interval_digits(lo, hi, max_digits)
    return _build(digits, terminated=False, exhausted=not complete, method="interval")


def _rational_len(q: Fraction) -> int:
    return sum(1 for _ in rational_digits(q))


def _build(digits, terminated, exhausted, method) -> CFExpansion:
    digits = tuple(int(a) for a in digits)
    return CFExpansion(
        digits=digits,
        convergents=tuple(convergents(digits)),
        reliable_count=len(digits),
        terminated=terminated,
        exhausted=exhausted,
        method=method,
    )
