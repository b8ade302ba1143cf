"""Exact quadratic irrationals r + s*sqrt(t) with rational r, s and squarefree t > 1."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import total_ordering

from .field import format_fraction

# trial-division bound for squarefree extraction; larger repeated primes are
# only absorbed when the cofactor is itself a perfect square
_TRIAL_LIMIT = 100_000


def square_part(t: int) -> tuple[int, int]:
    """Split t > 0 as k^2 * u, returning (k, u)."""
    k, u = 1, t
    q = 2
    while q <= _TRIAL_LIMIT and q * q <= u:
        while u % (q * q) == 0:
            u //= q * q
            k *= q
        q += 1 if q == 2 else 2
    r = math.isqrt(u)
    if r * r == u:
        k, u = k * r, 1
    return k, u


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def quadratic(r, s, t: int):
    """Canonical r + s*sqrt(t): a Fraction when the radical vanishes, else a QuadraticIrrational."""
    r, s = Fraction(r), Fraction(s)
    if t < 0:
        raise ValueError("negative radicand")
    if s == 0 or t == 0:
        return r
    k, u = square_part(t)
    if u == 1:
        return r + s * k
    return QuadraticIrrational(r, s * k, u)


def sqrt_rational(q) -> Fraction | QuadraticIrrational:
    """sqrt(q) for rational q >= 0, exactly."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"sqrt of negative {q}")
    # sqrt(n/d) = sqrt(n d) / d
    return quadratic(0, Fraction(1, q.denominator), q.numerator * q.denominator)


@total_ordering
class QuadraticIrrational:
    """r + s*sqrt(t). Build through :func:`quadratic` to get the canonical form."""

    __slots__ = ("r", "s", "t")

    def __init__(self, r: Fraction, s: Fraction, t: int):
        self.r, self.s, self.t = Fraction(r), Fraction(s), int(t)
        if self.s == 0 or self.t <= 1:
            raise ValueError("not irrational; use quadratic()")

    # -- arithmetic -----------------------------------------------------

    def _parts(self, other):
        if isinstance(other, (int, Fraction)):
            return Fraction(other), Fraction(0)
        if isinstance(other, QuadraticIrrational):
            if other.t != self.t:
                raise ValueError(f"radicands differ: sqrt({self.t}) vs sqrt({other.t})")
            return other.r, other.s
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return quadratic(self.r + o[0], self.s + o[1], self.t)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticIrrational(-self.r, -self.s, self.t)

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return quadratic(self.r - o[0], self.s - o[1], self.t)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        a, b = o
        return quadratic(self.r * a + self.s * b * self.t, self.r * b + self.s * a, self.t)

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticIrrational:
        return QuadraticIrrational(self.r, -self.s, self.t)

    def norm(self) -> Fraction:
        return self.r * self.r - self.s * self.s * self.t

    def reciprocal(self) -> QuadraticIrrational:
        n = self.norm()  # nonzero since sqrt(t) is irrational
        return QuadraticIrrational(self.r / n, -self.s / n, self.t)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return quadratic(self.r / other, self.s / other, self.t)
        if isinstance(other, QuadraticIrrational):
            return self * other.reciprocal()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.reciprocal() * other
        return NotImplemented

    # -- comparison -----------------------------------------------------

    def sign(self) -> int:
        sr = (self.r > 0) - (self.r < 0)
        ss = 1 if self.s > 0 else -1
        if sr == 0 or sr == ss:
            return ss
        # opposite signs: compare r^2 with s^2 t
        return sr if self.r * self.r > self.s * self.s * self.t else ss

    def __eq__(self, other):
        if isinstance(other, QuadraticIrrational):
            return (self.r, self.s, self.t) == (other.r, other.s, other.t)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, QuadraticIrrational)):
            if isinstance(other, QuadraticIrrational) and other.t != self.t:
                return float(self) < float(other)
            diff = self - other
            return diff < 0 if isinstance(diff, Fraction) else diff.sign() < 0
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.s, self.t))

    def __floor__(self) -> int:
        P, D, Q = self.surd_form()
        return surd_floor(P, D, Q)

    # -- conversions ----------------------------------------------------

    def surd_form(self) -> tuple[int, int, int]:
        """Integers (P, D, Q) with self = (P + sqrt(D)) / Q, Q | D - P^2, D not a square."""
        b = math.lcm(self.r.denominator, self.s.denominator)
        P = self.r.numerator * (b // self.r.denominator)
        c = abs(self.s.numerator) * (b // self.s.denominator)
        D = c * c * self.t
        Q = b
        if self.s < 0:
            P, Q = -P, -Q
        if (D - P * P) % Q:
            P, D, Q = P * abs(Q), D * Q * Q, Q * abs(Q)
        return P, D, Q

    def __float__(self):
        return float(self.r) + float(self.s) * math.sqrt(self.t)

    def to_mpf(self, ctx):
        return ctx.mpf(self.r.numerator) / self.r.denominator + (
            ctx.mpf(self.s.numerator) / self.s.denominator
        ) * ctx.sqrt(self.t)

    def __str__(self):
        s = format_fraction(abs(self.s))
        sign = "-" if self.s < 0 else "+"
        coef = "" if s == "1" else f"{s}*"
        if self.r == 0:
            return f"{'-' if self.s < 0 else ''}{coef}sqrt({self.t})"
        return f"{format_fraction(self.r)} {sign} {coef}sqrt({self.t})"

    def __repr__(self):
        return f"QuadraticIrrational({self})"

    def reciprocal_form(self) -> str:
        """Render as k/(m+n√t) with integers k, m, n, e.g. ``8/(13+3√33)``."""
        inv = self.reciprocal()
        L = math.lcm(inv.r.denominator, inv.s.denominator)
        m, n = inv.r * L, inv.s * L
        k = L
        g = math.gcd(math.gcd(int(m), int(n)), k)
        k, m, n = k // g, int(m) // g, int(n) // g
        if m < 0 and n < 0:
            k, m, n = -k, -m, -n
        ncoef = "" if abs(n) == 1 else str(abs(n))
        head = f"{m}{'+' if n > 0 else '-'}" if m else ("-" if n < 0 else "")
        return f"{k}/({head}{ncoef}√{self.t})"


def surd_floor(P: int, D: int, Q: int) -> int:
    """floor((P + sqrt(D)) / Q) for non-square D > 0 and Q != 0."""
    s = math.isqrt(D)
    if Q > 0:
        return (P + s) // Q
    # sqrt(D) is irrational, so (P + sqrt(D)) / |Q| is never an integer
    return -((P + s) // -Q) - 1
