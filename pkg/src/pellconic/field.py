"""Coefficient fields: exact rationals, prime fields F_p and high-precision reals.

Values are plain Python objects with overloaded arithmetic:

* rational -> :class:`fractions.Fraction` (always lowest terms, positive denominator)
* prime    -> :class:`Fp`
* real     -> ``mpf`` from a private :class:`mpmath.MPContext` per precision

A :class:`FieldSpec` names the field and knows how to coerce, compare, parse and
format its values. Everything downstream is written against these operators.
"""
from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import mpmath

from .errors import AnalyticFieldError, ParseError, UnorderedFieldError

# decimal digits subtracted from the working precision for real comparisons
REAL_GUARD_DIGITS = 8


def is_probable_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3.3e24, strong probable prime above."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    r, s = n - 1, 0
    while r % 2 == 0:
        r //= 2
        s += 1
    for a in small:
        x = pow(a, r, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """Element of the prime field F_p, stored as its representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value, p: int):
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"denominator of {value} vanishes mod {p}")
            value = value.numerator * pow(value.denominator, -1, p)
        elif isinstance(value, Fp):
            if value.p != p:
                raise ValueError(f"cannot move {value} into F_{p}")
            value = value.value
        self.value = int(value) % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int):
            return other % self.p
        if isinstance(other, Fraction):
            return Fp(other, self.p).value
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Fp(o, self.p) / self

    def __neg__(self):
        return Fp(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            if self.value == 0:
                raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
            return Fp(pow(pow(self.value, -1, self.p), -n, self.p), self.p)
        return Fp(pow(self.value, n, self.p), self.p)

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (Fp, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.value == o

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Fp({self.value}, {self.p})"

    def __str__(self):
        return f"{self.value} mod {self.p}"

    def legendre(self) -> int:
        """Euler's criterion: 1 for nonzero squares, -1 for non-squares, 0 for 0."""
        if self.value == 0:
            return 0
        return 1 if pow(self.value, (self.p - 1) // 2, self.p) == 1 else -1


FieldValue = Union[Fraction, Fp, "mpmath.mpf"]


@lru_cache(maxsize=None)
def real_context(digits: int) -> mpmath.MPContext:
    """A private mpmath context at ``digits`` decimal digits (never the global one)."""
    ctx = mpmath.MPContext()
    ctx.dps = digits
    return ctx


_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_DEC_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")
_MOD_RE = re.compile(r"^([+-]?\d+)\s*mod\s*(\d+)$")


def _normalize_text(text: str) -> str:
    return text.strip().replace("−", "-")


@dataclass(frozen=True)
class FieldSpec:
    """Names one coefficient field. Build with :meth:`rational`, :meth:`prime` or :meth:`real`."""

    kind: str
    p: int | None = None
    digits: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if self.p is None or self.p == 2 or not is_probable_prime(self.p):
                raise ValueError(f"prime field needs an odd prime, got {self.p}")
        elif self.kind == "real":
            if self.digits is None or self.digits < 16:
                raise ValueError(f"real field needs digits >= 16, got {self.digits}")
        elif self.kind != "rational":
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> FieldSpec:
        return cls("rational")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls("prime", p=p)

    @classmethod
    def real(cls, digits: int = 60) -> FieldSpec:
        return cls("real", digits=digits)

    @classmethod
    def from_text(cls, text: str) -> FieldSpec:
        """Parse ``rational``, ``fp:<p>`` or ``real:<digits>``."""
        text = text.strip()
        try:
            if text == "rational":
                return cls.rational()
            if text.startswith("fp:"):
                return cls.prime(int(text[3:]))
            if text.startswith("real:"):
                return cls.real(int(text[5:]))
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        raise ParseError(f"unknown field {text!r}")

    def __str__(self):
        if self.kind == "prime":
            return f"fp:{self.p}"
        if self.kind == "real":
            return f"real:{self.digits}"
        return "rational"

    @property
    def is_exact(self) -> bool:
        return self.kind != "real"

    @property
    def is_ordered(self) -> bool:
        return self.kind != "prime"

    @property
    def ctx(self) -> mpmath.MPContext:
        if self.kind != "real":
            raise TypeError("only real fields carry an mpmath context")
        return real_context(self.digits)

    @property
    def tolerance(self):
        return self.ctx.mpf(10) ** (REAL_GUARD_DIGITS - self.digits)

    # -- values ---------------------------------------------------------

    def __call__(self, value) -> FieldValue:
        """Coerce ``value`` (int, Fraction, Fp, mpf or scalar text) into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "rational":
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into the rationals")
        if self.kind == "prime":
            if isinstance(value, (int, Fraction, Fp)):
                return Fp(value, self.p)
            raise TypeError(f"cannot coerce {value!r} into F_{self.p}")
        ctx = self.ctx
        if isinstance(value, Fraction):
            return ctx.mpf(value.numerator) / value.denominator
        if isinstance(value, Fp):
            raise TypeError("cannot coerce a prime-field element into the reals")
        return ctx.mpf(value)

    @property
    def zero(self) -> FieldValue:
        return self(0)

    @property
    def one(self) -> FieldValue:
        return self(1)

    def eq(self, a, b) -> bool:
        """Equality; for reals |a-b| <= 10^(guard-digits) * max(1, |a|, |b|)."""
        if self.kind != "real":
            return a == b
        ctx = self.ctx
        a, b = self(a), self(b)
        scale = max(ctx.mpf(1), abs(a), abs(b))
        return abs(a - b) <= self.tolerance * scale

    def is_zero(self, a) -> bool:
        return self.eq(a, 0)

    def sign(self, a) -> int:
        if self.kind == "prime":
            raise UnorderedFieldError(f"F_{self.p} is not ordered")
        if self.is_zero(a):
            return 0
        return 1 if a > 0 else -1

    def is_square(self, a) -> bool:
        """Whether ``a`` is a square of a field element (exact kinds only)."""
        if self.kind == "rational":
            a = Fraction(a)
            if a < 0:
                return False
            n, d = a.numerator, a.denominator
            return math.isqrt(n) ** 2 == n and math.isqrt(d) ** 2 == d
        if self.kind == "prime":
            return Fp(a, self.p).legendre() >= 0
        raise AnalyticFieldError("over the reals squares are the non-negative numbers")

    def elements(self):
        """All elements of a prime field, in order 0..p-1."""
        if self.kind != "prime":
            raise TypeError("only prime fields are enumerable")
        return [Fp(k, self.p) for k in range(self.p)]

    # -- text -----------------------------------------------------------

    def parse(self, text: str) -> FieldValue:
        """Parse field_core scalar syntax into this field."""
        t = _normalize_text(text)
        m = _MOD_RE.match(t)
        if m:
            k, p = int(m.group(1)), int(m.group(2))
            if self.kind != "prime" or p != self.p:
                raise ParseError(f"{text!r} is not an element of {self}")
            return Fp(k, p)
        if _RAT_RE.match(t) or _DEC_RE.match(t):
            try:
                q = Fraction(t)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"bad scalar {text!r}") from exc
            try:
                return self(q)
            except ZeroDivisionError as exc:
                raise ParseError(f"{text!r} is undefined in {self}") from exc
        if self.kind == "real":
            ctx = self.ctx
            if t == "pi":
                return +ctx.pi
            if t.startswith("sqrt:"):
                try:
                    k = int(t[5:])
                except ValueError as exc:
                    raise ParseError(f"bad radicand in {text!r}") from exc
                if k <= 0:
                    raise ParseError(f"sqrt needs a positive radicand: {text!r}")
                return ctx.sqrt(k)
        raise ParseError(f"cannot parse {text!r} as an element of {self}")

    def format(self, a) -> str:
        if self.kind == "rational":
            return format_fraction(Fraction(a))
        if self.kind == "prime":
            return str(Fp(a, self.p))
        return self.ctx.nstr(a, self.digits)


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def field_of(value) -> FieldSpec:
    """Infer the field a bare value lives in."""
    if isinstance(value, Fp):
        return FieldSpec.prime(value.p)
    if isinstance(value, (int, Fraction)):
        return FieldSpec.rational()
    ctx = getattr(type(value), "context", None)
    if ctx is not None:
        return FieldSpec.real(ctx.dps)
    raise TypeError(f"{value!r} is not a field value")


class ConicClass(str, enum.Enum):
    ELLIPSE = "ellipse"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"


@dataclass(frozen=True)
class ConicParams:
    """The pair (h, d) defining x^2 + hxy - dy^2 = 1 and the algebra F[x]/(x^2-hx-d)."""

    h: FieldValue
    d: FieldValue
    field: FieldSpec = dc_field(default_factory=FieldSpec.rational)

    def __post_init__(self):
        object.__setattr__(self, "h", self.field(self.h))
        object.__setattr__(self, "d", self.field(self.d))

    @property
    def delta(self) -> FieldValue:
        """The discriminant h^2 + 4d."""
        return self.h * self.h + 4 * self.d

    def __eq__(self, other):
        if not isinstance(other, ConicParams):
            return NotImplemented
        return (
            self.field == other.field
            and self.field.eq(self.h, other.h)
            and self.field.eq(self.d, other.d)
        )

    def __hash__(self):
        if self.field.is_exact:
            return hash((self.field, self.h, self.d))
        return hash(self.field)

    def __str__(self):
        return f"E({self.field.format(self.h)}, {self.field.format(self.d)}) over {self.field}"


def poly_irreducible(params: ConicParams) -> bool:
    """True iff x^2 - hx - d has no root in the field, i.e. h^2 + 4d is a non-square."""
    if not params.field.is_exact:
        raise AnalyticFieldError(
            "analytic field: irreducible iff delta < 0; reported via conic_class instead"
        )
    return not params.field.is_square(params.delta)


def conic_class(params: ConicParams) -> ConicClass:
    if not params.field.is_ordered:
        raise UnorderedFieldError("unordered field: no conic class")
    s = params.field.sign(params.delta)
    if s > 0:
        return ConicClass.HYPERBOLA
    if s < 0:
        return ConicClass.ELLIPSE
    return ConicClass.PARABOLA
