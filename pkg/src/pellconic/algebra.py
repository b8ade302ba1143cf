"""The quadratic algebra A = F[x]/(x^2 - hx - d).

Elements are pairs (a, b) standing for a + bx. A is a field only when
x^2 - hx - d is irreducible; otherwise zero divisors exist and only
:func:`alg_inverse` can fail.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NonInvertibleError, ParameterMismatch, ParseError
from .field import ConicParams, FieldValue


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    a: FieldValue
    b: FieldValue
    params: ConicParams

    def __post_init__(self):
        f = self.params.field
        object.__setattr__(self, "a", f(self.a))
        object.__setattr__(self, "b", f(self.b))

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        f = self.params.field
        return self.params == other.params and f.eq(self.a, other.a) and f.eq(self.b, other.b)

    def __hash__(self):
        return hash((self.a, self.b, self.params))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return alg_mul(self, other)
        return AlgebraElement(self.a * other, self.b * other, self.params)

    __rmul__ = __mul__

    def __add__(self, other: AlgebraElement):
        _check(self, other)
        return AlgebraElement(self.a + other.a, self.b + other.b, self.params)

    def __sub__(self, other: AlgebraElement):
        _check(self, other)
        return AlgebraElement(self.a - other.a, self.b - other.b, self.params)

    def __neg__(self):
        return AlgebraElement(-self.a, -self.b, self.params)

    def __str__(self):
        f = self.params.field
        return f"{f.format(self.a)} + {f.format(self.b)}·x"

    def __repr__(self):
        return f"AlgebraElement({self})"


def _check(u: AlgebraElement, v: AlgebraElement):
    if u.params != v.params:
        raise ParameterMismatch(f"{u.params} vs {v.params}")


def alg_one(params: ConicParams) -> AlgebraElement:
    return AlgebraElement(1, 0, params)


def alg_mul(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    _check(u, v)
    a, b = u.a, u.b
    s, t = v.a, v.b
    h, d = u.params.h, u.params.d
    return AlgebraElement(a * s + b * t * d, b * s + a * t + b * t * h, u.params)


def alg_conj(u: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(u.a + u.params.h * u.b, -u.b, u.params)


def alg_norm(u: AlgebraElement) -> FieldValue:
    h, d = u.params.h, u.params.d
    return u.a * u.a + h * u.a * u.b - d * u.b * u.b


def alg_trace(u: AlgebraElement) -> FieldValue:
    return 2 * u.a + u.params.h * u.b


def alg_inverse(u: AlgebraElement) -> AlgebraElement:
    n = alg_norm(u)
    if u.params.field.is_zero(n):
        raise NonInvertibleError(f"{u} has norm zero (zero divisor)")
    c = alg_conj(u)
    return AlgebraElement(c.a / n, c.b / n, u.params)


_ELEMENT_RE = re.compile(r"^(?P<a>.+?)\s*\+\s*(?P<b>[^+]+?)\s*(·|\*)\s*x$")


def parse_algebra_element(text: str, params: ConicParams) -> AlgebraElement:
    """Parse ``"a + b·x"`` (``*`` also accepted) with field scalars a, b."""
    m = _ELEMENT_RE.match(text.strip().replace("−", "-"))
    if not m:
        raise ParseError(f"expected 'a + b·x', got {text!r}")
    f = params.field
    return AlgebraElement(f.parse(m.group("a")), f.parse(m.group("b")), params)
