"""The group (E, ⊙_E) of points on x^2 + hxy - dy^2 = 1 and its parametric twin (P, ⊙_P).

P is the field together with one extra symbol :data:`ALPHA`, which is the
identity of ⊙_P. :func:`eps` and :func:`tau` are mutually inverse maps
between the two groups.
"""
from __future__ import annotations

import re
from typing import Union

from .errors import ParameterMismatch, ParametrizationPole, ParseError
from .field import ConicParams, FieldValue


class _Alpha:
    """The point at infinity of the parameter line; identity of ⊙_P."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "alpha"

    __str__ = __repr__

    def __reduce__(self):
        return (_Alpha, ())


ALPHA = _Alpha()

ParamValue = Union[FieldValue, _Alpha]


def is_alpha(m) -> bool:
    return m is ALPHA


class ConicPoint:
    """A point (x, y) with x^2 + hxy - dy^2 = 1; the equation is checked on construction."""

    __slots__ = ("x", "y", "params")

    def __init__(self, x, y, params: ConicParams):
        f = params.field
        x, y = f(x), f(y)
        if not f.eq(conic_form(x, y, params), 1):
            raise ValueError(f"({f.format(x)}, {f.format(y)}) is not on {params}")
        self.x, self.y, self.params = x, y, params

    @classmethod
    def _unchecked(cls, x, y, params: ConicParams) -> ConicPoint:
        pt = object.__new__(cls)
        pt.x, pt.y, pt.params = x, y, params
        return pt

    @classmethod
    def identity(cls, params: ConicParams) -> ConicPoint:
        return cls._unchecked(params.field.one, params.field.zero, params)

    def __eq__(self, other):
        if not isinstance(other, ConicPoint):
            return NotImplemented
        f = self.params.field
        return self.params == other.params and f.eq(self.x, other.x) and f.eq(self.y, other.y)

    def __hash__(self):
        return hash((self.x, self.y, self.params))

    def __iter__(self):
        return iter((self.x, self.y))

    def __mul__(self, other: ConicPoint) -> ConicPoint:
        return e_mul(self, other)

    def __pow__(self, n: int) -> ConicPoint:
        return e_pow(self, n)

    def __str__(self):
        f = self.params.field
        return f"({f.format(self.x)}, {f.format(self.y)})"

    def __repr__(self):
        return f"ConicPoint{self}"


def conic_form(x, y, params: ConicParams):
    return x * x + params.h * x * y - params.d * y * y


def e_mul(p: ConicPoint, q: ConicPoint) -> ConicPoint:
    if p.params != q.params:
        raise ParameterMismatch(f"{p.params} vs {q.params}")
    h, d = p.params.h, p.params.d
    x, y, u, v = p.x, p.y, q.x, q.y
    return ConicPoint(x * u + y * v * d, y * u + x * v + y * v * h, p.params)


def e_inverse(p: ConicPoint) -> ConicPoint:
    return ConicPoint._unchecked(p.x + p.params.h * p.y, -p.y, p.params)


def e_pow(p: ConicPoint, n: int) -> ConicPoint:
    """n-th power by binary square-and-multiply; negative n inverts first."""
    if n < 0:
        p, n = e_inverse(p), -n
    result = ConicPoint.identity(p.params)
    base = p
    while n:
        if n & 1:
            result = e_mul(result, base)
        n >>= 1
        if n:
            base = e_mul(base, base)
    return result


def e_pow_naive(p: ConicPoint, n: int) -> ConicPoint:
    """Left fold of |n| products; the oracle for :func:`e_pow`."""
    if n < 0:
        p, n = e_inverse(p), -n
    result = ConicPoint.identity(p.params)
    for _ in range(n):
        result = e_mul(result, p)
    return result


def eps(m: ParamValue, params: ConicParams) -> ConicPoint:
    """m -> ((m^2+d)/(m^2+hm-d), (2m+h)/(m^2+hm-d)); alpha -> (1, 0)."""
    if m is ALPHA:
        return ConicPoint.identity(params)
    f = params.field
    m = f(m)
    h, d = params.h, params.d
    den = m * m + h * m - d
    if f.is_zero(den):
        raise ParametrizationPole(f"eps has a pole at m = {f.format(m)} on {params}")
    return ConicPoint((m * m + d) / den, (2 * m + h) / den, params)


def tau(p: ConicPoint) -> ParamValue:
    f = p.params.field
    if not f.is_zero(p.y):
        return (1 + p.x) / p.y
    if f.eq(p.x, 1):
        return ALPHA
    return -p.params.h / 2


def p_mul(a: ParamValue, b: ParamValue, params: ConicParams) -> ParamValue:
    if a is ALPHA:
        return b
    if b is ALPHA:
        return a
    f = params.field
    a, b = f(a), f(b)
    den = params.h + a + b
    if f.is_zero(den):
        return ALPHA
    return (params.d + a * b) / den


def p_inverse(a: ParamValue, params: ConicParams) -> ParamValue:
    if a is ALPHA:
        return ALPHA
    return -params.h - params.field(a)


def p_pow(a: ParamValue, n: int, params: ConicParams) -> ParamValue:
    """n-fold ⊙_P power by repeated squaring."""
    if n < 0:
        a, n = p_inverse(a, params), -n
    result, base = ALPHA, a
    while n:
        if n & 1:
            result = p_mul(result, base, params)
        n >>= 1
        if n:
            base = p_mul(base, base, params)
    return result


def p_eq(a: ParamValue, b: ParamValue, params: ConicParams) -> bool:
    if a is ALPHA or b is ALPHA:
        return a is b
    return params.field.eq(a, b)


def format_param(m: ParamValue, params: ConicParams) -> str:
    return "alpha" if m is ALPHA else params.field.format(m)


def parse_param(text: str, params: ConicParams) -> ParamValue:
    if text.strip() == "alpha":
        return ALPHA
    return params.field.parse(text)


_POINT_RE = re.compile(r"^\(\s*(?P<x>[^,]+?)\s*,\s*(?P<y>[^,]+?)\s*\)$")


def parse_point(text: str, params: ConicParams) -> ConicPoint:
    """Parse ``"(x, y)"`` and validate it lies on the conic."""
    m = _POINT_RE.match(text.strip())
    if not m:
        raise ParseError(f"expected '(x, y)', got {text!r}")
    f = params.field
    return ConicPoint(f.parse(m.group("x")), f.parse(m.group("y")), params)


def all_points(params: ConicParams) -> list[ConicPoint]:
    """Every point of a conic over a prime field (brute force, O(p^2))."""
    elems = params.field.elements()
    return [
        ConicPoint._unchecked(x, y, params)
        for x in elems
        for y in elems
        if conic_form(x, y, params) == 1
    ]
