"""Descriptions of real numbers that can be evaluated to rigorous enclosures.

A :class:`RealNumber` is a small expression (pi, square roots, rationals and
the four operations) evaluated with mpmath interval arithmetic at any
requested precision. When every leaf is rational and at most one square
root is involved, the exact value is also kept as a Fraction or a
:class:`~pellconic.quadratic.QuadraticIrrational`.

Textual syntax accepted by :func:`parse_real`::

    pi | e | sqrt:<k> | rat:<p>/<q> | <decimal> | expression
    expression: (1+sqrt(1+pi^2))/pi, (1+√5)/2, (1+√(1+π²))/π, ...
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from mpmath import libmp
from mpmath.ctx_iv import MPIntervalContext

from .errors import ParseError, PrecisionExhausted
from .field import format_fraction
from .quadratic import QuadraticIrrational, quadratic, sqrt_rational

Exact = Union[Fraction, QuadraticIrrational]


@lru_cache(maxsize=None)
def interval_context(digits: int) -> MPIntervalContext:
    ctx = MPIntervalContext()
    ctx.dps = digits
    return ctx


def _iv_rational(ctx, q: Fraction):
    return ctx.mpf(q.numerator) / q.denominator


def _iv_exact(ctx, x: Exact):
    if isinstance(x, Fraction):
        return _iv_rational(ctx, x)
    return _iv_rational(ctx, x.r) + _iv_rational(ctx, x.s) * ctx.sqrt(ctx.mpf(x.t))


def _combine(a: Exact | None, b: Exact | None, op) -> Exact | None:
    if a is None or b is None:
        return None
    try:
        return op(a, b)
    except (ValueError, TypeError):
        return None  # different radicands leave the quadratic world


class RealNumber:
    """A real number known through rigorous interval enclosures.

    ``irrational`` is True/False when provable from the construction, None otherwise.
    """

    __slots__ = ("_iv", "exact", "irrational", "text")

    def __init__(self, iv: Callable, text: str, exact: Exact | None = None, irrational=None):
        self._iv = iv
        self.text = text
        self.exact = exact
        if exact is not None:
            irrational = not isinstance(exact, Fraction)
        self.irrational = irrational

    # -- constructors ---------------------------------------------------

    @classmethod
    def of(cls, value) -> RealNumber:
        if isinstance(value, RealNumber):
            return value
        if isinstance(value, (int, Fraction)):
            q = Fraction(value)
            return cls(lambda ctx: _iv_rational(ctx, q), format_fraction(q), q)
        if isinstance(value, QuadraticIrrational):
            return cls(lambda ctx: _iv_exact(ctx, value), str(value), value)
        raise TypeError(f"cannot make a RealNumber from {value!r}")

    # -- evaluation -----------------------------------------------------

    def iv(self, digits: int):
        return self._iv(interval_context(digits))

    def enclosure(self, digits: int) -> tuple[Fraction, Fraction]:
        """Rational lower and upper bounds valid at ``digits`` working digits."""
        if isinstance(self.exact, Fraction):
            return self.exact, self.exact
        lo, hi = self.iv(digits)._mpi_
        return _to_fraction(lo), _to_fraction(hi)

    def sign(self, digits: int = 60) -> int:
        if self.exact is not None:
            return (self.exact > 0) - (self.exact < 0)
        lo, hi = self.enclosure(digits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        raise PrecisionExhausted(f"sign of {self.text} undecided at {digits} digits")

    def to_mpf(self, ctx):
        """Midpoint of the enclosure as an mpf of the given (non-interval) context."""
        lo, hi = self.enclosure(ctx.dps + 10)
        mid = (lo + hi) / 2
        return ctx.mpf(mid.numerator) / mid.denominator

    def __float__(self):
        lo, hi = self.enclosure(20)
        return float((lo + hi) / 2)

    # -- arithmetic -----------------------------------------------------

    def _binary(self, other, op, sym, reflected=False):
        try:
            other = RealNumber.of(other)
        except TypeError:
            return NotImplemented
        a, b = (other, self) if reflected else (self, other)
        exact = _combine(a.exact, b.exact, op)
        irr = None
        if exact is None:
            # irrational op rational stays irrational (for nonzero rational in * and /)
            for x, y in ((a, b), (b, a)):
                if x.irrational and isinstance(y.exact, Fraction):
                    if sym in "+-" or y.exact != 0:
                        irr = True
        text = format_fraction(exact) if isinstance(exact, Fraction) else f"({a.text}{sym}{b.text})"
        return RealNumber(
            lambda ctx, a=a, b=b: op(a._iv(ctx), b._iv(ctx)),
            text,
            exact,
            irr,
        )

    def __add__(self, o):
        return self._binary(o, lambda x, y: x + y, "+")

    def __radd__(self, o):
        return self._binary(o, lambda x, y: x + y, "+", True)

    def __sub__(self, o):
        return self._binary(o, lambda x, y: x - y, "-")

    def __rsub__(self, o):
        return self._binary(o, lambda x, y: x - y, "-", True)

    def __mul__(self, o):
        return self._binary(o, lambda x, y: x * y, "*")

    def __rmul__(self, o):
        return self._binary(o, lambda x, y: x * y, "*", True)

    def __truediv__(self, o):
        return self._binary(o, lambda x, y: x / y, "/")

    def __rtruediv__(self, o):
        return self._binary(o, lambda x, y: x / y, "/", True)

    def __neg__(self):
        ex = -self.exact if self.exact is not None else None
        return RealNumber(lambda ctx: -self._iv(ctx), f"-{self.text}", ex, self.irrational)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = RealNumber.of(1)
        for _ in range(n):
            out = out * self
        if n == 2 and not isinstance(out.exact, Fraction):
            out.text = f"{self.text}^2"
        return out

    def __repr__(self):
        return f"RealNumber({self.text})"

    def __str__(self):
        return self.text


def _to_fraction(raw) -> Fraction:
    p, q = libmp.to_rational(raw)
    return Fraction(int(p), int(q))


def real_sqrt(x) -> RealNumber:
    x = RealNumber.of(x)
    exact = None
    if isinstance(x.exact, Fraction) and x.exact >= 0:
        exact = sqrt_rational(x.exact)
    return RealNumber(lambda ctx: ctx.sqrt(x._iv(ctx)), f"sqrt({x.text})", exact)


PI = RealNumber(lambda ctx: ctx.pi, "pi", irrational=True)
E = RealNumber(lambda ctx: ctx.e, "e", irrational=True)


def real_sqrt_int(k: int) -> RealNumber:
    return real_sqrt(Fraction(k))


_NAMES = {"pi": PI, "e": E}
_DEC_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def parse_real(text: str) -> RealNumber:
    """Parse a target description into a :class:`RealNumber`."""
    t = text.strip().replace("−", "-")
    if t.startswith("rat:"):
        try:
            return RealNumber.of(Fraction(t[4:]))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {text!r}") from exc
    if t.startswith("sqrt:"):
        try:
            k = int(t[5:])
        except ValueError as exc:
            raise ParseError(f"bad radicand {text!r}") from exc
        if k <= 0:
            raise ParseError(f"sqrt needs a positive radicand: {text!r}")
        return real_sqrt_int(k)
    if _DEC_RE.match(t):
        return RealNumber.of(Fraction(t))
    t = (t.replace("π", "pi").replace("²", "**2").replace("^", "**")
         .replace("√(", "sqrt(").replace("·", "*"))
    t = re.sub(r"√(\d+)", r"sqrt(\1)", t)
    try:
        tree = ast.parse(t, mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse real {text!r}") from exc
    return _eval(tree.body, t)


def _eval(node, src: str) -> RealNumber:
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
        if isinstance(node.value, float):
            return RealNumber.of(Fraction(ast.get_source_segment(src, node) or repr(node.value)))
        return RealNumber.of(node.value)
    if isinstance(node, ast.Name) and node.id in _NAMES:
        return _NAMES[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, src)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _eval(node.left, src)
        if isinstance(node.op, ast.Pow):
            if isinstance(node.right, ast.Constant) and isinstance(node.right.value, int):
                return left ** node.right.value
            raise ParseError(f"only non-negative integer powers allowed in {src!r}")
        right = _eval(node.right, src)
        ops = {ast.Add: "__add__", ast.Sub: "__sub__", ast.Mult: "__mul__", ast.Div: "__truediv__"}
        name = ops.get(type(node.op))
        if name:
            return getattr(left, name)(right)
    if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
            and node.func.id == "sqrt" and len(node.args) == 1):
        return real_sqrt(_eval(node.args[0], src))
    raise ParseError(f"unsupported construct in real description {src!r}")


def exact_or_real(value) -> RealNumber:
    """Accept str / int / Fraction / QuadraticIrrational / RealNumber uniformly."""
    if isinstance(value, str):
        return parse_real(value)
    return RealNumber.of(value)


__all__ = ["RealNumber", "PI", "E", "parse_real", "real_sqrt", "real_sqrt_int",
           "exact_or_real", "interval_context", "quadratic"]
