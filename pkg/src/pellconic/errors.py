"""Exception hierarchy shared by every module of the package."""


class ConicError(Exception):
    """Base class for all errors raised by pellconic."""


class ParseError(ConicError, ValueError):
    """Textual input does not follow the scalar / point / target syntax."""


class ParameterMismatch(ConicError, ValueError):
    """Operands belong to different conics, fields or Rédei contexts."""


class UnorderedFieldError(ConicError, TypeError):
    """An order-dependent question was asked about a prime field."""


class AnalyticFieldError(ConicError, TypeError):
    """Irreducibility over the reals is a sign test, see ``conic_class``."""


class DomainError(ConicError, ValueError):
    """Inputs lie outside the mathematical domain of an operation."""


class NonInvertibleError(DomainError, ZeroDivisionError):
    """Algebra element of norm zero (a zero divisor)."""


class ParametrizationPole(DomainError, ZeroDivisionError):
    """The rational parametrization has a pole at the requested parameter."""


class DegenerateDenominator(DomainError, ZeroDivisionError):
    """A denominator required by an identity vanishes."""


class NoConvergenceError(DomainError):
    """A limit does not exist (complex or repeated characteristic roots)."""


class DegenerateLimitError(DomainError):
    """The dominant Binet coefficient of the denominator sequence vanishes."""


class NotIrrationalError(DomainError):
    """The auxiliary number is rational, so its continued fraction is finite."""


class NoRealSolutionError(DomainError):
    """A quadratic equation has negative discriminant."""


class PrecisionExhausted(ConicError, ArithmeticError):
    """The working precision cannot decide the requested quantity."""
