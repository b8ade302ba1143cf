"""Group structure of conics x^2 + hxy - dy^2 = 1, generalized Rédei
functions, and rational approximation of reals by points on conics."""
from .errors import (
    AnalyticFieldError,
    ConicError,
    DegenerateDenominator,
    DegenerateLimitError,
    DomainError,
    NoConvergenceError,
    NonInvertibleError,
    NoRealSolutionError,
    NotIrrationalError,
    ParameterMismatch,
    ParametrizationPole,
    ParseError,
    PrecisionExhausted,
    UnorderedFieldError,
)
from .field import ConicClass, ConicParams, FieldSpec, Fp, conic_class, poly_irreducible
from .algebra import (
    AlgebraElement,
    alg_conj,
    alg_inverse,
    alg_mul,
    alg_norm,
    alg_one,
    alg_trace,
    parse_algebra_element,
)
from .group import (
    ALPHA,
    ConicPoint,
    all_points,
    e_inverse,
    e_mul,
    e_pow,
    eps,
    is_alpha,
    p_inverse,
    p_mul,
    p_pow,
    parse_param,
    parse_point,
    tau,
)
from .redei import RecurrenceSpec, RedeiPair, nd_add, nd_pair, redei_Q, redei_table
from .power import PointPowerPair, fg_pair, q_halving_check, q_param
from .quadratic import QuadraticIrrational, quadratic, sqrt_rational
from .reals import PI, RealNumber, parse_real
from .cf import CFExpansion, cf_convergents, cf_expand
from .approximation import (
    RecurrenceLimitSpec,
    approx_over_conic,
    point_ratio_limit,
    primitive_triple,
    pythagorean_stream,
    recurrence_ratio_limit,
    solve_auxiliary,
)
from .checks import run_suite

__version__ = "0.1.0"
