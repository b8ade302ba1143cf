from fractions import Fraction

import mpmath
import pytest

from pellconic import (
    ConicParams,
    ConicPoint,
    FieldSpec,
    RecurrenceLimitSpec,
    approx_over_conic,
    e_pow,
    point_ratio_limit,
    primitive_triple,
    pythagorean_stream,
    quadratic,
    recurrence_ratio_limit,
    solve_auxiliary,
)
from pellconic.errors import NoConvergenceError, NoRealSolutionError, NotIrrationalError


def test_recurrence_limit_against_iteration():
    spec = RecurrenceLimitSpec(0, 1, 1, 2, 1, 2)  # roots 1 +- sqrt(2)
    limit = recurrence_ratio_limit(spec)
    assert limit == quadratic(-1, 1, 2)
    a, b = spec.sequences(200)
    with mpmath.workdps(50):
        diff = mpmath.mpf(a[-1].numerator) / a[-1].denominator / (mpmath.mpf(b[-1].numerator) / b[-1].denominator)
        assert abs(diff - limit.to_mpf(mpmath.mp)) < mpmath.mpf(10) ** -40


def test_negative_w_takes_dominant_root():
    spec = RecurrenceLimitSpec(0, 1, 1, -3, -2, 3)
    a, b = spec.sequences(120)
    assert abs(float(a[-1] / b[-1]) - float(recurrence_ratio_limit(spec))) < 1e-12


def test_recurrence_limit_rejections():
    with pytest.raises(NoConvergenceError):
        recurrence_ratio_limit(RecurrenceLimitSpec(0, 1, 1, 1, 0, 2))
    with pytest.raises(NoConvergenceError):
        recurrence_ratio_limit(RecurrenceLimitSpec(0, 1, 1, 1, 1, -1))


def test_pell_point_limit():
    pt = ConicPoint(3, 2, ConicParams(0, 2))
    limit = point_ratio_limit(pt)
    assert limit == quadratic(0, Fraction(1, 2), 2)
    p40 = e_pow(pt, 40)
    with mpmath.workdps(30):
        approx = mpmath.mpf(p40.y.numerator) / p40.y.denominator / (mpmath.mpf(p40.x.numerator) / p40.x.denominator)
        assert abs(approx - 1 / mpmath.sqrt(2)) < mpmath.mpf(10) ** -28


def test_rotation_rejected():
    with pytest.raises(NoConvergenceError):
        point_ratio_limit(ConicPoint(Fraction(3, 5), Fraction(4, 5), ConicParams(0, -1)))


def test_auxiliary_roots():
    aux = solve_auxiliary(ConicParams(0, -1), "pi")
    assert aux.irrational("+") is True
    assert abs(float(aux.root("+")) - (1 + (1 + mpmath.pi ** 2) ** 0.5) / mpmath.pi) < 1e-14
    with pytest.raises(NotIrrationalError):
        solve_auxiliary(ConicParams(0, -1), "rat:4/3")  # α = 2 or -1/2
    with pytest.raises(NoRealSolutionError):
        solve_auxiliary(ConicParams(0, 2), "rat:3")


def test_circle_approximation_points_on_conic():
    table = approx_over_conic(ConicParams(0, -1), "pi", 6)
    assert len(table.valid) == 6
    for step in table.valid:
        assert step.x * step.x + step.y * step.y == 1


def test_pythagorean_and_flagged_pole():
    table = pythagorean_stream("pi", 5)
    assert table[0].flag is not None  # convergent 1/1
    assert [s.triple for s in table.valid] == [
        (5, 12, 13), (7, 24, 25), (57, 176, 185), (52, 165, 173), (315, 988, 1037)]


def test_primitive_triple_reduces():
    assert primitive_triple(3, 1) == (4, 3, 5)
    assert primitive_triple(2, 1) == (3, 4, 5)


def test_hyperbola_approximation():
    table = approx_over_conic(ConicParams(1, 1), "sqrt:2", 5, FieldSpec.real(60))
    errs = [s.abs_error for s in table.valid]
    assert errs[-1] < errs[0]
