from fractions import Fraction

import pytest

from pellconic import ALPHA, ConicParams, all_points, ConicPoint, FieldSpec, e_pow, fg_pair, q_halving_check, q_param
from pellconic.errors import DegenerateDenominator
from pellconic.power import q_param_redei, q_param_tau

EX1 = ConicPoint(4, 1, ConicParams(Fraction(-13, 4), 2))


def test_example_powers():
    expected = [(18, Fraction(19, 4)), (Fraction(163, 2), Fraction(345, 16)),
                (Fraction(2953, 8), Fraction(6251, 64)), (Fraction(53499, 32), Fraction(113249, 256))]
    for n, (x, y) in enumerate(expected, start=2):
        pair = fg_pair(EX1, n)
        assert (pair.F, pair.G) == (x, y)
        assert pair.point() == e_pow(EX1, n)


@pytest.mark.parametrize("strategy", ["matrix", "recurrence"])
def test_fg_strategies(strategy):
    for n in range(0, 40):
        assert fg_pair(EX1, n, strategy, verify=True).point() == e_pow(EX1, n)


def test_q_values():
    assert q_param(EX1, 1) == 5
    assert q_param(EX1, 2) == 4
    assert q_param(EX1, 3) == Fraction(88, 23)
    assert q_param(EX1, 4) == Fraction(72, 19)
    assert q_param(EX1, 0) is ALPHA


def test_q_routes_agree():
    for n in range(1, 30):
        assert q_param(EX1, n) == q_param_tau(EX1, n) == q_param_redei(EX1, n)


def test_halving_on_circle():
    p = ConicPoint(Fraction(3, 5), Fraction(4, 5), ConicParams(0, -1))
    assert q_param(p, 2) == Fraction(3, 4)
    assert q_halving_check(p, 1)
    assert q_halving_check(EX1, 3)


def test_y_zero_rejected():
    with pytest.raises(DegenerateDenominator):
        q_param(ConicPoint(-1, 0, ConicParams(0, 2)), 2)


def test_prime_field_powers():
    params = ConicParams(1, 3, FieldSpec.prime(7))
    for pt in all_points(params):
        for n in range(10):
            assert fg_pair(pt, n).point() == e_pow(pt, n)
