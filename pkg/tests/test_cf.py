from fractions import Fraction

from pellconic import FieldSpec, cf_convergents, cf_expand, parse_real, quadratic
from pellconic.cf import interval_digits


def test_rational_terminates():
    e = cf_expand("rat:7/3", 10)
    assert e.digits == (2, 3)
    assert e.terminated and not e.exhausted
    assert e.convergents[-1] == (7, 3)


def test_golden_ratio_surd_path():
    e = cf_expand("(1+√5)/2", 30)
    assert e.method == "surd"
    assert set(e.digits) == {1}
    assert e.convergents[-1] == (1346269, 832040)


def test_sqrt_periodic():
    assert cf_expand(quadratic(0, 1, 7), 9).digits == (2, 1, 1, 1, 4, 1, 1, 1, 4)
    assert cf_expand("sqrt:2", 5).digits == (1, 2, 2, 2, 2)


def test_pi():
    assert cf_expand("pi", 5).digits == (3, 7, 15, 1, 292)


def test_precision_exhaustion():
    e = cf_expand("pi", 200, FieldSpec.real(20))
    assert e.exhausted
    assert 5 < len(e) < 200
    # every emitted digit agrees with a high precision expansion
    assert cf_expand("pi", len(e), FieldSpec.real(200)).digits == e.digits


def test_interval_stops_at_ambiguity():
    digits, complete = interval_digits(Fraction(299, 100), Fraction(301, 100), 5)
    assert digits == [] and not complete


def test_convergent_identities():
    e = cf_expand(parse_real("(1+sqrt(1+pi^2))/pi"), 25)
    conv = cf_convergents(e)
    for k in range(1, len(conv)):
        (p0, q0), (p1, q1) = conv[k - 1], conv[k]
        assert p1 * q0 - p0 * q1 == (-1) ** (k - 1)
