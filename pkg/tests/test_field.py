from fractions import Fraction

import pytest

from pellconic import ConicClass, ConicParams, FieldSpec, Fp, conic_class, poly_irreducible
from pellconic.errors import AnalyticFieldError, ParseError, UnorderedFieldError
from pellconic.field import format_fraction, is_probable_prime

SMALL_PRIMES = [p for p in range(3, 98) if all(p % k for k in range(2, p))]


def test_rational_canonical_form():
    assert FieldSpec.rational().parse("6/4") == Fraction(3, 2)
    assert format_fraction(Fraction(-6, 4)) == "-3/2"
    assert format_fraction(Fraction(8, 4)) == "2"


def test_prime_field_parse_and_format():
    f7 = FieldSpec.from_text("fp:7")
    assert f7.parse("10") == Fp(3, 7)
    assert f7.parse("3 mod 7") == Fp(3, 7)
    assert str(Fp(-1, 7)) == "6 mod 7"
    with pytest.raises(ParseError):
        FieldSpec.from_text("fp:9")


def test_fp_arithmetic():
    a, b = Fp(3, 11), Fp(5, 11)
    assert a * b == Fp(4, 11)
    assert (a / b) * b == a
    assert a - b == Fp(9, 11)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_legendre_matches_brute_force(p):
    squares = {(k * k) % p for k in range(1, p)}
    for a in range(1, p):
        assert (Fp(a, p).legendre() == 1) == (a in squares)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_irreducibility_matches_root_search(p):
    spec = FieldSpec.prime(p)
    for h in range(0, p, max(1, p // 7)):
        for d in range(1, p):
            has_root = any((t * t - h * t - d) % p == 0 for t in range(p))
            assert poly_irreducible(ConicParams(h, d, spec)) == (not has_root)


def test_conic_class_over_rationals():
    assert conic_class(ConicParams(0, 2)) is ConicClass.HYPERBOLA
    assert conic_class(ConicParams(0, -1)) is ConicClass.ELLIPSE
    assert conic_class(ConicParams(2, -1)) is ConicClass.PARABOLA


def test_conic_class_needs_ordered_field():
    with pytest.raises(UnorderedFieldError):
        conic_class(ConicParams(0, 3, FieldSpec.prime(7)))


def test_irreducibility_undecidable_over_reals():
    with pytest.raises(AnalyticFieldError):
        poly_irreducible(ConicParams(0, 2, FieldSpec.real(30)))


def test_real_field_tolerance():
    r = FieldSpec.real(30)
    assert r.eq(r.parse("0.1") + r.parse("0.2"), r.parse("0.3"))
    assert r.sign(r.parse("pi")) == 1


def test_miller_rabin():
    assert is_probable_prime(2 ** 61 - 1)
    assert not is_probable_prime(561)
