from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pellconic import (
    AlgebraElement,
    ConicParams,
    alg_conj,
    alg_inverse,
    alg_mul,
    alg_norm,
    alg_one,
    alg_trace,
    parse_algebra_element,
)
from pellconic.errors import NonInvertibleError

small = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@st.composite
def elements(draw, params=None):
    params = params or ConicParams(draw(small), draw(small))
    return AlgebraElement(draw(small), draw(small), params)


@st.composite
def triples(draw):
    params = ConicParams(draw(small), draw(small))
    return tuple(draw(elements(params)) for _ in range(3))


def test_product_rule():
    P = ConicParams(1, 3)
    u, v = AlgebraElement(2, 1, P), AlgebraElement(1, -1, P)
    # (2 + x)(1 - x) = 2 - x - x^2 = 2 - x - (x + 3)
    assert alg_mul(u, v) == AlgebraElement(-1, -2, P)


def test_norm_trace_conjugate():
    P = ConicParams(1, 3)
    u = AlgebraElement(2, 5, P)
    assert alg_norm(u) == 4 + 10 - 75
    assert alg_trace(u) == 9
    assert alg_conj(u) == AlgebraElement(7, -5, P)


def test_inverse_and_zero_norm():
    P = ConicParams(0, 4)
    u = AlgebraElement(3, 1, P)
    assert alg_mul(u, alg_inverse(u)) == alg_one(P)
    with pytest.raises(NonInvertibleError):
        alg_inverse(AlgebraElement(2, 1, P))


def test_parse():
    P = ConicParams(0, 2)
    assert parse_algebra_element("3 + 2·x", P) == AlgebraElement(3, 2, P)
    assert str(AlgebraElement(Fraction(1, 2), -1, P)) == "1/2 + -1·x"


@given(triples())
def test_ring_laws(t):
    u, v, w = t
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert alg_norm(u * v) == alg_norm(u) * alg_norm(v)


@given(elements())
def test_conjugation(u):
    assert alg_mul(u, alg_conj(u)) == AlgebraElement(alg_norm(u), 0, u.params)
    assert alg_conj(alg_conj(u)) == u
    assert u + alg_conj(u) == AlgebraElement(alg_trace(u), 0, u.params)
