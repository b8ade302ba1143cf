from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pellconic import ALPHA, ConicParams, FieldSpec, nd_add, nd_pair, p_mul, p_pow, redei_Q, redei_table
from pellconic.errors import DegenerateDenominator
from pellconic.redei import STRATEGIES, RecurrenceSpec


def test_sqrt2_example():
    pair = nd_pair(0, 2, 1, 3)
    assert (pair.N, pair.D) == (7, 5)
    assert pair.Q == Fraction(7, 5)


def test_Q_values():
    assert redei_Q(0, 2, Fraction(3, 2), 2) == Fraction(17, 12)
    assert redei_Q(0, 2, 1, 4) == Fraction(17, 12)
    assert redei_Q(0, 2, redei_Q(0, 2, 1, 2), 2) == redei_Q(0, 2, 1, 4)
    assert redei_Q(1, 3, 5, 0) is ALPHA


def test_recurrence_spec():
    fib = RecurrenceSpec(0, 1, 1, -1)
    assert fib.terms(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert fib.term(50) == 12586269025


@pytest.mark.parametrize("strategy", STRATEGIES)
def test_strategies_on_example(strategy):
    assert nd_pair(0, 2, 1, 10, strategy) == nd_pair(0, 2, 1, 10, "recurrence")


def test_addition_law():
    a, b = nd_pair(1, 3, 2, 4), nd_pair(1, 3, 2, 7)
    c = nd_add(a, b)
    assert c == nd_pair(1, 3, 2, 11)
    assert (a + b).n == 11


def test_norm_identity():
    h, d, z = Fraction(1, 2), Fraction(-3), Fraction(2, 3)
    for n in range(20):
        assert nd_pair(h, d, z, n).norm() == (z * z + h * z - d) ** n


def test_singular_matrix_gives_undefined_Q():
    # z^2 + hz - d = 0 mod 7 for (h, d, z) = (2, 6, 6)
    f7 = FieldSpec.prime(7)
    pair = nd_pair(f7(2), f7(6), f7(6), 2)
    with pytest.raises(DegenerateDenominator):
        pair.Q


def test_prime_field_permutation():
    # Q_n permutes F_p when gcd(n, p + 1) = 1 on a conic with p + 1 points
    p, h, d = 11, 0, 2
    f = FieldSpec.prime(p)
    images = {redei_Q(f(h), f(d), f(z), 5) for z in range(p)}
    assert images == {f(z) for z in range(p)}


def test_table_rows():
    rows = redei_table(0, 2, 1, 3)
    assert [(r.N, r.D) for r in rows] == [(1, 0), (1, 1), (3, 2), (7, 5)]


fracs = st.fractions(-5, 5, max_denominator=5)


@given(fracs, fracs, fracs, st.integers(0, 12), st.integers(0, 12))
def test_power_semantics(h, d, z, n, m):
    if z * z + h * z - d == 0:
        return
    Qn, Qm = redei_Q(h, d, z, n), redei_Q(h, d, z, m)
    assert redei_Q(h, d, z, n + m) == p_mul(Qn, Qm, ConicParams(h, d))
    assert redei_Q(h, d, z, n) == p_pow(z, n, ConicParams(h, d))
