import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from zcancel.scalars import Cyclo, cyclo_reduce, cyclotomic_polynomial, euler_phi, lcm, zeta_power

ORDERS = [1, 2, 3, 4, 5, 6, 8, 9, 12]


def numeric(c):
    z = cmath.exp(2j * cmath.pi / c.m)
    return sum(float(a) * z ** i for i, a in enumerate(c.coeffs))


@st.composite
def cyclo(draw, m=None):
    m = m or draw(st.sampled_from(ORDERS))
    coeffs = draw(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7),
                           min_size=euler_phi(m), max_size=euler_phi(m)))
    return Cyclo(m, coeffs)


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_polynomial_matches_sympy(m):
    x = sympy.Symbol("x")
    ref = sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(m)) == [int(c) for c in ref]


@pytest.mark.parametrize("m", ORDERS)
def test_zeta_has_order_m(m):
    z = zeta_power(m, 1)
    assert z ** m == 1
    for k in range(1, m):
        if m % k == 0 and k < m:
            assert z ** k != 1


def test_minus_one_at_order_two():
    assert zeta_power(2, 1) == -1
    assert zeta_power(4, 2) == -1


def test_reduce_wraps_exponents():
    assert cyclo_reduce({-1: 1}, 5) == zeta_power(5, 4)
    assert cyclo_reduce({3: 2, 0: 1}, 3) == 3


@given(st.data())
@settings(max_examples=60, deadline=None)
def test_field_ops_agree_with_complex_evaluation(data):
    m = data.draw(st.sampled_from(ORDERS))
    a, b = data.draw(cyclo(m)), data.draw(cyclo(m))
    assert abs(numeric(a + b) - (numeric(a) + numeric(b))) < 1e-9
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-7
    if b:
        assert abs(numeric(a / b) - numeric(a) / numeric(b)) < 1e-6 * (1 + abs(numeric(a / b)))


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        Cyclo.zero(5).inverse()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        zeta_power(3, 1) + zeta_power(4, 1)


def test_embed_preserves_value():
    z3 = zeta_power(3, 1)
    assert z3.embed(6) == zeta_power(6, 2)
    assert abs(numeric(z3.embed(12)) - numeric(z3)) < 1e-12


def test_rational_equality_and_hash():
    c = Cyclo.from_rational(6, Fraction(3, 2))
    assert c == Fraction(3, 2)
    assert hash(c) == hash(Cyclo.from_rational(6, Fraction(3, 2)))
    assert c.is_rational()
    assert not zeta_power(6, 1).is_rational()


def test_lcm():
    assert lcm(4, 6) == 12
    assert lcm(5) == 5
