import random
from fractions import Fraction

import pytest

from asphere.cyclotomic import Cyclotomic, cyclotomic_polynomial
from conftest import rand_fraction

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]


@pytest.mark.parametrize(
    "n,expected",
    [
        (1, (-1, 1)),
        (2, (1, 1)),
        (3, (1, 1, 1)),
        (4, (1, 0, 1)),
        (6, (1, -1, 1)),
        (12, (1, 0, -1, 0, 1)),
    ],
)
def test_cyclotomic_polynomial(n, expected):
    assert cyclotomic_polynomial(n) == expected


def _rand_elt(rng, order):
    degree = len(cyclotomic_polynomial(order)) - 1
    return Cyclotomic(order, [rand_fraction(rng, 6) for _ in range(degree)])


@pytest.mark.parametrize("order", ORDERS)
def test_field_axioms(order):
    rng = random.Random(order)
    zero = Cyclotomic.from_rational(order, 0)
    one = Cyclotomic.from_rational(order, 1)
    for _ in range(20):
        a, b, c = (_rand_elt(rng, order) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a - a == zero
        if not a.is_zero:
            assert a * a.inverse() == one
            assert (b / a) * a == b


@pytest.mark.parametrize("order", ORDERS)
def test_zeta_relations(order):
    z = Cyclotomic.zeta(order)
    power = Cyclotomic.from_rational(order, 1)
    for k in range(order):
        assert power == Cyclotomic.zeta(order, k)
        power = power * z
    assert power == 1  # zeta^order == 1
    assert Cyclotomic.zeta(order, -1) == Cyclotomic.zeta(order, order - 1)


@pytest.mark.parametrize("order", [3, 4, 5, 6, 7, 12])
def test_zeta_power_sums(order):
    # Sum of all order-th roots of unity vanishes.
    total = Cyclotomic.from_rational(order, 0)
    for k in range(order):
        total = total + Cyclotomic.zeta(order, k)
    assert total.is_zero


@pytest.mark.parametrize("order", ORDERS)
def test_numeric_cross_check(order):
    rng = random.Random(100 + order)
    for _ in range(10):
        a, b = _rand_elt(rng, order), _rand_elt(rng, order)
        assert abs((a * b).evaluate() - a.evaluate() * b.evaluate()) < 1e-9
        assert abs((a + b).evaluate() - (a.evaluate() + b.evaluate())) < 1e-12
        if not b.is_zero:
            assert abs((a / b).evaluate() - a.evaluate() / b.evaluate()) < 1e-6


def test_to_rational():
    assert Cyclotomic.from_rational(5, Fraction(3, 7)).to_rational() == Fraction(3, 7)
    assert Cyclotomic.zeta(5).to_rational() is None
    # zeta_6 - zeta_6^2 = 1 in Q(zeta_6) since Phi_6 = x^2 - x + 1.
    assert (Cyclotomic.zeta(6) - Cyclotomic.zeta(6, 2)).to_rational() == 1


def test_scalar_coercion():
    a = Cyclotomic.zeta(5)
    assert 2 * a == a + a
    assert a + Fraction(1, 2) == Fraction(1, 2) + a
    assert 1 / a == a.inverse()
    assert (3 - a) + a == 3


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        Cyclotomic.zeta(3) + Cyclotomic.zeta(4)


def test_immutability_and_hash():
    a = Cyclotomic.zeta(5)
    with pytest.raises(AttributeError):
        a.order = 7
    assert hash(a) == hash(Cyclotomic.zeta(5))
