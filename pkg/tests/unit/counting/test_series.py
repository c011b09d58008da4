from fractions import Fraction

import numpy as np
import pytest

from k3kit.counting import PowerSeries, divisor_sigma, euler_product, pentagonal_indices
from k3kit.exceptions import NegativeTruncation


def test_euler_product_is_pentagonal():
    """
    """
    order = 500
    series = euler_product(order)
    signs = pentagonal_indices(order)
    assert series.offset == Fraction(1, 24)
    for m in range(order + 1):
        assert series[m] == signs.get(m, 0)


def test_pentagonal_indices_start():
    """
    """
    assert pentagonal_indices(15) == {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}


@pytest.mark.parametrize("k", [0, 1, 3, 7])
def test_divisor_sigma(k):
    """
    """
    for m in range(1, 101):
        assert divisor_sigma(k, m) == sum(d ** k for d in range(1, m + 1) if m % d == 0)


def test_inverse_of_euler_product_gives_partitions():
    """
    """
    inverse = euler_product(10).inverse()
    assert inverse.offset == Fraction(-1, 24)
    assert inverse.coeffs == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    product = euler_product(10) * inverse
    assert product == PowerSeries.one(10)


def test_log_derivative_of_euler_product():
    """
    """
    order = 100
    log_derivative = euler_product(order).log_derivative()
    assert log_derivative[0] == Fraction(1, 24)
    for m in range(1, order + 1):
        assert log_derivative[m] == -divisor_sigma(1, m)


def test_binomial_multiplication_matches_product():
    """
    """
    base = PowerSeries([1, 2, 0, -1, 3], order=6)
    binomial = PowerSeries([1, 0, -3, 0, 3, 0, -1])
    assert base.multiply_binomial(2, 3) == base * binomial
    assert base.multiply_binomial(7, 4) == base
    assert base.multiply_binomial(1, 0) == base


def test_arithmetic():
    """
    """
    a = PowerSeries([1, 2, 3])
    b = PowerSeries([0, Fraction(1, 2)], order=3)
    assert (a + b).coeffs == [1, Fraction(5, 2), 3]
    assert (a - b).order == 2
    assert (-a).coeffs == [-1, -2, -3]
    assert (2 * a).coeffs == [2, 4, 6]
    assert a.q_derivative().coeffs == [0, 2, 6]
    assert a.to_pairs() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        a + PowerSeries([1], offset=1)


def test_evaluate_matches_numeric_product():
    """
    """
    q = 0.1
    expected = q ** (1.0 / 24) * np.prod([1 - q ** n for n in range(1, 60)])
    assert euler_product(60).evaluate(q) == pytest.approx(expected, rel=1e-12)


def test_negative_truncation_raises():
    """
    """
    with pytest.raises(NegativeTruncation):
        euler_product(-1)
    with pytest.raises(NegativeTruncation):
        PowerSeries([1], order=-2)
