from fractions import Fraction

import pytest

from k3kit.lattice.exact import (
    congruence_diagonalize, determinant, extended_gcd_combination, integer_kernel, inverse,
    ldl_decomposition, mat_mul, normalise, primitive_part, signature_of, solve_left, to_fraction, transpose
)
from k3kit.lattice.lattice import e8_minus_gram


@pytest.mark.parametrize(
    "value,expected",
    [
        (3, Fraction(3)),
        ('2/4', Fraction(1, 2)),
        (' -7/3 ', Fraction(-7, 3)),
        (0.5, Fraction(1, 2)),
    ]
)
def test_to_fraction(value, expected):
    """
    """
    assert to_fraction(value) == expected


def test_to_fraction_rejects_bool():
    """
    """
    with pytest.raises(TypeError):
        to_fraction(True)


def test_normalise():
    """
    """
    assert normalise(Fraction(4, 2)) == 2
    assert isinstance(normalise(Fraction(4, 2)), int)
    assert normalise('1/3') == Fraction(1, 3)


def test_determinant_and_inverse():
    """
    """
    e8 = e8_minus_gram()
    assert determinant(e8) == 1
    inv = inverse([[2, 1], [1, 2]])
    assert inv == [[Fraction(2, 3), Fraction(-1, 3)], [Fraction(-1, 3), Fraction(2, 3)]]
    assert mat_mul([[2, 1], [1, 2]], inv) == [[1, 0], [0, 1]]
    assert determinant([]) == 1


def test_solve_left():
    """
    """
    rows = [[1, 0, 1], [0, 1, 1]]
    assert solve_left(rows, [2, 3, 5]) == [2, 3]
    assert solve_left(rows, [1, 1, 0]) is None


def test_ldl_decomposition():
    """
    """
    low, diag = ldl_decomposition([[2, 1], [1, 2]])
    assert low == [[1, 0], [Fraction(1, 2), 1]]
    assert diag == [2, Fraction(3, 2)]
    with pytest.raises(ValueError):
        ldl_decomposition([[0, 1], [1, 0]])


def test_congruence_diagonalize_hyperbolic():
    """
    """
    gram = [[0, 1], [1, 0]]
    c, diag = congruence_diagonalize(gram)
    product = mat_mul(mat_mul(c, gram), transpose(c))
    assert product == [[diag[0], 0], [0, diag[1]]]
    assert sorted(d > 0 for d in diag) == [False, True]
    assert signature_of(gram) == (1, 1)
    assert signature_of(e8_minus_gram()) == (0, 8)


def test_signature_of_degenerate():
    """
    """
    with pytest.raises(ValueError):
        signature_of([[0, 0], [0, -2]])


@pytest.mark.parametrize(
    "values,gcd",
    [
        ([6, 10, 15], 1),
        ([4, -6], 2),
        ([0, 0, 9], 9),
        ([0, 0], 0),
    ]
)
def test_extended_gcd_combination(values, gcd):
    """
    """
    g, coeffs = extended_gcd_combination(values)
    assert g == gcd
    assert sum(c * v for c, v in zip(coeffs, values)) == gcd


def test_integer_kernel():
    """
    """
    rows = [[1, 1, 0, 0], [0, 2, 0, 2]]
    kernel = integer_kernel(rows)
    assert len(kernel) == 2
    for x in kernel:
        assert all(sum(r * c for r, c in zip(row, x)) == 0 for row in rows)
    assert integer_kernel([], size=3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_primitive_part():
    """
    """
    assert primitive_part([2, -4, 6]) == [1, -2, 3]
    assert primitive_part([0, 0]) == [0, 0]
