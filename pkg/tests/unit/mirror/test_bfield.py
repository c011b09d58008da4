from fractions import Fraction

import pytest

from k3kit.exceptions import NotBField, NotPositiveFourPlane, RiemannRelationViolated
from k3kit.lattice import ComplexVector, k3_lattice
from k3kit.mirror import BField, extend_bfield, four_plane


def _vector(lattice, entries):
    coords = [0] * lattice.rank
    for k, c in entries.items():
        coords[k] = c
    return coords


@pytest.fixture
def lattice():
    return k3_lattice()


@pytest.fixture
def omega(lattice):
    # (e1 + f1) + i (e2 + f2)
    return ComplexVector(lattice, _vector(lattice, {0: 1, 1: 1}), _vector(lattice, {2: 1, 3: 1}))


def test_bfield_needs_positive_imaginary_part(lattice):
    """
    """
    with pytest.raises(NotBField):
        BField(ComplexVector(lattice, _vector(lattice, {}), _vector(lattice, {0: 1, 1: -1})))
    with pytest.raises(NotBField):
        BField(ComplexVector(lattice, _vector(lattice, {0: 1}), _vector(lattice, {})))


@pytest.mark.parametrize(
    "real",
    [
        {},
        {0: Fraction(1, 2), 7: 3},
        {4: -2, 5: Fraction(3, 5), 12: 1},
    ]
)
def test_extended_bfield_is_isotropic(lattice, real):
    """
    """
    b = ComplexVector(lattice, _vector(lattice, real), _vector(lattice, {4: 1, 5: 1}))
    v = extend_bfield(b)
    assert v.lattice.rank == lattice.rank + 2
    assert v.bilinear(v) == (0, 0)
    assert v.hermitian(v) == (2 * b.imag.norm, 0)
    assert v.real.coords[-2] == 1
    assert v.imag.coords[-2] == 0


def test_four_plane_of_orthogonal_data(lattice, omega):
    """
    """
    b = BField(ComplexVector(lattice, _vector(lattice, {}), _vector(lattice, {4: 1, 5: 1})))
    plane = four_plane(omega, b)
    assert plane.gram == [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]
    assert plane.orthogonal
    assert plane.is_positive
    assert plane.leading_minors() == [2, 4, 8, 16]
    assert len(plane.matrix()) == 4
    assert len(plane.matrix()[0]) == 24


def test_four_plane_reports_non_orthogonal_planes(lattice, omega):
    """
    """
    # la parte reale di b si accoppia con Re omega
    b = ComplexVector(lattice, _vector(lattice, {0: 1}), _vector(lattice, {4: 1, 5: 1}))
    plane = four_plane(omega, b)
    assert not plane.orthogonal
    assert plane.is_positive


def test_four_plane_overlap_is_not_positive(lattice, omega):
    """
    """
    b = ComplexVector(lattice, _vector(lattice, {}), _vector(lattice, {2: 1, 3: 1}))
    with pytest.raises(NotPositiveFourPlane):
        four_plane(omega, b)


@pytest.mark.parametrize(
    "real,imag",
    [
        ({0: 1, 1: 1}, {0: 1, 1: 1}),
        ({0: 1, 1: -1}, {2: 1, 3: -1}),
        ({0: 1}, {}),
    ]
)
def test_riemann_relations(lattice, real, imag):
    """
    """
    omega = ComplexVector(lattice, _vector(lattice, real), _vector(lattice, imag))
    b = ComplexVector(lattice, _vector(lattice, {}), _vector(lattice, {4: 1, 5: 1}))
    with pytest.raises(RiemannRelationViolated):
        four_plane(omega, b)
